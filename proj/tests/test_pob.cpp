#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"

#include "pob/binomial.hpp"
#include "pob/pob.hpp"

namespace {

// Independent oracle: multiplicative form, exact for the small arguments
// used here because the running product is always an integer.
std::uint64_t slow_binomial(unsigned j, unsigned k) {
    if (k > j) return 0;
    std::uint64_t result = 1;
    for (unsigned i = 0; i < k; ++i) {
        result = result * (j - i) / (i + 1);
    }
    return result;
}

// Independent oracle: transcribe the defining sum directly from the text
// form, recounting the prefix ones from scratch for every digit.
std::uint64_t slow_pob_value(const std::string& text) {
    const unsigned n = static_cast<unsigned>(text.size());
    std::uint64_t total = 0;
    for (unsigned j = 0; j < n; ++j) {  // j = bit index, 0 = rightmost digit
        if (text[n - 1 - j] != '1') continue;
        unsigned prefix_ones = 0;
        for (unsigned i = 0; i <= j; ++i) {
            if (text[n - 1 - i] == '1') ++prefix_ones;
        }
        total += slow_binomial(j, prefix_ones);
    }
    return total;
}

}  // namespace

TEST_CASE("binomial table matches a multiplicative oracle") {
    for (unsigned j = 0; j <= 30; ++j) {
        for (unsigned k = 0; k <= j + 2; ++k) {
            CAPTURE(j);
            CAPTURE(k);
            CHECK(pob::binomial(j, k) == slow_binomial(j, k));
        }
    }
}

TEST_CASE("binomial edge values") {
    CHECK(pob::binomial(0, 0) == 1);
    CHECK(pob::binomial(0, 1) == 0);
    CHECK(pob::binomial(8, 4) == 70);
    CHECK(pob::binomial(9, 4) == 126);
    CHECK(pob::binomial(64, 32) == 1832624140942590534ULL);
}

TEST_CASE("binomial table rejects ranges that would overflow") {
    CHECK_NOTHROW(pob::BinomialTable(67));
    CHECK_THROWS_AS(pob::BinomialTable(68), pob::RangeError);
    const pob::BinomialTable small(5);
    CHECK(small(5, 2) == 10);
    CHECK_THROWS_AS(small(6, 2), pob::RangeError);
}

TEST_CASE("pob params validation") {
    CHECK_NOTHROW(pob::PobParams(1, 1));
    CHECK_NOTHROW(pob::PobParams(64, 32));
    CHECK_THROWS_AS(pob::PobParams(9, 0), pob::RangeError);
    CHECK_THROWS_AS(pob::PobParams(9, 10), pob::RangeError);
    CHECK_THROWS_AS(pob::PobParams(65, 1), pob::RangeError);
    CHECK(pob::PobParams(9, 4).value_count() == 126);
}

TEST_CASE("bit string parse, print and plain binary reading") {
    const pob::BitString b = pob::BitString::parse("001110100");
    CHECK(b.length() == 9);
    CHECK(b.to_string() == "001110100");
    CHECK(b.as_plain_binary() == 116);
    CHECK(b.popcount() == 4);
    CHECK(b.bit(2));
    CHECK_FALSE(b.bit(0));

    CHECK(pob::BitString::parse("111100000").as_plain_binary() == 480);
    CHECK(pob::BitString::parse("000001111").as_plain_binary() == 15);
    CHECK(pob::BitString::parse("0").as_plain_binary() == 0);

    CHECK_THROWS_AS(pob::BitString::parse(""), pob::MalformedInputError);
    CHECK_THROWS_AS(pob::BitString::parse("01x"), pob::MalformedInputError);
}

TEST_CASE("bit string xor and with_bit") {
    const pob::BitString a = pob::BitString::parse("1100");
    const pob::BitString b = pob::BitString::parse("1010");
    CHECK((a ^ b).to_string() == "0110");
    CHECK(a.with_bit(0, true).to_string() == "1101");
    CHECK(a.with_bit(3, false).to_string() == "0100");
    CHECK_THROWS_AS(a ^ pob::BitString::parse("11000"), pob::RangeError);
}

TEST_CASE("parity of bit strings") {
    CHECK(pob::parity(pob::BitString::parse("0000")) == pob::Parity::even);
    CHECK(pob::parity(pob::BitString::parse("1001")) == pob::Parity::even);
    CHECK(pob::parity(pob::BitString::parse("1101")) == pob::Parity::odd);
}

TEST_CASE("pob number validates its ones count") {
    const pob::PobParams p94(9, 4);
    CHECK_NOTHROW(pob::PobNumber(p94, pob::BitString::parse("001110100")));
    CHECK_THROWS_AS(pob::PobNumber(p94, pob::BitString::parse("001110101")),
                    pob::RangeError);
    CHECK_THROWS_AS(pob::PobNumber(p94, pob::BitString::parse("0011101")), pob::RangeError);
}

TEST_CASE("pob value on pinned strings") {
    const pob::PobParams p94(9, 4);
    auto value = [&](const char* text) {
        return pob::pob_value(pob::PobNumber(p94, pob::BitString::parse(text)));
    };
    CHECK(value("001110100") == 33);
    CHECK(value("010100101") == 46);
    CHECK(value("101100010") == 101);
    CHECK(value("010101001") == 48);
    CHECK(value("110010100") == 113);
    CHECK(value("000001111") == 0);
    CHECK(value("111100000") == 125);
}

TEST_CASE("pob value in a small system") {
    const pob::PobParams p42(4, 2);
    auto value = [&](const char* text) {
        return pob::pob_value(pob::PobNumber(p42, pob::BitString::parse(text)));
    };
    CHECK(value("0011") == 0);
    CHECK(value("0101") == 1);
    CHECK(value("0110") == 2);
    CHECK(value("1001") == 3);
    CHECK(value("1010") == 4);
    CHECK(value("1100") == 5);

    // to_string marks the representation
    CHECK(pob::PobNumber(p42, pob::BitString::parse("0110")).to_string() == "0110p");
}

TEST_CASE("unranking inverts pinned values") {
    const pob::PobParams p94(9, 4);
    CHECK(pob::pob_from_value(p94, 33).bits().to_string() == "001110100");
    CHECK(pob::pob_from_value(p94, 0).bits().to_string() == "000001111");
    CHECK(pob::pob_from_value(p94, 113).bits().to_string() == "110010100");
    CHECK(pob::pob_from_value(p94, 125).bits().to_string() == "111100000");
    CHECK_THROWS_AS(pob::pob_from_value(p94, 126), pob::RangeError);
}

TEST_CASE("rank and unrank are mutually inverse across many systems") {
    for (unsigned n = 1; n <= 12; ++n) {
        for (unsigned r = 1; r <= n; ++r) {
            const pob::PobParams params(n, r);
            const std::uint64_t count = params.value_count();
            std::set<std::uint64_t> seen;
            for (std::uint64_t v = 0; v < count; ++v) {
                const pob::PobNumber number = pob::pob_from_value(params, v);
                CHECK(number.bits().popcount() == r);
                CHECK(pob::pob_value(number) == v);
                seen.insert(number.bits().as_plain_binary());
            }
            CAPTURE(n);
            CAPTURE(r);
            CHECK(seen.size() == count);  // distinct strings, so a bijection
        }
    }
}

TEST_CASE("pob value agrees with the text-form oracle") {
    // Sweep every 6-bit string with three ones and every 9-bit string with
    // four ones; both the value formula and its inverse must agree with a
    // from-scratch transcription of the defining sum.
    for (unsigned n : {6u, 9u}) {
        const unsigned r = n == 6 ? 3u : 4u;
        const pob::PobParams params(n, r);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            if (static_cast<unsigned>(std::popcount(mask)) != r) continue;
            const pob::PobNumber number(params, pob::BitString(n, mask));
            CHECK(pob::pob_value(number) == slow_pob_value(number.bits().to_string()));
        }
    }
}

TEST_CASE("enumerate_all lists strings in value order") {
    const std::vector<pob::PobNumber> all94 = pob::enumerate_all(pob::PobParams(9, 4));
    REQUIRE(all94.size() == 126);
    for (std::uint64_t v = 0; v < all94.size(); ++v) {
        CHECK(pob::pob_value(all94[v]) == v);
    }
    CHECK(all94.front().bits().to_string() == "000001111");
    CHECK(all94.back().bits().to_string() == "111100000");

    const std::vector<pob::PobNumber> trivial = pob::enumerate_all(pob::PobParams(1, 1));
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].bits().to_string() == "1");
}

TEST_CASE("enumerate_all refuses oversized systems") {
    CHECK_THROWS_AS(pob::enumerate_all(pob::PobParams(40, 20)), pob::GuardError);
}
