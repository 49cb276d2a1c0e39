#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "doctest.h"

#include "pob/container.hpp"
#include "pob/dealer.hpp"

namespace {

pob::MinimalAccessStructure example_structure() {
    return pob::MinimalAccessStructure(
        pob::ParticipantRoster({"P1", "P2", "P3", "P4"}), {0b0011, 0b1100});
}

std::vector<std::uint32_t> held_indices(const pob::ParticipantBundle& bundle) {
    std::vector<std::uint32_t> indices;
    for (const pob::ShareVector& record : bundle.records) {
        indices.push_back(record.index);
    }
    return indices;
}

std::vector<std::uint8_t> random_secret(std::size_t length, pob::RandomSource& rng) {
    std::vector<std::uint8_t> secret(length);
    for (std::uint8_t& byte : secret) {
        byte = rng.byte();
    }
    return secret;
}

}  // namespace

TEST_CASE("dealing the running example routes the documented indices") {
    pob::SeededRandomSource rng(11);
    const std::vector<std::uint8_t> secret{0xB6, 0x01, 0xFF};
    const pob::DealResult dealt = pob::deal(secret, example_structure(), rng);

    CHECK(dealt.meta.m == 4);
    CHECK(dealt.meta.padding_count == 0);
    CHECK(dealt.meta.secret_length == 3);
    CHECK(dealt.meta.roster == std::vector<std::string>{"P1", "P2", "P3", "P4"});
    CHECK(dealt.meta.column_labels ==
          std::vector<pob::SubsetMask>{0b0101, 0b1001, 0b0110, 0b1010});

    REQUIRE(dealt.bundles.size() == 4);
    CHECK(dealt.bundles[0].participant == "P1");
    CHECK(held_indices(dealt.bundles[0]) == std::vector<std::uint32_t>{3, 4});
    CHECK(held_indices(dealt.bundles[1]) == std::vector<std::uint32_t>{1, 2});
    CHECK(held_indices(dealt.bundles[2]) == std::vector<std::uint32_t>{2, 4});
    CHECK(held_indices(dealt.bundles[3]) == std::vector<std::uint32_t>{1, 3});
    for (const pob::ParticipantBundle& bundle : dealt.bundles) {
        CHECK(bundle.scheme_id == dealt.meta.scheme_id);
        for (const pob::ShareVector& record : bundle.records) {
            CHECK(record.values.size() == secret.size());
        }
    }
}

TEST_CASE("authorized subsets combine to the secret, others name the gap") {
    pob::SeededRandomSource rng(12);
    const std::vector<std::uint8_t> secret{0xB6};
    const pob::DealResult dealt = pob::deal(secret, example_structure(), rng);

    SUBCASE("authorized pair") {
        const std::vector<pob::ParticipantBundle> pool{dealt.bundles[0], dealt.bundles[1]};
        const pob::CombineReport report = pob::combine(pool, dealt.meta);
        CHECK(report.success);
        CHECK(report.secret == secret);
        CHECK(report.missing.empty());
        CHECK(report.present == std::vector<std::uint32_t>{1, 2, 3, 4});
        CHECK(report.parity_warnings == 0);
    }
    SUBCASE("forbidden pair misses exactly one primitive share") {
        const std::vector<pob::ParticipantBundle> pool{dealt.bundles[0], dealt.bundles[2]};
        const pob::CombineReport report = pob::combine(pool, dealt.meta);
        CHECK_FALSE(report.success);
        CHECK(report.secret.empty());
        CHECK(report.missing == std::vector<std::uint32_t>{1});
        CHECK(report.present == std::vector<std::uint32_t>{2, 3, 4});
    }
    SUBCASE("empty pool misses everything") {
        const pob::CombineReport report =
            pob::combine(std::vector<pob::ParticipantBundle>{}, dealt.meta);
        CHECK_FALSE(report.success);
        CHECK(report.missing == std::vector<std::uint32_t>{1, 2, 3, 4});
    }
    SUBCASE("duplicate holdings are tolerated when they agree") {
        const std::vector<pob::ParticipantBundle> pool{dealt.bundles[0], dealt.bundles[0],
                                                       dealt.bundles[1]};
        const pob::CombineReport report = pob::combine(pool, dealt.meta);
        CHECK(report.success);
        CHECK(report.secret == secret);
    }
}

TEST_CASE("combine rejects cross-dealing pools and conflicting payloads") {
    pob::SeededRandomSource rng(13);
    const std::vector<std::uint8_t> secret{1, 2, 3};
    const pob::DealResult first = pob::deal(secret, example_structure(), rng);
    const pob::DealResult second = pob::deal(secret, example_structure(), rng);
    CHECK(first.meta.scheme_id != second.meta.scheme_id);

    SUBCASE("mixed scheme ids") {
        const std::vector<pob::ParticipantBundle> pool{first.bundles[0], second.bundles[1]};
        CHECK_THROWS_AS(pob::combine(pool, first.meta), pob::MalformedInputError);
    }
    SUBCASE("same index, different payload") {
        std::vector<pob::ParticipantBundle> pool{first.bundles[0], first.bundles[3]};
        // Both hold primitive share 3; corrupt one copy.
        REQUIRE(pool[0].records[0].index == 3);
        REQUIRE(pool[1].records[1].index == 3);
        pool[1].records[1].values[0] ^= 1;
        CHECK_THROWS_AS(pob::combine(pool, first.meta), pob::ConflictError);
    }
    SUBCASE("record index beyond m") {
        std::vector<pob::ParticipantBundle> pool{first.bundles[0], first.bundles[1]};
        pool[0].records[0].index = 9;
        CHECK_THROWS_AS(pob::combine(pool, first.meta), pob::MalformedInputError);
    }
}

TEST_CASE("padding lifts small column counts to three") {
    // A dictatorship has a single maximal forbidden set, so two padding
    // columns appear and go to everyone.
    pob::SeededRandomSource rng(14);
    const pob::MinimalAccessStructure dictator(
        pob::ParticipantRoster({"boss", "aide"}), {0b01});
    const std::vector<std::uint8_t> secret{0x42, 0x43};
    const pob::DealResult dealt = pob::deal(secret, dictator, rng);
    CHECK(dealt.meta.m == 3);
    CHECK(dealt.meta.padding_count == 2);
    REQUIRE(dealt.bundles.size() == 2);
    CHECK(held_indices(dealt.bundles[0]) == std::vector<std::uint32_t>{1, 2, 3});
    CHECK(held_indices(dealt.bundles[1]) == std::vector<std::uint32_t>{2, 3});

    const pob::CombineReport alone =
        pob::combine(std::vector<pob::ParticipantBundle>{dealt.bundles[0]}, dealt.meta);
    CHECK(alone.success);
    CHECK(alone.secret == secret);

    const pob::CombineReport aide_only =
        pob::combine(std::vector<pob::ParticipantBundle>{dealt.bundles[1]}, dealt.meta);
    CHECK_FALSE(aide_only.success);
    CHECK(aide_only.missing == std::vector<std::uint32_t>{1});
}

TEST_CASE("single-participant policies still deal and combine") {
    pob::SeededRandomSource rng(15);
    const pob::MinimalAccessStructure solo(pob::ParticipantRoster({"only"}), {0b1});
    const std::vector<std::uint8_t> secret{9, 8, 7};
    const pob::DealResult dealt = pob::deal(secret, solo, rng);
    CHECK(dealt.meta.m == 3);
    CHECK(dealt.meta.padding_count == 2);
    CHECK(held_indices(dealt.bundles[0]) == std::vector<std::uint32_t>{1, 2, 3});
    const pob::CombineReport report = pob::combine(dealt.bundles, dealt.meta);
    CHECK(report.success);
    CHECK(report.secret == secret);
}

TEST_CASE("unanimous policy splits into one distinct index per participant") {
    pob::SeededRandomSource rng(16);
    const pob::MinimalAccessStructure unanimous = pob::threshold_structure(
        pob::ParticipantRoster({"a", "b", "c", "d", "e"}), 5);
    const pob::DealResult dealt = pob::deal(std::vector<std::uint8_t>{0x55}, unanimous, rng);
    CHECK(dealt.meta.m == 5);
    std::set<std::uint32_t> seen;
    for (const pob::ParticipantBundle& bundle : dealt.bundles) {
        const std::vector<std::uint32_t> held = held_indices(bundle);
        REQUIRE(held.size() == 1);
        seen.insert(held[0]);
    }
    CHECK(seen == std::set<std::uint32_t>{1, 2, 3, 4, 5});

    // Any four of the five must fail.
    std::vector<pob::ParticipantBundle> pool(dealt.bundles.begin(),
                                             dealt.bundles.end() - 1);
    CHECK_FALSE(pob::combine(pool, dealt.meta).success);
    CHECK(pob::combine(dealt.bundles, dealt.meta).success);
}

TEST_CASE("dealing is deterministic under a fixed seed") {
    const std::vector<std::uint8_t> secret{0xDE, 0xAD, 0xBE, 0xEF};
    pob::SeededRandomSource rng_a(777);
    pob::SeededRandomSource rng_b(777);
    const pob::DealResult a = pob::deal(secret, example_structure(), rng_a);
    const pob::DealResult b = pob::deal(secret, example_structure(), rng_b);
    CHECK(a.meta.scheme_id == b.meta.scheme_id);
    REQUIRE(a.bundles.size() == b.bundles.size());
    for (std::size_t i = 0; i < a.bundles.size(); ++i) {
        CHECK(a.bundles[i] == b.bundles[i]);
        CHECK(pob::encode_bundle(a.bundles[i], a.meta) ==
              pob::encode_bundle(b.bundles[i], b.meta));
    }
}

TEST_CASE("deal validates its inputs") {
    pob::SeededRandomSource rng(17);
    CHECK_THROWS_AS(pob::deal(std::vector<std::uint8_t>{}, example_structure(), rng),
                    pob::MalformedInputError);
}

TEST_CASE("combine succeeds exactly on authorized subsets") {
    pob::SeededRandomSource rng(18);
    SUBCASE("running example") {
        const pob::EquivalenceReport report =
            pob::authorized_equivalence_check(example_structure(), 3, rng);
        CHECK(report.consistent());
        CHECK(report.subsets_checked == 3 * 16);  // accumulated across trials
        CHECK(report.trials == 3);
    }
    SUBCASE("two of five") {
        const pob::MinimalAccessStructure a = pob::threshold_structure(
            pob::ParticipantRoster({"a", "b", "c", "d", "e"}), 2);
        const pob::EquivalenceReport report = pob::authorized_equivalence_check(a, 2, rng);
        CHECK(report.consistent());
        CHECK(report.subsets_checked == 2 * 32);
    }
    SUBCASE("guard on large rosters") {
        std::vector<std::string> names;
        for (int i = 0; i < 6; ++i) {
            names.push_back("p" + std::to_string(i));
        }
        const pob::MinimalAccessStructure a =
            pob::threshold_structure(pob::ParticipantRoster(names), 3);
        CHECK_THROWS_AS(pob::authorized_equivalence_check(a, 1, rng), pob::GuardError);
    }
}
