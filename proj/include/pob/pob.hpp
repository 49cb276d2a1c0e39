#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pob/binomial.hpp"
#include "pob/error.hpp"

namespace pob {

enum class Parity { even, odd };

/// Parameters of a POB(n,r) number system: bit strings of length n holding
/// exactly r ones. Values range over [0, C(n,r)).
struct PobParams {
    unsigned n = 0;
    unsigned r = 0;

    PobParams(unsigned n_, unsigned r_);

    std::uint64_t value_count() const { return binomial(n, r); }

    bool operator==(const PobParams&) const = default;
};

/// Fixed-length bit string b_{n-1} ... b_0. Index 0 is the rightmost digit;
/// the stored word doubles as the plain base-2 reading of the string.
class BitString {
public:
    BitString() = default;
    BitString(unsigned length, std::uint64_t bits);

    /// Parse "001110100"-style text, leftmost character = b_{n-1}.
    static BitString parse(std::string_view text);

    unsigned length() const { return length_; }
    bool bit(unsigned index) const { return (bits_ >> index) & 1u; }
    unsigned popcount() const { return static_cast<unsigned>(std::popcount(bits_)); }

    /// Standard base-2 value, b_{n-1} most significant.
    std::uint64_t as_plain_binary() const { return bits_; }

    BitString with_bit(unsigned index, bool value) const;

    std::string to_string() const;

    BitString operator^(const BitString& other) const;
    bool operator==(const BitString&) const = default;

private:
    unsigned length_ = 0;
    std::uint64_t bits_ = 0;
};

Parity parity(const BitString& x);

/// A validated POB number: the bit string carries exactly params.r ones.
class PobNumber {
public:
    PobNumber(PobParams params, BitString bits);

    const PobParams& params() const { return params_; }
    const BitString& bits() const { return bits_; }

    /// Debug text form with the trailing 'p' marker, e.g. "001110100p".
    std::string to_string() const { return bits_.to_string() + "p"; }

    bool operator==(const PobNumber&) const = default;

private:
    PobParams params_;
    BitString bits_;
};

/// Rank: V(B) = sum over set bits of C(j, p_j), where p_j counts the ones
/// in b_0..b_j inclusive.
std::uint64_t pob_value(const PobNumber& x);

/// Unrank: inverse of pob_value. Greedy over the combinatorial number
/// system in colexicographic order: for k = r down to 1, place the k-th
/// one-bit at the largest index j with C(j,k) <= remaining value.
PobNumber pob_from_value(PobParams params, std::uint64_t value);

/// All C(n,r) strings in increasing pob_value order. Test oracle; refuses
/// systems with more than 10^6 strings.
std::vector<PobNumber> enumerate_all(PobParams params);

}  // namespace pob
