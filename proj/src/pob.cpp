#include "pob/pob.hpp"

#include <algorithm>

namespace pob {

namespace {
constexpr std::uint64_t kEnumerationGuard = 1'000'000;
}

PobParams::PobParams(unsigned n_, unsigned r_) : n(n_), r(r_) {
    if (r < 1 || r > n) {
        throw RangeError("POB(n,r) needs 1 <= r <= n, got n=" + std::to_string(n) +
                         " r=" + std::to_string(r));
    }
    if (n > 64) {
        throw RangeError("POB(n,r) supports n <= 64, got n=" + std::to_string(n));
    }
}

BitString::BitString(unsigned length, std::uint64_t bits) : length_(length), bits_(bits) {
    if (length_ > 64) {
        throw RangeError("bit string longer than 64");
    }
    if (length_ < 64 && (bits_ >> length_) != 0) {
        throw RangeError("bit string value does not fit declared length");
    }
}

BitString BitString::parse(std::string_view text) {
    if (text.empty() || text.size() > 64) {
        throw MalformedInputError("bit string text must have 1..64 characters");
    }
    std::uint64_t bits = 0;
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw MalformedInputError("bit string text may contain only 0 and 1");
        }
        bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return BitString(static_cast<unsigned>(text.size()), bits);
}

BitString BitString::with_bit(unsigned index, bool value) const {
    if (index >= length_) {
        throw RangeError("bit index out of range");
    }
    std::uint64_t bits = bits_;
    if (value) {
        bits |= std::uint64_t{1} << index;
    } else {
        bits &= ~(std::uint64_t{1} << index);
    }
    return BitString(length_, bits);
}

std::string BitString::to_string() const {
    std::string out(length_, '0');
    for (unsigned i = 0; i < length_; ++i) {
        if (bit(i)) {
            out[length_ - 1 - i] = '1';
        }
    }
    return out;
}

BitString BitString::operator^(const BitString& other) const {
    if (length_ != other.length_) {
        throw RangeError("XOR of bit strings with different lengths");
    }
    return BitString(length_, bits_ ^ other.bits_);
}

Parity parity(const BitString& x) {
    return (x.popcount() % 2 == 0) ? Parity::even : Parity::odd;
}

PobNumber::PobNumber(PobParams params, BitString bits) : params_(params), bits_(bits) {
    if (bits_.length() != params_.n) {
        throw RangeError("POB bit string length does not match n");
    }
    if (bits_.popcount() != params_.r) {
        throw RangeError("POB bit string must contain exactly r ones");
    }
}

std::uint64_t pob_value(const PobNumber& x) {
    const BitString& b = x.bits();
    std::uint64_t value = 0;
    unsigned ones_so_far = 0;  // p_j includes b_j itself
    for (unsigned j = 0; j < b.length(); ++j) {
        if (b.bit(j)) {
            ++ones_so_far;
            value += binomial(j, ones_so_far);
        }
    }
    return value;
}

PobNumber pob_from_value(PobParams params, std::uint64_t value) {
    if (value >= params.value_count()) {
        throw RangeError("POB value " + std::to_string(value) + " out of range for POB(" +
                         std::to_string(params.n) + "," + std::to_string(params.r) + ")");
    }
    std::uint64_t remaining = value;
    std::uint64_t bits = 0;
    unsigned j = params.n - 1;
    for (unsigned k = params.r; k >= 1; --k) {
        while (binomial(j, k) > remaining) {
            --j;  // C(k-1,k) = 0 <= remaining, so the scan always stops
        }
        bits |= std::uint64_t{1} << j;
        remaining -= binomial(j, k);
        if (j > 0) {
            --j;
        }
    }
    return PobNumber(params, BitString(params.n, bits));
}

std::vector<PobNumber> enumerate_all(PobParams params) {
    const std::uint64_t count = params.value_count();
    if (count > kEnumerationGuard) {
        throw GuardError("enumeration of " + std::to_string(count) +
                         " POB strings exceeds the desk-scale guard");
    }
    std::vector<PobNumber> out;
    out.reserve(count);
    // Walk r-subsets of bit positions in colexicographic order, which is
    // exactly increasing pob_value order.
    std::vector<unsigned> pos(params.r);
    for (unsigned i = 0; i < params.r; ++i) {
        pos[i] = i;
    }
    for (;;) {
        std::uint64_t bits = 0;
        for (unsigned p : pos) {
            bits |= std::uint64_t{1} << p;
        }
        out.emplace_back(params, BitString(params.n, bits));
        unsigned i = 0;
        while (i < params.r) {
            const unsigned ceiling = (i + 1 < params.r) ? pos[i + 1] : params.n;
            if (pos[i] + 1 < ceiling) {
                break;
            }
            ++i;
        }
        if (i == params.r) {
            return out;
        }
        ++pos[i];
        for (unsigned k = 0; k < i; ++k) {
            pos[k] = k;
        }
    }
}

}  // namespace pob
