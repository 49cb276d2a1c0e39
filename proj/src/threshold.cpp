#include "pob/threshold.hpp"

#include <algorithm>
#include <bit>

namespace pob {

namespace {

// Pseudo-positions run 1..9 from the left; bit indices run 8..0 from the
// right. Position i is bit 9-i.
unsigned bit_index(unsigned position) { return 9 - position; }

BitString unrank_share(std::uint8_t value) {
    return pob_from_value(share_params(), value).bits();
}

}  // namespace

unsigned derive_insertion_position(std::uint8_t slot2_value) {
    if (slot2_value >= kShareValueCount) {
        throw RangeError("share value must be below 126");
    }
    return slot2_value / 14u + 1u;  // == ceil((value+1)/14)
}

BitString expand_with_parity(std::uint8_t secret, unsigned r) {
    if (r < 1 || r > 9) {
        throw RangeError("insertion position must be in 1..9");
    }
    const bool odd = (std::popcount(static_cast<unsigned>(secret)) % 2) != 0;
    std::uint64_t bits = 0;
    for (unsigned i = 1; i <= 9; ++i) {
        bool b;
        if (i < r) {
            b = (secret >> (8 - i)) & 1u;  // K_i
        } else if (i > r) {
            b = (secret >> (8 - (i - 1))) & 1u;  // K_{i-1}
        } else {
            b = odd;
        }
        if (b) {
            bits |= std::uint64_t{1} << bit_index(i);
        }
    }
    return BitString(9, bits);
}

std::uint8_t remove_inserted_bit(const BitString& expanded, unsigned r) {
    if (expanded.length() != 9) {
        throw RangeError("expanded string must have 9 bits");
    }
    if (r < 1 || r > 9) {
        throw RangeError("insertion position must be in 1..9");
    }
    std::uint8_t secret = 0;
    for (unsigned i = 1; i <= 8; ++i) {
        const unsigned j = (i >= r) ? i + 1 : i;
        if (expanded.bit(bit_index(j))) {
            secret |= static_cast<std::uint8_t>(1u << (8 - i));
        }
    }
    return secret;
}

PartialBits interleave_partial_a1(const BitString& w) {
    if (w.length() != 9) {
        throw RangeError("interleave input must have 9 bits");
    }
    if (parity(w) != Parity::even) {
        throw RangeError("interleave input must have even parity");
    }
    PartialBits partial;
    unsigned ones_seen = 0;
    for (unsigned i = 1; i <= 9; ++i) {
        const unsigned j = bit_index(i);
        if (w.bit(j)) {
            ++ones_seen;
            partial.assigned_mask |= static_cast<std::uint16_t>(1u << j);
            if (ones_seen % 2 == 1) {
                partial.ones_mask |= static_cast<std::uint16_t>(1u << j);
            }
        }
    }
    return partial;
}

PobNumber complete_a1(const PartialBits& partial, RandomSource& rng) {
    if ((partial.ones_mask & ~partial.assigned_mask) != 0) {
        throw RangeError("pinned ones must be assigned positions");
    }
    const unsigned pinned_ones = static_cast<unsigned>(std::popcount(partial.ones_mask));
    if (pinned_ones > 4) {
        throw RangeError("more than four pinned ones cannot complete to POB(9,4)");
    }
    // Free positions in left-to-right scan order.
    std::vector<unsigned> free_bits;
    for (unsigned i = 1; i <= 9; ++i) {
        const unsigned j = bit_index(i);
        if (((partial.assigned_mask >> j) & 1u) == 0) {
            free_bits.push_back(j);
        }
    }
    std::uint64_t bits = partial.ones_mask;
    unsigned needed = 4 - pinned_ones;
    if (needed > free_bits.size()) {
        throw RangeError("not enough free positions to complete to four ones");
    }
    while (needed > 0) {
        const std::size_t pick = rng.uniform_below(free_bits.size());
        bits |= std::uint64_t{1} << free_bits[pick];
        free_bits.erase(free_bits.begin() + static_cast<std::ptrdiff_t>(pick));
        --needed;
    }
    return PobNumber(share_params(), BitString(9, bits));
}

std::vector<ShareValue> share_byte(std::uint8_t secret, std::size_t n, RandomSource& rng) {
    if (n < 3) {
        throw ArityError("the byte scheme needs n >= 3 slots");
    }
    // Slots 2..n-1 first, in slot order; slot 2 fixes the insertion point.
    std::vector<BitString> strings(n + 1);
    std::vector<std::uint8_t> values(n + 1, 0);
    for (std::size_t i = 2; i <= n - 1; ++i) {
        values[i] = static_cast<std::uint8_t>(rng.uniform_below(kShareValueCount));
        strings[i] = unrank_share(values[i]);
    }
    const unsigned r = derive_insertion_position(values[2]);
    BitString w = expand_with_parity(secret, r);
    for (std::size_t i = 2; i <= n - 1; ++i) {
        w = w ^ strings[i];
    }
    const PobNumber a1 = complete_a1(interleave_partial_a1(w), rng);
    strings[1] = a1.bits();
    strings[n] = w ^ strings[1];

    std::vector<ShareValue> shares;
    shares.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        const PobNumber number(share_params(), strings[i]);
        shares.push_back(ShareValue{static_cast<std::uint32_t>(i),
                                    static_cast<std::uint8_t>(pob_value(number))});
    }
    return shares;
}

ByteRecovery recover_byte(std::span<const ShareValue> shares) {
    const std::size_t n = shares.size();
    if (n < 3) {
        throw ArityError("recovery needs n >= 3 shares");
    }
    std::vector<std::uint8_t> by_slot(n + 1, 0);
    std::vector<bool> seen(n + 1, false);
    for (const ShareValue& share : shares) {
        if (share.value >= kShareValueCount) {
            throw RangeError("invalid share: value " + std::to_string(share.value) +
                             " is not below 126");
        }
        if (share.index < 1 || share.index > n) {
            throw MalformedInputError("share slot " + std::to_string(share.index) +
                                      " out of range 1.." + std::to_string(n));
        }
        if (seen[share.index]) {
            throw MalformedInputError("duplicate share slot " + std::to_string(share.index));
        }
        seen[share.index] = true;
        by_slot[share.index] = share.value;
    }
    // All slots are present: n shares, no duplicates, all in range.

    const unsigned r = derive_insertion_position(by_slot[2]);
    BitString t(9, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        t = t ^ unrank_share(by_slot[i]);
    }
    ByteRecovery out;
    out.parity_warning = (parity(t) == Parity::odd);
    out.secret = remove_inserted_bit(t, r);
    return out;
}

std::vector<ShareVector> share_secret(std::span<const std::uint8_t> secret, std::size_t n,
                                      RandomSource& rng) {
    if (n < 3) {
        throw ArityError("the byte scheme needs n >= 3 slots");
    }
    if (secret.empty()) {
        throw MalformedInputError("cannot share an empty secret");
    }
    std::vector<ShareVector> vectors(n);
    for (std::size_t i = 0; i < n; ++i) {
        vectors[i].index = static_cast<std::uint32_t>(i + 1);
        vectors[i].values.reserve(secret.size());
    }
    for (std::uint8_t byte : secret) {
        const std::vector<ShareValue> shares = share_byte(byte, n, rng);
        for (std::size_t i = 0; i < n; ++i) {
            vectors[i].values.push_back(shares[i].value);
        }
    }
    return vectors;
}

std::vector<ShareVector> share_secret(const std::vector<std::uint8_t>& secret, std::size_t n,
                                      RandomSource& rng) {
    return share_secret(std::span<const std::uint8_t>(secret), n, rng);
}

SecretRecovery recover_secret(std::span<const ShareVector> shares) {
    const std::size_t n = shares.size();
    if (n < 3) {
        throw ArityError("recovery needs n >= 3 share vectors");
    }
    std::vector<const ShareVector*> by_slot(n + 1, nullptr);
    for (const ShareVector& vec : shares) {
        if (vec.index < 1 || vec.index > n) {
            throw MalformedInputError("share slot " + std::to_string(vec.index) +
                                      " out of range 1.." + std::to_string(n));
        }
        if (by_slot[vec.index] != nullptr) {
            throw MalformedInputError("duplicate share slot " + std::to_string(vec.index));
        }
        by_slot[vec.index] = &vec;
    }
    const std::size_t length = by_slot[1]->values.size();
    for (std::size_t i = 1; i <= n; ++i) {
        if (by_slot[i]->values.size() != length) {
            throw MalformedInputError("share vectors disagree on secret length");
        }
    }

    SecretRecovery out;
    out.secret.reserve(length);
    std::vector<ShareValue> column(n);
    for (std::size_t b = 0; b < length; ++b) {
        for (std::size_t i = 1; i <= n; ++i) {
            column[i - 1] = ShareValue{static_cast<std::uint32_t>(i), by_slot[i]->values[b]};
        }
        const ByteRecovery rec = recover_byte(column);
        out.secret.push_back(rec.secret);
        if (rec.parity_warning) {
            ++out.parity_warnings;
        }
    }
    return out;
}

}  // namespace pob
