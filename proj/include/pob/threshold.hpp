#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pob/pob.hpp"
#include "pob/random.hpp"

namespace pob {

/// Every share of the byte scheme lives in POB(9,4).
inline PobParams share_params() { return PobParams(9, 4); }

/// Number of POB(9,4) strings, C(9,4). Share values are below this.
inline constexpr std::uint8_t kShareValueCount = 126;

/// One participant slot's share of one secret byte. Slots are 1-based and
/// position-significant: slot 2's value determines the insertion position
/// during recovery.
struct ShareValue {
    std::uint32_t index = 0;      // participant slot, 1..n
    std::uint8_t value = 0;       // in [0, 126)

    bool operator==(const ShareValue&) const = default;
};

/// One slot's shares across a multi-byte secret, in secret-byte order.
struct ShareVector {
    std::uint32_t index = 0;
    std::vector<std::uint8_t> values;

    bool operator==(const ShareVector&) const = default;
};

/// Partially fixed 9-bit assignment produced while building the first
/// share string: bits at W's one-positions are pinned, the rest are free.
struct PartialBits {
    std::uint16_t assigned_mask = 0;  // which of b_8..b_0 are pinned
    std::uint16_t ones_mask = 0;      // pinned values (subset of assigned_mask)

    bool operator==(const PartialBits&) const = default;
};

/// r = ceil((value + 1) / 14), in 1..9. Each r corresponds to exactly 14
/// of the 126 share values.
unsigned derive_insertion_position(std::uint8_t slot2_value);

/// Expand the secret byte to 9 bits by inserting its parity bit at
/// position r (1-based from the left). The result always has even parity.
BitString expand_with_parity(std::uint8_t secret, unsigned r);

/// Inverse of expand_with_parity: drop the bit at position r.
std::uint8_t remove_inserted_bit(const BitString& expanded, unsigned r);

/// Pin bits of the first share string at the one-positions of w: scanning
/// left to right, the 1st, 3rd, 5th, ... one gets a 1, the others a 0.
/// Exactly popcount(w)/2 ones end up pinned.
PartialBits interleave_partial_a1(const BitString& w);

/// Fill the free positions so the result is a valid POB(9,4) number: the
/// missing ones are placed uniformly at random among the free positions,
/// drawn left to right without replacement.
PobNumber complete_a1(const PartialBits& partial, RandomSource& rng);

/// Share one byte among n slots (n >= 3). Consumes randomness in a fixed
/// order: one uniform_below(126) draw per slot 2..n-1, then the
/// completion draws for slot 1.
std::vector<ShareValue> share_byte(std::uint8_t secret, std::size_t n, RandomSource& rng);

struct ByteRecovery {
    std::uint8_t secret = 0;
    // Set when the XOR of the share strings has odd parity. Cannot happen
    // for in-range share values (each contributes exactly four ones);
    // reported anyway as a consistency signal.
    bool parity_warning = false;
};

/// Recover a byte from all n shares, slots 1..n each present exactly once
/// in any order.
ByteRecovery recover_byte(std::span<const ShareValue> shares);

struct SecretRecovery {
    std::vector<std::uint8_t> secret;
    std::size_t parity_warnings = 0;
};

/// Share a multi-byte secret: each byte is shared independently with
/// fresh randomness, so per-byte insertion positions vary.
std::vector<ShareVector> share_secret(std::span<const std::uint8_t> secret, std::size_t n,
                                      RandomSource& rng);

std::vector<ShareVector> share_secret(const std::vector<std::uint8_t>& secret, std::size_t n,
                                      RandomSource& rng);

SecretRecovery recover_secret(std::span<const ShareVector> shares);

}  // namespace pob
