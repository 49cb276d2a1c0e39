#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pob/access.hpp"
#include "pob/dealer.hpp"
#include "pob/pob.hpp"
#include "pob/threshold.hpp"

namespace pob {

/// Brute-force inversion of the byte scheme: every secret byte an
/// adversary holding `known` shares of an n-slot dealing cannot rule out.
/// Sweeps all 126^missing completions; refuses enumerations above 10^7.
std::vector<std::uint8_t> candidate_secrets(std::span<const ShareValue> known, std::size_t n);

struct LeakageReport {
    std::string coalition;                      // human-readable member list
    std::vector<std::uint32_t> known_indices;   // primitive indices the coalition pools
    std::vector<std::uint32_t> missing_indices;
    std::vector<std::uint16_t> candidate_counts;  // per secret byte, <= 256
    std::uint16_t min_count = 0;
    std::uint16_t max_count = 0;
    double mean_count = 0.0;
    std::uint64_t enumeration_size = 0;         // completions swept per byte
    bool true_secret_always_candidate = false;
};

/// Quantify what an unauthorized coalition learns: deal the secret, pool
/// the coalition's primitive shares, and count the surviving candidate
/// secrets per byte. Authorized coalitions are rejected.
LeakageReport leakage_audit(const MinimalAccessStructure& policy, SubsetMask coalition,
                            std::span<const std::uint8_t> secret, RandomSource& rng);

struct CrosscheckReport {
    std::uint64_t checked = 0;
    std::uint64_t passed = 0;

    bool ok() const { return checked == passed && checked > 0; }
};

/// Exhaustively confirm the rank/unrank bijection for one parameter set:
/// enumeration order matches values 0..C(n,r)-1 and unranking inverts it.
CrosscheckReport oracle_crosscheck(PobParams params);

/// Confirm the transversal-based maximal-unauthorized path against the
/// 2^n subset scan for one structure.
CrosscheckReport access_oracle_crosscheck(const MinimalAccessStructure& a);

}  // namespace pob
