#include "pob/analysis.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace pob {

namespace {

constexpr std::uint64_t kCompletionGuard = 10'000'000;

}  // namespace

std::vector<std::uint8_t> candidate_secrets(std::span<const ShareValue> known, std::size_t n) {
    if (n < 3) {
        throw ArityError("the byte scheme needs n >= 3 slots");
    }
    std::vector<bool> have(n + 1, false);
    std::vector<ShareValue> slots(n);
    for (const ShareValue& share : known) {
        if (share.index < 1 || share.index > n) {
            throw MalformedInputError("known share slot out of range");
        }
        if (have[share.index]) {
            throw MalformedInputError("duplicate known share slot");
        }
        if (share.value >= kShareValueCount) {
            throw RangeError("invalid share: value must be below 126");
        }
        have[share.index] = true;
        slots[share.index - 1] = share;
    }
    std::vector<std::size_t> missing;
    for (std::size_t i = 1; i <= n; ++i) {
        if (!have[i]) {
            missing.push_back(i);
        }
    }
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < missing.size(); ++k) {
        total *= kShareValueCount;
        if (total > kCompletionGuard) {
            throw GuardError("completion sweep of 126^" + std::to_string(missing.size()) +
                             " exceeds the desk-scale guard");
        }
    }

    std::array<bool, 256> reachable{};
    std::vector<std::uint8_t> odometer(missing.size(), 0);
    for (std::uint64_t step = 0; step < total; ++step) {
        for (std::size_t k = 0; k < missing.size(); ++k) {
            slots[missing[k] - 1] =
                ShareValue{static_cast<std::uint32_t>(missing[k]), odometer[k]};
        }
        reachable[recover_byte(slots).secret] = true;
        for (std::size_t k = 0; k < missing.size(); ++k) {
            if (++odometer[k] < kShareValueCount) {
                break;
            }
            odometer[k] = 0;
        }
    }

    std::vector<std::uint8_t> candidates;
    for (unsigned byte = 0; byte < 256; ++byte) {
        if (reachable[byte]) {
            candidates.push_back(static_cast<std::uint8_t>(byte));
        }
    }
    return candidates;
}

LeakageReport leakage_audit(const MinimalAccessStructure& policy, SubsetMask coalition,
                            std::span<const std::uint8_t> secret, RandomSource& rng) {
    if (is_authorized(coalition, policy)) {
        throw PolicyError("coalition " + policy.roster().describe(coalition) +
                          " is authorized; the leakage audit covers forbidden sets only");
    }
    const DealResult dealt = deal(secret, policy, rng);
    const std::uint32_t m = dealt.meta.m;

    std::vector<bool> held(m + 1, false);
    for (unsigned i = 0; i < policy.roster().size(); ++i) {
        if ((coalition >> i) & 1u) {
            for (const ShareVector& record : dealt.bundles[i].records) {
                held[record.index] = true;
            }
        }
    }

    LeakageReport report;
    report.coalition = policy.roster().describe(coalition);
    for (std::uint32_t j = 1; j <= m; ++j) {
        (held[j] ? report.known_indices : report.missing_indices).push_back(j);
    }
    report.enumeration_size = 1;
    for (std::size_t k = 0; k < report.missing_indices.size(); ++k) {
        report.enumeration_size *= kShareValueCount;
    }

    std::vector<const ShareVector*> primitive_by_index(m + 1, nullptr);
    for (const ParticipantBundle& bundle : dealt.bundles) {
        for (const ShareVector& record : bundle.records) {
            primitive_by_index[record.index] = &record;
        }
    }

    report.true_secret_always_candidate = true;
    std::vector<ShareValue> known;
    for (std::size_t b = 0; b < secret.size(); ++b) {
        known.clear();
        for (std::uint32_t j : report.known_indices) {
            known.push_back(ShareValue{j, primitive_by_index[j]->values[b]});
        }
        const std::vector<std::uint8_t> candidates = candidate_secrets(known, m);
        report.candidate_counts.push_back(static_cast<std::uint16_t>(candidates.size()));
        if (!std::binary_search(candidates.begin(), candidates.end(), secret[b])) {
            report.true_secret_always_candidate = false;
        }
    }

    report.min_count = *std::min_element(report.candidate_counts.begin(),
                                         report.candidate_counts.end());
    report.max_count = *std::max_element(report.candidate_counts.begin(),
                                         report.candidate_counts.end());
    report.mean_count =
        std::accumulate(report.candidate_counts.begin(), report.candidate_counts.end(), 0.0) /
        static_cast<double>(report.candidate_counts.size());
    return report;
}

CrosscheckReport oracle_crosscheck(PobParams params) {
    CrosscheckReport report;
    const std::vector<PobNumber> all = enumerate_all(params);
    for (std::uint64_t value = 0; value < all.size(); ++value) {
        ++report.checked;
        if (pob_value(all[value]) == value && pob_from_value(params, value) == all[value]) {
            ++report.passed;
        }
    }
    return report;
}

CrosscheckReport access_oracle_crosscheck(const MinimalAccessStructure& a) {
    if (a.roster().size() > 12) {
        throw GuardError("oracle crosscheck is limited to 12 participants");
    }
    const MaximalForbiddenFamily oracle = maximal_unauthorized_oracle(a);
    const MaximalForbiddenFamily fast = maximal_unauthorized_fast(a);
    CrosscheckReport report;
    report.checked = 1;
    report.passed = (oracle.members == fast.members) ? 1 : 0;
    return report;
}

}  // namespace pob
