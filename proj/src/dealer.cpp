#include "pob/dealer.hpp"

#include <algorithm>
#include <map>

namespace pob {

namespace {

constexpr std::uint32_t kMinInnerArity = 3;
constexpr std::uint32_t kMaxColumns = 65535;  // wire format carries m in 16 bits

}  // namespace

std::string scheme_id_hex(const SchemeId& id) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(32);
    for (std::uint8_t byte : id) {
        out.push_back(digits[byte >> 4]);
        out.push_back(digits[byte & 0xF]);
    }
    return out;
}

DealResult deal(std::span<const std::uint8_t> secret, const MinimalAccessStructure& a,
                RandomSource& rng) {
    if (secret.empty()) {
        throw MalformedInputError("cannot deal an empty secret");
    }
    const MaximalForbiddenFamily forbidden = maximal_unauthorized(a);
    const CumulativeArray array = cumulative_array(forbidden);
    const std::uint32_t real_columns = array.m();
    if (real_columns > kMaxColumns) {
        throw GuardError("policy needs " + std::to_string(real_columns) +
                         " primitive shares; the bundle format caps m at 65535");
    }
    const std::uint32_t padding =
        real_columns < kMinInnerArity ? kMinInnerArity - real_columns : 0;
    const std::uint32_t m = real_columns + padding;

    DealResult result;
    result.meta.m = m;
    result.meta.padding_count = padding;
    result.meta.secret_length = secret.size();
    result.meta.roster = a.roster().names();
    result.meta.column_labels = array.column_labels;
    for (std::uint8_t& byte : result.meta.scheme_id) {
        byte = rng.byte();
    }

    std::vector<ShareVector> primitives = share_secret(secret, m, rng);

    result.bundles.reserve(a.roster().size());
    for (unsigned i = 0; i < a.roster().size(); ++i) {
        ParticipantBundle bundle;
        bundle.scheme_id = result.meta.scheme_id;
        bundle.participant = a.roster().name(i);
        for (std::uint32_t j = 1; j <= m; ++j) {
            const bool padded = j > real_columns;
            if (padded || array.matrix.at(i, j - 1)) {
                bundle.records.push_back(primitives[j - 1]);
            }
        }
        result.bundles.push_back(std::move(bundle));
    }
    return result;
}

DealResult deal(const std::vector<std::uint8_t>& secret, const MinimalAccessStructure& a,
                RandomSource& rng) {
    return deal(std::span<const std::uint8_t>(secret), a, rng);
}

CombineReport combine(std::span<const ParticipantBundle> bundles, const SchemeMetadata& meta) {
    std::map<std::uint32_t, const ShareVector*> pooled;
    for (const ParticipantBundle& bundle : bundles) {
        if (bundle.scheme_id != meta.scheme_id) {
            throw MalformedInputError("bundle from participant '" + bundle.participant +
                                      "' belongs to a different scheme");
        }
        for (const ShareVector& record : bundle.records) {
            if (record.index < 1 || record.index > meta.m) {
                throw MalformedInputError("primitive index " + std::to_string(record.index) +
                                          " out of range 1.." + std::to_string(meta.m));
            }
            if (record.values.size() != meta.secret_length) {
                throw MalformedInputError("record " + std::to_string(record.index) +
                                          " does not match the declared secret length");
            }
            auto [it, inserted] = pooled.emplace(record.index, &record);
            if (!inserted && *it->second != record) {
                throw ConflictError("conflicting payloads for primitive index " +
                                    std::to_string(record.index));
            }
        }
    }

    CombineReport report;
    for (const auto& [index, record] : pooled) {
        report.present.push_back(index);
    }
    for (std::uint32_t j = 1; j <= meta.m; ++j) {
        if (!pooled.count(j)) {
            report.missing.push_back(j);
        }
    }
    if (!report.missing.empty()) {
        report.success = false;
        return report;
    }

    std::vector<ShareVector> complete;
    complete.reserve(meta.m);
    for (const auto& [index, record] : pooled) {
        complete.push_back(*record);
    }
    SecretRecovery recovery = recover_secret(complete);
    report.success = true;
    report.secret = std::move(recovery.secret);
    report.parity_warnings = recovery.parity_warnings;
    return report;
}

EquivalenceReport authorized_equivalence_check(const MinimalAccessStructure& a,
                                               std::size_t trials, RandomSource& rng) {
    if (a.roster().size() > 5) {
        throw GuardError("exhaustive equivalence check is limited to 5 participants");
    }
    if (trials == 0) {
        trials = 1;
    }
    EquivalenceReport report;
    report.trials = trials;
    const SubsetMask full = a.roster().full_mask();
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const std::vector<std::uint8_t> secret{rng.byte()};
        const DealResult dealt = deal(secret, a, rng);
        for (SubsetMask subset = 0; subset <= full; ++subset) {
            std::vector<ParticipantBundle> pool;
            for (unsigned i = 0; i < a.roster().size(); ++i) {
                if ((subset >> i) & 1u) {
                    pool.push_back(dealt.bundles[i]);
                }
            }
            const CombineReport combined = combine(pool, dealt.meta);
            const bool authorized = is_authorized(subset, a);
            const bool recovered = combined.success && combined.secret == secret;
            ++report.subsets_checked;
            if (authorized != recovered) {
                report.counterexamples.push_back(subset);
            }
        }
    }
    return report;
}

}  // namespace pob
