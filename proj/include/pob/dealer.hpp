#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pob/access.hpp"
#include "pob/random.hpp"
#include "pob/threshold.hpp"

namespace pob {

using SchemeId = std::array<std::uint8_t, 16>;

std::string scheme_id_hex(const SchemeId& id);

/// Everything a combiner needs to know about one dealing. Roster and
/// column labels are known to the dealer; bundles decoded from disk carry
/// only the wire fields, so those two may be empty there.
struct SchemeMetadata {
    SchemeId scheme_id{};
    std::vector<std::string> roster;
    std::uint32_t m = 0;                     // primitive share count, padding included
    std::vector<SubsetMask> column_labels;   // maximal forbidden sets, column order
    std::uint64_t secret_length = 0;
    std::uint32_t padding_count = 0;
};

/// One participant's holdings: the primitive share vectors whose
/// cumulative-array entry selects them, plus every padding index.
struct ParticipantBundle {
    SchemeId scheme_id{};
    std::string participant;
    std::vector<ShareVector> records;  // distinct primitive indices, ascending

    bool operator==(const ParticipantBundle&) const = default;
};

struct DealResult {
    SchemeMetadata meta;
    std::vector<ParticipantBundle> bundles;  // roster order
};

/// Deal a secret under a monotone access structure: build the cumulative
/// array, run the inner (m,m) byte scheme, and route primitive share j to
/// every participant whose row has a 1 in column j.
///
/// When fewer than three maximal forbidden sets exist, the column count is
/// padded to three and the padding shares go to everyone; this keeps the
/// inner scheme usable without changing which subsets can combine.
///
/// Randomness order: 16 scheme-id bytes, then the per-byte share draws.
DealResult deal(std::span<const std::uint8_t> secret, const MinimalAccessStructure& a,
                RandomSource& rng);

DealResult deal(const std::vector<std::uint8_t>& secret, const MinimalAccessStructure& a,
                RandomSource& rng);

struct CombineReport {
    bool success = false;
    std::vector<std::uint8_t> secret;          // filled on success
    std::vector<std::uint32_t> present;        // primitive indices pooled
    std::vector<std::uint32_t> missing;        // primitive indices absent
    std::size_t parity_warnings = 0;
};

/// Pool bundles and reconstruct. Succeeds iff every primitive index 1..m
/// is present; otherwise reports the missing ones. Duplicate indices must
/// agree payload-for-payload.
CombineReport combine(std::span<const ParticipantBundle> bundles, const SchemeMetadata& meta);

struct EquivalenceReport {
    std::uint32_t subsets_checked = 0;
    std::size_t trials = 0;
    std::vector<SubsetMask> counterexamples;

    bool consistent() const { return counterexamples.empty(); }
};

/// Exhaustively confirm that combine succeeds exactly on authorized
/// subsets. Each trial deals a fresh random secret and tries every subset
/// of the roster. Guarded to n <= 5.
EquivalenceReport authorized_equivalence_check(const MinimalAccessStructure& a,
                                               std::size_t trials, RandomSource& rng);

}  // namespace pob
