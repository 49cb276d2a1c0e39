#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pob/error.hpp"

namespace pob {

/// Participant subsets are bitmasks over roster positions: participant i
/// (1-based) is bit i-1.
using SubsetMask = std::uint32_t;

inline constexpr unsigned kMaxParticipants = 20;  // brute-force guard

/// Ordered list of distinct participant names.
class ParticipantRoster {
public:
    explicit ParticipantRoster(std::vector<std::string> names);

    unsigned size() const { return static_cast<unsigned>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(unsigned position) const { return names_.at(position); }

    /// Position of a name; throws PolicyError for unknown names.
    unsigned index_of(const std::string& name) const;

    SubsetMask full_mask() const { return (SubsetMask{1} << size()) - 1; }

    /// Mask -> "{P1,P3}" style text using roster names.
    std::string describe(SubsetMask mask) const;

    bool operator==(const ParticipantRoster&) const = default;

private:
    std::vector<std::string> names_;
};

/// Order families canonically: lexicographic on the ascending participant
/// index sequence, so {1,3} < {1,4} < {2,3} < {2,4}.
bool canonical_mask_less(SubsetMask a, SubsetMask b);

/// Drop supersets; the result is an antichain with the same monotone
/// closure, canonically sorted.
std::vector<SubsetMask> minimize(std::vector<SubsetMask> family);

/// Antichain of minimal authorized subsets. Construction minimizes and
/// canonically sorts the given family; degenerate policies (empty family,
/// empty member) are rejected.
class MinimalAccessStructure {
public:
    MinimalAccessStructure(ParticipantRoster roster, std::vector<SubsetMask> family);

    const ParticipantRoster& roster() const { return roster_; }
    const std::vector<SubsetMask>& family() const { return family_; }

    /// True when minimization removed redundant members of the input.
    bool was_reduced() const { return was_reduced_; }

private:
    ParticipantRoster roster_;
    std::vector<SubsetMask> family_;
    bool was_reduced_ = false;
};

/// All (t,n)-threshold minimal sets: the t-subsets of the roster.
MinimalAccessStructure threshold_structure(ParticipantRoster roster, unsigned t);

/// True iff subset contains some minimal authorized set.
bool is_authorized(SubsetMask subset, const MinimalAccessStructure& a);

/// Inclusion-maximal unauthorized subsets, canonically sorted. May contain
/// the empty set (when every singleton is authorized).
struct MaximalForbiddenFamily {
    ParticipantRoster roster;
    std::vector<SubsetMask> members;

    unsigned m() const { return static_cast<unsigned>(members.size()); }
};

/// Reference path: scan all 2^n subsets, keep the maximal unauthorized
/// ones.
MaximalForbiddenFamily maximal_unauthorized_oracle(const MinimalAccessStructure& a);

/// Faster path: maximal unauthorized sets are exactly the complements of
/// minimal transversals of the minimal-set family.
MaximalForbiddenFamily maximal_unauthorized_fast(const MinimalAccessStructure& a);

/// Dispatching entry point: subset scan up to n=12, transversal route
/// beyond.
MaximalForbiddenFamily maximal_unauthorized(const MinimalAccessStructure& a);

/// Row-major 0/1 matrix, small and printable.
class BitMatrix {
public:
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), cells_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool at(std::size_t row, std::size_t col) const { return cells_[row * cols_ + col] != 0; }
    void set(std::size_t row, std::size_t col, bool value) {
        cells_[row * cols_ + col] = value ? 1 : 0;
    }

    /// Row as a contiguous 0/1 string, e.g. "0011".
    std::string row_string(std::size_t row) const;

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<std::uint8_t> cells_;
};

/// Row per minimal set, column per participant: a_ij = 1 iff P_j is in
/// the i-th minimal set.
BitMatrix incidence_array(const MinimalAccessStructure& a);

/// Cumulative array: row per participant, column per maximal forbidden
/// set; b_ij = 1 iff P_i is outside B_j.
struct CumulativeArray {
    BitMatrix matrix;
    std::vector<SubsetMask> column_labels;  // the forbidden sets, in column order

    unsigned participants() const { return static_cast<unsigned>(matrix.rows()); }
    unsigned m() const { return static_cast<unsigned>(matrix.cols()); }
};

CumulativeArray cumulative_array(const MaximalForbiddenFamily& family);

/// True iff the OR of the selected participants' rows is all-ones; by the
/// cumulative-array coverage theorem this holds exactly for authorized
/// subsets.
bool covers_all(const CumulativeArray& c, SubsetMask subset);

}  // namespace pob
