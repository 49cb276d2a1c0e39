#include "pob/access.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace pob {

ParticipantRoster::ParticipantRoster(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty() || names_.size() > kMaxParticipants) {
        throw PolicyError("roster must hold 1.." + std::to_string(kMaxParticipants) +
                          " participants");
    }
    std::set<std::string> seen;
    for (const std::string& name : names_) {
        if (name.empty()) {
            throw PolicyError("participant names must be nonempty");
        }
        if (!seen.insert(name).second) {
            throw PolicyError("duplicate participant name: " + name);
        }
    }
}

unsigned ParticipantRoster::index_of(const std::string& name) const {
    for (unsigned i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) {
            return i;
        }
    }
    throw PolicyError("unknown participant name: " + name);
}

std::string ParticipantRoster::describe(SubsetMask mask) const {
    std::string out = "{";
    bool first = true;
    for (unsigned i = 0; i < size(); ++i) {
        if ((mask >> i) & 1u) {
            if (!first) {
                out += ",";
            }
            out += names_[i];
            first = false;
        }
    }
    out += "}";
    return out;
}

bool canonical_mask_less(SubsetMask a, SubsetMask b) {
    while (a != 0 && b != 0) {
        const int i = std::countr_zero(a);
        const int j = std::countr_zero(b);
        if (i != j) {
            return i < j;
        }
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;  // a is a strict prefix of b
}

std::vector<SubsetMask> minimize(std::vector<SubsetMask> family) {
    std::sort(family.begin(), family.end(),
              [](SubsetMask a, SubsetMask b) { return std::popcount(a) < std::popcount(b); });
    std::vector<SubsetMask> kept;
    for (SubsetMask candidate : family) {
        const bool redundant =
            std::any_of(kept.begin(), kept.end(), [candidate](SubsetMask member) {
                return (candidate & member) == member;
            });
        if (!redundant) {
            kept.push_back(candidate);
        }
    }
    std::sort(kept.begin(), kept.end(), canonical_mask_less);
    return kept;
}

MinimalAccessStructure::MinimalAccessStructure(ParticipantRoster roster,
                                               std::vector<SubsetMask> family)
    : roster_(std::move(roster)) {
    if (family.empty()) {
        throw PolicyError("access structure needs at least one authorized set");
    }
    for (SubsetMask member : family) {
        if (member == 0) {
            throw PolicyError("the empty set cannot be an authorized set");
        }
        if ((member & ~roster_.full_mask()) != 0) {
            throw PolicyError("authorized set references participants outside the roster");
        }
    }
    const std::size_t raw_size = family.size();
    family_ = minimize(std::move(family));
    was_reduced_ = family_.size() != raw_size;
}

MinimalAccessStructure threshold_structure(ParticipantRoster roster, unsigned t) {
    const unsigned n = roster.size();
    if (t < 1 || t > n) {
        throw PolicyError("threshold must be in 1..n");
    }
    std::vector<SubsetMask> family;
    for (SubsetMask mask = 0; mask <= roster.full_mask(); ++mask) {
        if (static_cast<unsigned>(std::popcount(mask)) == t) {
            family.push_back(mask);
        }
    }
    return MinimalAccessStructure(std::move(roster), std::move(family));
}

bool is_authorized(SubsetMask subset, const MinimalAccessStructure& a) {
    if ((subset & ~a.roster().full_mask()) != 0) {
        throw PolicyError("subset mask wider than the roster");
    }
    return std::any_of(a.family().begin(), a.family().end(), [subset](SubsetMask member) {
        return (subset & member) == member;
    });
}

MaximalForbiddenFamily maximal_unauthorized_oracle(const MinimalAccessStructure& a) {
    const SubsetMask full = a.roster().full_mask();
    std::vector<SubsetMask> unauthorized;
    for (SubsetMask mask = 0; mask <= full; ++mask) {
        if (!is_authorized(mask, a)) {
            unauthorized.push_back(mask);
        }
    }
    // Keep the inclusion-maximal ones. A member B is maximal iff B+{x} is
    // authorized for every absent participant x.
    std::vector<SubsetMask> members;
    for (SubsetMask b : unauthorized) {
        bool maximal = true;
        for (unsigned i = 0; i < a.roster().size() && maximal; ++i) {
            const SubsetMask grown = b | (SubsetMask{1} << i);
            if (grown != b && !is_authorized(grown, a)) {
                maximal = false;
            }
        }
        if (maximal) {
            members.push_back(b);
        }
    }
    std::sort(members.begin(), members.end(), canonical_mask_less);
    return MaximalForbiddenFamily{a.roster(), std::move(members)};
}

MaximalForbiddenFamily maximal_unauthorized_fast(const MinimalAccessStructure& a) {
    // B is maximal unauthorized iff complement(B) is a minimal transversal
    // of the minimal-set family. Berge multiplication, minimizing after
    // every edge.
    std::vector<SubsetMask> transversals{0};
    for (SubsetMask edge : a.family()) {
        std::vector<SubsetMask> grown;
        for (SubsetMask t : transversals) {
            if ((t & edge) != 0) {
                grown.push_back(t);  // already hits this edge
                continue;
            }
            for (SubsetMask e = edge; e != 0; e &= e - 1) {
                grown.push_back(t | (e & (~e + 1u)));  // t plus the lowest remaining element
            }
        }
        transversals = minimize(std::move(grown));
    }
    const SubsetMask full = a.roster().full_mask();
    std::vector<SubsetMask> members;
    members.reserve(transversals.size());
    for (SubsetMask t : transversals) {
        members.push_back(full & ~t);
    }
    std::sort(members.begin(), members.end(), canonical_mask_less);
    return MaximalForbiddenFamily{a.roster(), std::move(members)};
}

MaximalForbiddenFamily maximal_unauthorized(const MinimalAccessStructure& a) {
    if (a.roster().size() <= 12) {
        return maximal_unauthorized_oracle(a);
    }
    return maximal_unauthorized_fast(a);
}

std::string BitMatrix::row_string(std::size_t row) const {
    std::string out(cols_, '0');
    for (std::size_t col = 0; col < cols_; ++col) {
        if (at(row, col)) {
            out[col] = '1';
        }
    }
    return out;
}

BitMatrix incidence_array(const MinimalAccessStructure& a) {
    const unsigned n = a.roster().size();
    BitMatrix matrix(a.family().size(), n);
    for (std::size_t i = 0; i < a.family().size(); ++i) {
        for (unsigned j = 0; j < n; ++j) {
            matrix.set(i, j, (a.family()[i] >> j) & 1u);
        }
    }
    return matrix;
}

CumulativeArray cumulative_array(const MaximalForbiddenFamily& family) {
    const unsigned n = family.roster.size();
    const unsigned m = family.m();
    BitMatrix matrix(n, m);
    for (unsigned j = 0; j < m; ++j) {
        if (family.members[j] == family.roster.full_mask()) {
            throw PolicyError("the full participant set cannot be a forbidden set");
        }
        for (unsigned i = 0; i < n; ++i) {
            matrix.set(i, j, ((family.members[j] >> i) & 1u) == 0);
        }
    }
    return CumulativeArray{std::move(matrix), family.members};
}

bool covers_all(const CumulativeArray& c, SubsetMask subset) {
    if ((subset & ~((SubsetMask{1} << c.participants()) - 1)) != 0) {
        throw PolicyError("subset mask wider than the cumulative array");
    }
    for (unsigned j = 0; j < c.m(); ++j) {
        bool covered = false;
        for (unsigned i = 0; i < c.participants() && !covered; ++i) {
            covered = ((subset >> i) & 1u) && c.matrix.at(i, j);
        }
        if (!covered) {
            return false;
        }
    }
    return true;
}

}  // namespace pob
