#pragma once

#include <cstdint>
#include <vector>

#include "pob/error.hpp"

namespace pob {

/// Table of binomial coefficients C(j,k) for 0 <= k <= j <= max_n, built
/// once via the Pascal identity and read-only afterwards.
///
/// The table uses the conventions the POB value formula needs: C(j,0) = 1
/// and C(j,k) = 0 whenever k > j. Construction rejects any parameter set
/// whose entries would overflow 64 bits, so lookups are always exact.
class BinomialTable {
public:
    explicit BinomialTable(unsigned max_n);

    unsigned max_n() const { return max_n_; }

    /// C(j,k); zero when k > j. Throws RangeError when j exceeds max_n.
    std::uint64_t operator()(unsigned j, unsigned k) const;

private:
    unsigned max_n_;
    std::vector<std::uint64_t> entries_;  // row j holds C(j,0..j)
};

/// Shared table covering every legal PobParams (n <= 64). C(64,32) still
/// fits in 64 bits, so construction never fails for this bound.
const BinomialTable& binomial_table();

/// Convenience lookup into the shared table.
std::uint64_t binomial(unsigned j, unsigned k);

}  // namespace pob
