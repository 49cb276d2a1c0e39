#include "pob/binomial.hpp"

#include <limits>

namespace pob {

namespace {

std::size_t row_offset(unsigned j) {
    // Row j starts after rows 0..j-1, which hold 1 + 2 + ... + j entries.
    return static_cast<std::size_t>(j) * (j + 1) / 2;
}

}  // namespace

BinomialTable::BinomialTable(unsigned max_n) : max_n_(max_n) {
    entries_.resize(row_offset(max_n_ + 1));
    entries_[0] = 1;
    for (unsigned j = 1; j <= max_n_; ++j) {
        std::uint64_t* row = entries_.data() + row_offset(j);
        const std::uint64_t* prev = entries_.data() + row_offset(j - 1);
        row[0] = 1;
        row[j] = 1;
        for (unsigned k = 1; k < j; ++k) {
            if (prev[k - 1] > std::numeric_limits<std::uint64_t>::max() - prev[k]) {
                throw RangeError("binomial table overflows 64 bits at C(" +
                                 std::to_string(j) + "," + std::to_string(k) + ")");
            }
            row[k] = prev[k - 1] + prev[k];
        }
    }
}

std::uint64_t BinomialTable::operator()(unsigned j, unsigned k) const {
    if (j > max_n_) {
        throw RangeError("binomial lookup beyond table bound: j=" + std::to_string(j));
    }
    if (k > j) {
        return 0;
    }
    return entries_[row_offset(j) + k];
}

const BinomialTable& binomial_table() {
    static const BinomialTable table(64);
    return table;
}

std::uint64_t binomial(unsigned j, unsigned k) {
    return binomial_table()(j, k);
}

}  // namespace pob
