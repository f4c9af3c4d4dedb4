#pragma once

#include "pivar/rational.hpp"

#include <vector>

namespace pivar {

template <typename T>
struct SparseEntry {
    int col;
    T value;
    friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

// Sorted by column, no zero values.
using IntRow = std::vector<SparseEntry<Integer>>;
using RatRow = std::vector<SparseEntry<Rational>>;

// Divide by the content and make the leading entry positive. Returns false for
// the zero row.
bool make_primitive(IntRow& row);

// Incremental reduced row echelon form over the integers, fraction-free: every
// stored row is primitive, its leading column is its pivot and every pivot
// column is zero in all other rows.
class RowEchelon {
public:
    explicit RowEchelon(int columns);

    // Adds a row to the span. Returns true when the rank grew.
    bool insert(IntRow row);

    int columns() const { return columns_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    bool full() const { return rank() == columns_; }

    bool contains(const RatRow& row) const;

    // Rows scaled to pivot 1, ordered by pivot column.
    std::vector<RatRow> reduced_rows() const;
    std::vector<int> pivot_columns() const;

private:
    int columns_;
    std::vector<IntRow> rows_;
    std::vector<int> pivot_row_; // per column: row index or -1
};

} // namespace pivar
