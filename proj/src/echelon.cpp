#include "pivar/echelon.hpp"

#include "pivar/errors.hpp"

#include <algorithm>

namespace pivar {

namespace {

const Integer* find_entry(const IntRow& row, int col) {
    auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, int c) { return e.col < c; });
    return it != row.end() && it->col == col ? &it->value : nullptr;
}

// a * lhs - b * rhs
IntRow combine(const Integer& a, const IntRow& lhs, const Integer& b, const IntRow& rhs) {
    IntRow out;
    out.reserve(lhs.size() + rhs.size());
    auto i = lhs.begin();
    auto j = rhs.begin();
    Integer v;
    while (i != lhs.end() || j != rhs.end()) {
        if (j == rhs.end() || (i != lhs.end() && i->col < j->col)) {
            out.push_back({i->col, a * i->value});
            ++i;
        } else if (i == lhs.end() || j->col < i->col) {
            out.push_back({j->col, -b * j->value});
            ++j;
        } else {
            v = a * i->value - b * j->value;
            if (v != 0)
                out.push_back({i->col, v});
            ++i;
            ++j;
        }
    }
    return out;
}

// Eliminate column `col` from `target` using `pivot` whose leading entry sits there.
void eliminate(IntRow& target, const Integer& target_value, const IntRow& pivot, const Integer& pivot_value) {
    Integer g = gcd(pivot_value, target_value);
    Integer a = pivot_value / g;
    Integer b = target_value / g;
    target = combine(a, target, b, pivot);
    make_primitive(target);
}

} // namespace

bool make_primitive(IntRow& row) {
    if (row.empty())
        return false;
    Integer g = 0;
    for (const auto& e : row) {
        g = gcd(g, e.value);
        if (g == 1)
            break;
    }
    if (row.front().value < 0)
        g = -g;
    if (g != 1)
        for (auto& e : row)
            mpz_divexact(e.value.get_mpz_t(), e.value.get_mpz_t(), g.get_mpz_t());
    return true;
}

RowEchelon::RowEchelon(int columns) : columns_(columns), pivot_row_(columns, -1) {}

bool RowEchelon::insert(IntRow row) {
    if (full())
        return false;
    std::vector<int> hits;
    for (const auto& e : row) {
        if (e.col < 0 || e.col >= columns_)
            throw Error("row entry outside the ambient space");
        if (pivot_row_[e.col] >= 0)
            hits.push_back(e.col);
    }
    for (int col : hits) {
        const Integer* v = find_entry(row, col);
        if (!v)
            continue;
        const IntRow& pivot = rows_[pivot_row_[col]];
        Integer value = *v;
        eliminate(row, value, pivot, pivot.front().value);
    }
    if (!make_primitive(row))
        return false;

    const int lead = row.front().col;
    const Integer lead_value = row.front().value;
    for (auto& other : rows_) {
        const Integer* v = find_entry(other, lead);
        if (!v)
            continue;
        Integer value = *v;
        eliminate(other, value, row, lead_value);
    }
    pivot_row_[lead] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(row));
    return true;
}

bool RowEchelon::contains(const RatRow& row) const {
    // Pivot rows carry no other pivot columns, so one pass clears every pivot column.
    std::vector<Rational> dense(columns_);
    for (const auto& e : row) {
        if (e.col < 0 || e.col >= columns_)
            throw Error("row entry outside the ambient space");
        dense[e.col] = e.value;
    }
    for (const auto& e : row) {
        int r = pivot_row_[e.col];
        if (r < 0 || dense[e.col] == 0)
            continue;
        const IntRow& pivot = rows_[r];
        Rational factor = dense[e.col] / Rational(pivot.front().value);
        for (const auto& p : pivot)
            dense[p.col] -= factor * Rational(p.value);
    }
    return std::all_of(dense.begin(), dense.end(), [](const Rational& q) { return q == 0; });
}

std::vector<RatRow> RowEchelon::reduced_rows() const {
    std::vector<RatRow> out;
    for (int col = 0; col < columns_; ++col) {
        int r = pivot_row_[col];
        if (r < 0)
            continue;
        const IntRow& row = rows_[r];
        RatRow q;
        q.reserve(row.size());
        for (const auto& e : row)
            q.push_back({e.col, make_rational(e.value, row.front().value)});
        out.push_back(std::move(q));
    }
    return out;
}

std::vector<int> RowEchelon::pivot_columns() const {
    std::vector<int> out;
    for (int col = 0; col < columns_; ++col)
        if (pivot_row_[col] >= 0)
            out.push_back(col);
    return out;
}

} // namespace pivar
