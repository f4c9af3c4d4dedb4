#pragma once

#include "pivar/polynomial.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pivar {

// Coordinates over the basis of an algebra.
using Element = std::vector<Rational>;
using Assignment = std::map<int, Element>;

// Finite-dimensional associative algebra over Q given by structure constants.
class Algebra {
public:
    // table[i][j] = coordinates of b_i * b_j. Throws AssociativityError.
    Algebra(std::string name, std::vector<std::string> basis, std::vector<std::vector<Element>> table);

    const std::string& name() const { return name_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::string>& basis() const { return basis_; }
    const Element& product(int i, int j) const { return table_[i][j]; }

    Element unit_vector(int i) const;
    Element zero() const { return Element(basis_.size()); }
    Element multiply(const Element& a, const Element& b) const;
    // Index of the basis label, or -1.
    int index_of(const std::string& label) const;
    // "-b", "2*e11 + 1/2*e12", "0"
    std::string format(const Element& a) const;

private:
    std::string name_;
    std::vector<std::string> basis_;
    std::vector<std::vector<Element>> table_;
};

// A1, B1, B2, KxTrunc(N), kx:N. Throws UnknownName.
Algebra builtin_algebra(const std::string& name);
Algebra algebra_from_json(const std::string& text);
std::string algebra_to_json(const Algebra& a);

bool is_zero(const Element& a);

// Throws UnassignedVariable.
Element evaluate(const Polynomial& f, const Algebra& a, const Assignment& values);

// f vanishes for every assignment. Decided on basis tuples of the full
// linearization of each multihomogeneous component.
bool satisfies(const Algebra& a, const Polynomial& f);

// Assignment with evaluate(f) != 0, or nullopt when f is an identity of a.
std::optional<Assignment> witness_nonzero(const Algebra& a, const Polynomial& f);

} // namespace pivar
