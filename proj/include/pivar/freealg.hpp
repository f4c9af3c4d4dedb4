#pragma once

#include "pivar/polynomial.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace pivar {

enum class PolyOp { add, sub, mul };

Polynomial poly_arith(PolyOp op, const Polynomial& f, const Polynomial& g);

// [f, g] = fg - gf
Polynomial commutator(const Polynomial& f, const Polynomial& g);
// Left-normed [a_1, ..., a_k] = [[a_1, a_2], ..., a_k]; needs k >= 2.
Polynomial commutator(std::span<const Polynomial> args);

Polynomial multidegree_component(const Polynomial& f, const MultiDegree& k);

// Algebra endomorphism x_i -> images[i]. Throws UnmappedVariable.
Polynomial substitute(const Polynomial& f, const std::map<int, Polynomial>& images);

// Full linearization of a multihomogeneous polynomial. Variables present in f
// are taken in increasing order; variable i of degree d_i receives a block of
// d_i consecutive fresh variables, blocks laid out in that order from 1.
struct Linearization {
    Polynomial poly;
    // origin[j] is the original variable behind fresh variable j + 1.
    std::vector<int> origin;
};

Linearization linearize(const Polynomial& f);
Polynomial multilinearize(const Polynomial& f);

// Identify variables: x_j -> x_{grouping[j]}. Unlisted variables stay put.
Polynomial symmetrize_identify(const Polynomial& f, const std::map<int, int>& grouping);

// Sum over occurrences of `from` of the word with that occurrence replaced by `to`.
Polynomial polarization(const Polynomial& f, int from, int to);

// Words of multidegree k over x_1..x_m in degree-lexicographic order.
std::vector<Word> monomial_basis(int m, const MultiDegree& k);
std::uint64_t multinomial(const MultiDegree& k);

// Standard polynomial sum_sigma sign(sigma) a_sigma(1) ... a_sigma(n).
Polynomial standard_polynomial(std::span<const Polynomial> args);
// Full symmetrization sum_sigma a_sigma(1) ... a_sigma(n).
Polynomial symmetric_polynomial(std::span<const Polynomial> args);
// Capelli d_3(a1,a2,a3; b1,b2) = sum sign(sigma) a_s1 b1 a_s2 b2 a_s3. An empty
// slot contributes no factor.
Polynomial capelli_d3(std::span<const Polynomial> alternating, const std::optional<Polynomial>& first,
                      const std::optional<Polynomial>& second);
// d_3(a1,a2,a3; w, 1): the second separator slot is empty.
Polynomial capelli_d3_with_tail(std::span<const Polynomial> alternating, const Polynomial& first);

// Variables x_1..x_n as polynomials.
std::vector<Polynomial> variables(int n);

} // namespace pivar
