#pragma once

#include "pivar/echelon.hpp"
#include "pivar/freealg.hpp"
#include "pivar/partitions.hpp"
#include "pivar/polynomial.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace pivar {

struct DegreeCap {
    int total_degree = 7;
    std::size_t ambient_dim = 2000;
    std::size_t generator_count = 8;

    // Defaults, with PIVAR_DEGREE_CAP overriding the total degree.
    static DegreeCap from_env();
};

// Exact reduced basis of T(M) intersected with A_m^(k).
class SpanBasis {
public:
    SpanBasis(MultiDegree k, std::vector<Word> monomials, RowEchelon echelon);

    const MultiDegree& multidegree() const { return multidegree_; }
    const std::vector<Word>& monomials() const { return monomials_; }
    std::size_t ambient_dim() const { return monomials_.size(); }
    int rank() const { return echelon_.rank(); }
    std::size_t quotient_dim() const { return ambient_dim() - static_cast<std::size_t>(rank()); }

    // Reduced echelon rows over the canonical monomial basis, pivots normalized to 1.
    std::vector<RatRow> rows() const { return echelon_.reduced_rows(); }
    std::vector<Polynomial> row_polynomials() const;

    // f must be homogeneous of this multidegree (checked).
    bool contains(const Polynomial& f) const;
    RatRow coordinates(const Polynomial& f) const;

private:
    MultiDegree multidegree_;
    std::vector<Word> monomials_;
    RowEchelon echelon_;
};

// Generators of a T-ideal, split into non-zero multihomogeneous components.
// Copies share the linearization cache and the span memo.
class IdealPresentation {
public:
    IdealPresentation();
    explicit IdealPresentation(const std::vector<Polynomial>& generators, DegreeCap cap = DegreeCap::from_env());

    const std::vector<Polynomial>& generators() const;
    const std::vector<Linearization>& linearized() const;
    // Largest generator index used by the generators.
    int universe() const;
    const DegreeCap& cap() const;
    // Canonical text of the generator set, used as cache key.
    const std::string& fingerprint() const;

    IdealPresentation with(const Polynomial& extra) const;
    IdealPresentation with(const std::vector<Polynomial>& extra) const;

    // Memoized consequence span at multidegree k. Thread-safe.
    std::shared_ptr<const SpanBasis> basis(const MultiDegree& k) const;

private:
    struct State;
    std::shared_ptr<State> state_;
};

// Span of all u * f(w_1, ..., w_d) * v of multidegree k, f a linearized generator,
// w_i non-empty words and u, v optional words. Throws DegreeCapExceeded.
std::shared_ptr<const SpanBasis> consequence_basis(const IdealPresentation& ideal, const MultiDegree& k);

// Every multihomogeneous component of g lies in the consequence span.
bool contains(const IdealPresentation& ideal, const Polynomial& g);

struct CocharTable {
    int n = 0;
    // Decreasing lexicographic order of partitions.
    std::vector<std::pair<Partition, std::uint64_t>> entries;

    std::uint64_t multiplicity(const Partition& lambda) const;
    // sum kappa_lambda * hook_dim(lambda)
    std::uint64_t dimension() const;
    // Partitions with non-zero multiplicity.
    std::map<Partition, std::uint64_t> nonzero() const;
};

CocharTable cocharacter(const IdealPresentation& ideal, int n, int max_parts);
inline CocharTable cocharacter(const IdealPresentation& ideal, int n) { return cocharacter(ideal, n, n); }

// dim P_n(M) = n! - rank at (1^n)
std::uint64_t pn_dim(const IdealPresentation& ideal, int n);

// dim F_m^(k)(M) for all k over m variables with 1 <= |k| <= total_degree_cap.
std::map<MultiDegree, std::uint64_t> hilbert_dims(const IdealPresentation& ideal, int m, int total_degree_cap);

// f is non-zero modulo the ideal and every raising polarization x_j -> x_i (i < j)
// of f lies in the ideal.
bool highest_weight_check(const IdealPresentation& ideal, const Polynomial& f);

// Number of new independent elements that fs add to the span at their common
// multidegree: rank(span + fs) - rank(span).
int independent_modulo(const IdealPresentation& ideal, const std::vector<Polynomial>& fs);

std::string serialize(const Polynomial& f);

} // namespace pivar
