#pragma once

#include "pivar/rational.hpp"
#include "pivar/word.hpp"

#include <map>
#include <optional>
#include <vector>

namespace pivar {

// Element of A_m: a finite rational combination of words. No stored coefficient
// is zero, so two polynomials are equal iff their term maps are equal.
class Polynomial {
public:
    using TermMap = std::map<Word, Rational>;

    Polynomial() = default;
    explicit Polynomial(const Word& w, const Rational& c = 1);

    static Polynomial variable(int index) { return Polynomial(Word::letter(index)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(const Word& w) const;
    void add_term(const Word& w, const Rational& c);

    // Largest generator index occurring, 0 for the zero polynomial.
    int max_variable() const;
    // Present iff every word has the same multidegree (zero polynomial: nullopt).
    std::optional<MultiDegree> multidegree() const;
    bool is_multihomogeneous() const { return is_zero() || multidegree().has_value(); }
    // Multihomogeneous components keyed by trimmed multidegree.
    std::map<MultiDegree, Polynomial> components() const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= -1; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

private:
    TermMap terms_;
};

Polynomial pow(const Polynomial& f, int exponent);

} // namespace pivar
