#include "pivar/polynomial.hpp"

#include "pivar/errors.hpp"

namespace pivar {

Polynomial::Polynomial(const Word& w, const Rational& c) { add_term(w, c); }

Rational Polynomial::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Word& w, const Rational& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

int Polynomial::max_variable() const {
    int m = 0;
    for (const auto& [w, c] : terms_)
        m = std::max(m, w.max_letter());
    return m;
}

std::optional<MultiDegree> Polynomial::multidegree() const {
    if (terms_.empty())
        return std::nullopt;
    MultiDegree k = terms_.begin()->first.multidegree();
    for (const auto& [w, c] : terms_)
        if (!w.has_multidegree(k))
            return std::nullopt;
    return k;
}

std::map<MultiDegree, Polynomial> Polynomial::components() const {
    std::map<MultiDegree, Polynomial> out;
    for (const auto& [w, c] : terms_)
        out[w.multidegree()].terms_.emplace(w, c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    for (const auto& [w, c] : rhs.terms_)
        add_term(w, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    for (const auto& [w, c] : rhs.terms_)
        add_term(w, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coeff] : terms_)
        coeff *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [u, cu] : a.terms_)
        for (const auto& [v, cv] : b.terms_)
            out.add_term(u * v, cu * cv);
    return out;
}

Polynomial pow(const Polynomial& f, int exponent) {
    if (exponent < 1)
        throw Error("exponent must be positive in a non-unitary algebra");
    Polynomial out = f;
    for (int i = 1; i < exponent; ++i)
        out = out * f;
    return out;
}

} // namespace pivar
