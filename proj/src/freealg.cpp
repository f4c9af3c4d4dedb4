#include "pivar/freealg.hpp"

#include "pivar/errors.hpp"

#include <algorithm>
#include <numeric>

namespace pivar {

Polynomial poly_arith(PolyOp op, const Polynomial& f, const Polynomial& g) {
    switch (op) {
    case PolyOp::add:
        return f + g;
    case PolyOp::sub:
        return f - g;
    case PolyOp::mul:
        return f * g;
    }
    return {};
}

Polynomial commutator(const Polynomial& f, const Polynomial& g) { return f * g - g * f; }

Polynomial commutator(std::span<const Polynomial> args) {
    if (args.size() < 2)
        throw Error("a commutator needs at least two arguments");
    Polynomial out = commutator(args[0], args[1]);
    for (std::size_t i = 2; i < args.size(); ++i)
        out = commutator(out, args[i]);
    return out;
}

Polynomial multidegree_component(const Polynomial& f, const MultiDegree& k) {
    Polynomial out;
    for (const auto& [w, c] : f.terms())
        if (w.has_multidegree(k))
            out.add_term(w, c);
    return out;
}

Polynomial substitute(const Polynomial& f, const std::map<int, Polynomial>& images) {
    Polynomial out;
    for (const auto& [w, c] : f.terms()) {
        std::optional<Polynomial> image;
        for (int l : w.letters()) {
            auto it = images.find(l);
            if (it == images.end())
                throw UnmappedVariable(l);
            image = image ? *image * it->second : it->second;
        }
        out += *image * c;
    }
    return out;
}

Linearization linearize(const Polynomial& f) {
    if (f.is_zero())
        return {};
    auto k = f.multidegree();
    if (!k)
        throw NotMultihomogeneous();

    // Fresh block start for each present variable.
    std::vector<int> block_start(k->size() + 1, 0);
    Linearization out;
    for (int i = 0; i < k->size(); ++i) {
        block_start[i] = static_cast<int>(out.origin.size()) + 1;
        for (int j = 0; j < (*k)[i]; ++j)
            out.origin.push_back(i + 1);
    }

    for (const auto& [w, c] : f.terms()) {
        // positions[v] = indices in w holding variable v + 1
        std::vector<std::vector<std::size_t>> positions(k->size());
        for (std::size_t p = 0; p < w.size(); ++p)
            positions[w[p] - 1].push_back(p);

        std::vector<std::vector<Letter>> perms(k->size());
        for (int v = 0; v < k->size(); ++v) {
            perms[v].resize((*k)[v]);
            std::iota(perms[v].begin(), perms[v].end(), static_cast<Letter>(block_start[v]));
        }

        std::vector<Letter> letters(w.size());
        // Odometer over the product of the per-variable permutation sets.
        while (true) {
            for (int v = 0; v < k->size(); ++v)
                for (std::size_t j = 0; j < positions[v].size(); ++j)
                    letters[positions[v][j]] = perms[v][j];
            out.poly.add_term(Word(letters), c);

            int v = 0;
            for (; v < k->size(); ++v)
                if (std::next_permutation(perms[v].begin(), perms[v].end()))
                    break;
            if (v == k->size())
                break;
        }
    }
    return out;
}

Polynomial multilinearize(const Polynomial& f) { return linearize(f).poly; }

Polynomial symmetrize_identify(const Polynomial& f, const std::map<int, int>& grouping) {
    Polynomial out;
    for (const auto& [w, c] : f.terms()) {
        std::vector<Letter> letters(w.letters().begin(), w.letters().end());
        for (auto& l : letters)
            if (auto it = grouping.find(l); it != grouping.end())
                l = static_cast<Letter>(it->second);
        out.add_term(Word(std::move(letters)), c);
    }
    return out;
}

Polynomial polarization(const Polynomial& f, int from, int to) {
    Polynomial out;
    for (const auto& [w, c] : f.terms()) {
        std::vector<Letter> letters(w.letters().begin(), w.letters().end());
        for (auto& l : letters) {
            if (l != from)
                continue;
            l = static_cast<Letter>(to);
            out.add_term(Word(letters), c);
            l = static_cast<Letter>(from);
        }
    }
    return out;
}

std::vector<Word> monomial_basis(int m, const MultiDegree& k) {
    if (k.total() < 1)
        throw Error("multidegree must have positive total degree");
    if (k.support_size() > m)
        throw Error("multidegree " + k.to_string() + " uses more than " + std::to_string(m) + " variables");
    std::vector<Word> out;
    std::vector<int> remaining(k.degrees().begin(), k.degrees().begin() + k.support_size());
    std::vector<Letter> letters;
    const int n = k.total();
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(letters.size()) == n) {
            out.emplace_back(letters);
            return;
        }
        for (std::size_t v = 0; v < remaining.size(); ++v) {
            if (remaining[v] == 0)
                continue;
            --remaining[v];
            letters.push_back(static_cast<Letter>(v + 1));
            self(self);
            letters.pop_back();
            ++remaining[v];
        }
    };
    rec(rec);
    return out;
}

std::uint64_t multinomial(const MultiDegree& k) {
    std::uint64_t out = 1;
    int seen = 0;
    for (int d : k.degrees())
        for (int j = 1; j <= d; ++j) {
            ++seen;
            // out * seen / j stays integral: it is a binomial-coefficient product
            out = out * seen / j;
        }
    return out;
}

namespace {

template <bool Alternating>
Polynomial permutation_sum(std::span<const Polynomial> args) {
    std::vector<std::size_t> perm(args.size());
    std::iota(perm.begin(), perm.end(), 0);
    Polynomial out;
    do {
        int sign = 1;
        if constexpr (Alternating) {
            for (std::size_t i = 0; i < perm.size(); ++i)
                for (std::size_t j = i + 1; j < perm.size(); ++j)
                    if (perm[i] > perm[j])
                        sign = -sign;
        }
        Polynomial term = args[perm[0]];
        for (std::size_t i = 1; i < perm.size(); ++i)
            term = term * args[perm[i]];
        out += term * sign;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace

Polynomial standard_polynomial(std::span<const Polynomial> args) {
    if (args.empty())
        throw Error("standard polynomial needs at least one argument");
    return permutation_sum<true>(args);
}

Polynomial symmetric_polynomial(std::span<const Polynomial> args) {
    if (args.empty())
        throw Error("symmetric polynomial needs at least one argument");
    return permutation_sum<false>(args);
}

Polynomial capelli_d3(std::span<const Polynomial> alternating, const std::optional<Polynomial>& first,
                      const std::optional<Polynomial>& second) {
    if (alternating.size() != 3)
        throw Error("d3 alternates exactly three arguments");
    std::vector<std::size_t> perm{0, 1, 2};
    Polynomial out;
    do {
        int sign = 1;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j)
                if (perm[i] > perm[j])
                    sign = -sign;
        Polynomial term = alternating[perm[0]];
        if (first)
            term = term * *first;
        term = term * alternating[perm[1]];
        if (second)
            term = term * *second;
        term = term * alternating[perm[2]];
        out += term * sign;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Polynomial capelli_d3_with_tail(std::span<const Polynomial> alternating, const Polynomial& first) {
    return capelli_d3(alternating, first, std::nullopt);
}

std::vector<Polynomial> variables(int n) {
    std::vector<Polynomial> out;
    for (int i = 1; i <= n; ++i)
        out.push_back(Polynomial::variable(i));
    return out;
}

} // namespace pivar
