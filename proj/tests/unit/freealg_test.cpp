#include "pivar/errors.hpp"
#include "pivar/freealg.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace pivar;
using namespace pivar::testing;

TEST(Word, RejectsEmptyAndZeroLetters) {
    EXPECT_THROW(Word(std::vector<Letter>{}), Error);
    EXPECT_THROW(Word({1, 0}), Error);
}

TEST(Word, DegLexOrder) {
    EXPECT_LT(W("y"), W("xx"));
    EXPECT_LT(W("xy"), W("yx"));
    EXPECT_LT(W("xyy"), W("yxx"));
}

TEST(PolyArith, BasicExamples) {
    EXPECT_EQ(X(1) * X(2), M("xy"));
    EXPECT_EQ(X(1) * X(2) - X(2) * X(1), M("xy") - M("yx"));
    EXPECT_TRUE((Polynomial(M("xy") + M("y")) * Rational(0)).is_zero());
    EXPECT_TRUE((Polynomial(M("xy")) * Rational(0)).terms().empty());

    Polynomial s = (X(1) + X(2)) * (X(1) + X(2));
    EXPECT_EQ(s.size(), 4u);
    for (auto w : {"xx", "xy", "yx", "yy"})
        EXPECT_EQ(s.coefficient(W(w)), 1);
}

TEST(PolyArith, RingAxiomsOnRandomInputs) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto f = random_polynomial(rng, 3, 3, 4);
        auto g = random_polynomial(rng, 3, 3, 4);
        auto h = random_polynomial(rng, 3, 3, 4);
        EXPECT_EQ((f * g) * h, f * (g * h));
        EXPECT_EQ(f * (g + h), f * g + f * h);
        EXPECT_EQ((f + g) * h, f * h + g * h);
        EXPECT_EQ(f - f, Polynomial());
        Polynomial fg = f * g;
        for (const auto& [w, c] : fg.terms())
            EXPECT_NE(c, 0);
    }
}

TEST(Commutator, Examples) {
    EXPECT_TRUE(commutator(X(1), X(1)).is_zero());
    EXPECT_EQ(commutator(X(1), X(2)), M("xy") - M("yx"));
    // [[x,y],z] expanded by hand: (xy - yx)z - z(xy - yx)
    Polynomial expected = M("xyz") - M("yxz") - M("zxy") + M("zyx");
    std::vector<Polynomial> args{X(1), X(2), X(3)};
    EXPECT_EQ(commutator(args), expected);
}

TEST(MultidegreeComponent, Examples) {
    Polynomial cube = pow(X(1) + X(2), 3);
    EXPECT_EQ(multidegree_component(cube, {2, 1}), M("xxy") + M("xyx") + M("yxx"));
    Polynomial c = commutator(X(1), X(2));
    EXPECT_EQ(multidegree_component(c, {1, 1}), c);

    std::vector<Polynomial> args{X(1), X(1), X(2)};
    Polynomial half_h3 = symmetric_polynomial(args) * Rational(1, 2);
    EXPECT_EQ(multidegree_component(half_h3, {2, 1}), M("xxy") + M("xyx") + M("yxx"));
}

TEST(MultidegreeComponent, ComponentsReassemble) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        auto f = random_polynomial(rng, 3, 4, 8);
        Polynomial sum;
        for (const auto& [k, component] : f.components()) {
            EXPECT_EQ(multidegree_component(f, k), component);
            sum += component;
        }
        EXPECT_EQ(sum, f);
    }
}

TEST(Substitute, Examples) {
    EXPECT_EQ(substitute(pow(X(1), 3), {{1, X(1) * X(2)}}), M("xyxyxy"));
    EXPECT_TRUE(substitute(commutator(X(1), X(2)), {{1, X(1)}, {2, X(1)}}).is_zero());
    EXPECT_THROW(substitute(X(1) * X(2), {{1, X(1)}}), UnmappedVariable);

    // Oracle: the six permutation terms of h3(x, x, y) written out directly.
    std::vector<Polynomial> args{X(1), X(2), X(3)};
    Polynomial h3 = symmetric_polynomial(args);
    std::vector<std::string> image{"x", "x", "y"};
    std::vector<int> perm{0, 1, 2};
    Polynomial expected;
    do {
        expected += M(image[perm[0]] + image[perm[1]] + image[perm[2]]);
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_EQ(expected, (M("xxy") + M("xyx") + M("yxx")) * Rational(2));
    EXPECT_EQ(substitute(h3, {{1, X(1)}, {2, X(1)}, {3, X(2)}}), expected);
}

TEST(Substitute, IsHomomorphism) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        auto f = random_polynomial(rng, 2, 3, 3);
        auto g = random_polynomial(rng, 2, 3, 3);
        std::map<int, Polynomial> s{{1, random_polynomial(rng, 3, 2, 2)}, {2, random_polynomial(rng, 3, 2, 2)}};
        if (s[1].is_zero() || s[2].is_zero())
            continue;
        EXPECT_EQ(substitute(f * g, s), substitute(f, s) * substitute(g, s));
        EXPECT_EQ(substitute(f + g, s), substitute(f, s) + substitute(g, s));
    }
}

TEST(Multilinearize, CubeIsFullSymmetrization) {
    std::vector<Polynomial> args{X(1), X(2), X(3)};
    EXPECT_EQ(multilinearize(pow(X(1), 3)), symmetric_polynomial(args));
}

TEST(Multilinearize, MultilinearInputIsRenamed) {
    Polynomial f = M("yx") - M("xy") * Rational(3);
    EXPECT_EQ(multilinearize(f), f);
    // variables 2 and 4 become 1 and 2
    Polynomial g = X(2) * X(4) - X(4) * X(2);
    EXPECT_EQ(multilinearize(g), commutator(X(1), X(2)));
}

TEST(Multilinearize, CommutatorTimesX) {
    // Oracle: substitute x -> x1 + x2, y -> x3 and take the multilinear component.
    Polynomial f = commutator(X(1), X(2)) * X(1);
    Polynomial oracle = multidegree_component(substitute(f, {{1, X(1) + X(2)}, {2, X(3)}}), {1, 1, 1});
    EXPECT_EQ(multilinearize(f), oracle);
    EXPECT_EQ(oracle, commutator(X(1), X(3)) * X(2) + commutator(X(2), X(3)) * X(1));
}

TEST(Multilinearize, RejectsInhomogeneous) {
    EXPECT_THROW(multilinearize(X(1) + X(1) * X(1)), NotMultihomogeneous);
}

TEST(SymmetrizeIdentify, Examples) {
    std::vector<Polynomial> args{X(1), X(2), X(3)};
    EXPECT_EQ(symmetrize_identify(symmetric_polynomial(args), {{1, 1}, {2, 1}, {3, 1}}), M("xxx") * Rational(6));
    EXPECT_TRUE(symmetrize_identify(standard_polynomial(args), {{1, 1}, {2, 1}}).is_zero());
}

TEST(SymmetrizeIdentify, InvertsLinearizationUpToFactorials) {
    std::mt19937 rng(5);
    const std::vector<MultiDegree> degrees{{3}, {2, 1}, {2, 2}, {3, 1}, {1, 2, 1}, {2, 1, 1}};
    for (int trial = 0; trial < 40; ++trial) {
        const MultiDegree& k = degrees[trial % degrees.size()];
        auto f = random_homogeneous(rng, k, 5);
        if (f.is_zero())
            continue;
        Linearization lin = linearize(f);
        std::map<int, int> grouping;
        for (std::size_t j = 0; j < lin.origin.size(); ++j)
            grouping[static_cast<int>(j) + 1] = lin.origin[j];
        long factor = 1;
        const MultiDegree fk = *f.multidegree();
        for (int d : fk.degrees())
            for (int i = 2; i <= d; ++i)
                factor *= i;
        EXPECT_EQ(symmetrize_identify(lin.poly, grouping), f * Rational(factor));
    }
}

TEST(Polarization, Examples) {
    EXPECT_EQ(polarization(M("xy"), 2, 1), M("xx"));
    EXPECT_EQ(polarization(M("yy"), 2, 1), M("xy") + M("yx"));
    EXPECT_TRUE(polarization(commutator(X(1), X(2)), 2, 1).is_zero());
}

TEST(MonomialBasis, Examples) {
    EXPECT_EQ(monomial_basis(2, {3, 1}).size(), 4u);
    EXPECT_EQ(monomial_basis(3, {2, 1, 1}).size(), 12u);
    EXPECT_EQ(monomial_basis(4, {2, 1, 1, 1}).size(), 60u);
    auto b = monomial_basis(2, {2, 1});
    EXPECT_EQ(b, (std::vector<Word>{W("xxy"), W("xyx"), W("yxx")}));
}

TEST(MonomialBasis, SizeIsMultinomial) {
    for (int m = 1; m <= 4; ++m) {
        std::vector<int> k(m, 0);
        auto rec = [&](auto&& self, int i, int budget) -> void {
            if (i == m) {
                MultiDegree md(k);
                if (md.total() < 1)
                    return;
                auto basis = monomial_basis(m, md);
                EXPECT_EQ(basis.size(), multinomial(md)) << md.to_string();
                EXPECT_TRUE(std::is_sorted(basis.begin(), basis.end()));
                return;
            }
            for (int d = 0; d <= budget; ++d) {
                k[i] = d;
                self(self, i + 1, budget - d);
            }
        };
        rec(rec, 0, 8);
    }
}

TEST(StandardPolynomial, AlternatingAndSymmetric) {
    auto vars = variables(4);
    Polynomial s4 = standard_polynomial(vars);
    std::swap(vars[1], vars[3]);
    EXPECT_EQ(standard_polynomial(vars), -s4);
    EXPECT_EQ(s4.size(), 24u);
    auto h = symmetric_polynomial(vars);
    std::swap(vars[0], vars[2]);
    EXPECT_EQ(symmetric_polynomial(vars), h);
}

TEST(Capelli, TailSlotEmpty) {
    // d3(y,z,t; x^2, 1) = sum sign y_s1 x^2 y_s2 y_s3
    std::vector<Polynomial> alt{X(2), X(3), X(4)};
    Polynomial d = capelli_d3_with_tail(alt, pow(X(1), 2));
    Polynomial expected = M("yxxzt") - M("yxxtz") - M("zxxyt") + M("zxxty") + M("txxyz") - M("txxzy");
    EXPECT_EQ(d, expected);
}
