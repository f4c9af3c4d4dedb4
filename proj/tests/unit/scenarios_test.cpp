#include "pivar/errors.hpp"
#include "pivar/exprio.hpp"
#include "pivar/scenarios.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>

using namespace pivar;
using namespace pivar::testing;

namespace {

int sign_of(const std::vector<int>& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            inversions += p[i] > p[j];
    return inversions % 2 ? -1 : 1;
}

Algebra corrupted_a1() {
    // A1 with ba = 0 instead of b; still associative.
    return Algebra("A1", {"a", "b"}, {{{1, 0}, {0, 0}}, {{0, 0}, {0, 0}}});
}

} // namespace

TEST(Catalog, StandardPolynomialIsAlternating) {
    Polynomial s4 = catalog("S4");
    std::vector<int> p{1, 2, 3, 4};
    Polynomial oracle;
    do {
        oracle += Polynomial(Word({p[0], p[1], p[2], p[3]}), sign_of(p));
    } while (std::next_permutation(p.begin(), p.end()));
    EXPECT_EQ(s4, oracle);
}

TEST(Catalog, NamedElements) {
    EXPECT_EQ(catalog("g_{2,2}"), (M("xy") - M("yx")) * M("xx"));
    EXPECT_EQ(catalog("g_{1,3}"), M("xxxx"));
    EXPECT_EQ(catalog("[x,y]x^2"), catalog("g_{2,2}"));
    EXPECT_EQ(catalog("x^2[x,y]"), M("xxxy") - M("xxyx"));
    EXPECT_EQ(catalog("f1"), catalog("g"));
    EXPECT_EQ(catalog("x^2y^2x"), M("xxyyx"));
    for (const auto& name : catalog_examples())
        EXPECT_NO_THROW(catalog(name)) << name;
    EXPECT_THROW(catalog("nope"), UnknownName);
    EXPECT_THROW(catalog("x^0"), UnknownName);
}

TEST(Catalog, EExpansion) {
    // x^2 S3(y,z,t) + 2 sum sign y_s1 x^2 y_s2 y_s3
    std::vector<int> p{2, 3, 4};
    Polynomial oracle;
    do {
        const int s = sign_of(p);
        oracle += Polynomial(Word({1, 1, p[0], p[1], p[2]}), s);
        oracle += Polynomial(Word({p[0], 1, 1, p[1], p[2]}), 2 * s);
    } while (std::next_permutation(p.begin(), p.end()));
    EXPECT_EQ(catalog("e"), oracle);
}

TEST(Variety, Cases) {
    EXPECT_EQ(case_names().size(), 6u);
    EXPECT_EQ(variety("case-4").generators.front(), M("xxx"));
    EXPECT_EQ(variety("3").generators.front(), catalog("S3"));
    auto v = variety("2.1", 1, 2);
    EXPECT_EQ(v.generators.front(), M("xyx") - M("yxx") + 2 * (M("xxy") - M("xyx")));
    EXPECT_THROW(variety("2.1", 1, 1), Error);
    EXPECT_THROW(variety("2.1", 2, -2), Error);
    EXPECT_THROW(variety("2.1", 0, 3), Error);
    EXPECT_THROW(variety("5"), UnknownName);
}

TEST(Graph, EdgesAreConsequencesAndOutputIsStable) {
    const auto g = implication_graph("2.2", 5);
    const auto again = implication_graph("case-2.2", 5);
    EXPECT_EQ(emit_dot(g), emit_dot(again));
    ASSERT_FALSE(g.edges.empty());
    const IdealPresentation base = variety("2.2").ideal();
    for (const auto& e : g.edges) {
        EXPECT_EQ(g.nodes[e.to].degree, g.nodes[e.from].degree + 1);
        EXPECT_TRUE(contains(base.with(g.nodes[e.from].generator), g.nodes[e.to].generator));
    }
    for (const auto& ne : g.non_edges) {
        EXPECT_FALSE(contains(base.with(g.nodes[ne.from].generator), g.nodes[ne.to].generator));
        if (ne.certificate == "A1") {
            const Algebra a1 = builtin_algebra("A1");
            EXPECT_TRUE(satisfies(a1, g.nodes[ne.from].generator));
            EXPECT_FALSE(satisfies(a1, g.nodes[ne.to].generator));
        }
    }
    // [x,y]x^2 -> [x,y]x^3 only.
    int from = -1;
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        if (g.nodes[i].name == "[x,y]x^2")
            from = static_cast<int>(i);
    ASSERT_GE(from, 0);
    std::vector<std::string> targets;
    for (const auto& e : g.edges)
        if (e.from == from)
            targets.push_back(g.nodes[e.to].name);
    EXPECT_EQ(targets, std::vector<std::string>{"[x,y]x^3"});
}

TEST(Scenario, CaseTwoThreePasses) {
    RunOptions o;
    o.n_max = 5;
    const Report r = run_case("2.3", o);
    EXPECT_TRUE(r.passed()) << to_json(r);
    EXPECT_EQ(r.count(ClaimStatus::flagged), 0u);
    EXPECT_GT(r.claims.size(), 20u);
}

TEST(Scenario, OrderDoesNotDependOnWorkers) {
    RunOptions one, four;
    one.n_max = four.n_max = 5;
    one.jobs = 1;
    four.jobs = 4;
    EXPECT_EQ(to_json(run_case("3", one)), to_json(run_case("3", four)));
}

TEST(Scenario, CorruptedA1FailsTheWitnessClaim) {
    RunOptions o;
    o.n_max = 4;
    o.algebras = [](const std::string& name) { return name == "A1" ? corrupted_a1() : builtin_algebra(name); };
    const Report r = run_case("2.2", o);
    EXPECT_FALSE(r.passed());
    for (const auto& c : r.claims)
        if (c.status == ClaimStatus::fail)
            EXPECT_EQ(c.id.rfind("2.2/witness/", 0), 0u) << c.id;

    o.algebras = nullptr;
    EXPECT_TRUE(run_case("2.2", o).passed());
}

TEST(Scenario, FlaggedClaimsCarryNotes) {
    RunOptions o;
    o.n_max = 5;
    const Report r = run_case("4", o);
    EXPECT_TRUE(r.passed());
    std::vector<std::string> flagged;
    for (const auto& c : r.claims)
        if (c.status == ClaimStatus::flagged) {
            flagged.push_back(c.id);
            EXPECT_FALSE(c.note.empty());
        }
    EXPECT_EQ(flagged, (std::vector<std::string>{"4/span/3,1", "4/rank/3,2", "4/graph/xy^2x/targets"}));
}

TEST(Scenario, ManifestListsEveryClaim) {
    RunOptions o;
    o.n_max = 4;
    const std::vector<Report> reports{verify_preliminaries(o), run_case("2.1", o)};
    const std::string m = claims_manifest(reports);
    for (const auto& r : reports)
        for (const auto& c : r.claims)
            EXPECT_NE(m.find("\"" + c.id + "\""), std::string::npos) << c.id;
}

TEST(Scenario, DegreeCapFromEnvironment) {
    setenv("PIVAR_DEGREE_CAP", "5", 1);
    EXPECT_THROW(implication_graph("2.1", 6), DegreeCapExceeded);
    RunOptions o;
    o.n_max = 9;
    const Report r = run_case("2.1", o);
    unsetenv("PIVAR_DEGREE_CAP");
    for (const auto& c : r.claims)
        EXPECT_EQ(c.id.find("cocharacter/6"), std::string::npos) << c.id;
    EXPECT_TRUE(r.passed());
}
