// One line per acceptance criterion: PASS or FAIL, the check, and its wall time.
// Exits non-zero when any criterion fails.

#include "pivar/exprio.hpp"
#include "pivar/freealg.hpp"
#include "pivar/models.hpp"
#include "pivar/partitions.hpp"
#include "pivar/scenarios.hpp"
#include "pivar/tideal.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <fcntl.h>
#include <spawn.h>
#include <sys/resource.h>
#include <sys/wait.h>

extern char** environ;

using namespace pivar;

namespace {

// ---------------------------------------------------------------------------
// Oracles, written independently of the library.

// Hook length formula.
std::uint64_t oracle_hook_dim(const std::vector<int>& shape) {
    const int n = std::accumulate(shape.begin(), shape.end(), 0);
    std::uint64_t num = 1;
    for (int i = 2; i <= n; ++i)
        num *= static_cast<std::uint64_t>(i);
    std::uint64_t den = 1;
    for (std::size_t r = 0; r < shape.size(); ++r)
        for (int c = 0; c < shape[r]; ++c) {
            int below = 0;
            for (std::size_t rr = r + 1; rr < shape.size(); ++rr)
                below += shape[rr] > c;
            den *= static_cast<std::uint64_t>(shape[r] - c - 1 + below + 1);
        }
    return num / den;
}

std::vector<std::vector<int>> oracle_partitions(int n, int max_part) {
    if (n == 0)
        return {{}};
    std::vector<std::vector<int>> out;
    for (int first = std::min(n, max_part); first >= 1; --first)
        for (auto rest : oracle_partitions(n - first, first)) {
            rest.insert(rest.begin(), first);
            out.push_back(rest);
        }
    return out;
}

bool is_hook(const std::vector<int>& p) { return p.size() < 2 || p[1] <= 1; }

std::uint64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Rank of the consequences of x^3 in a multidegree: every word of that
// multidegree cut as u w1 w2 w3 v, summed over the orders of w1, w2, w3.
int oracle_cube_rank(const std::vector<int>& k) {
    std::string letters;
    for (std::size_t i = 0; i < k.size(); ++i)
        letters += std::string(k[i], static_cast<char>('a' + i));
    std::vector<std::string> words;
    std::string w = letters;
    std::sort(w.begin(), w.end());
    do
        words.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    std::map<std::string, int> col;
    for (std::size_t i = 0; i < words.size(); ++i)
        col[words[i]] = static_cast<int>(i);

    std::vector<std::vector<Rational>> rows;
    const int n = static_cast<int>(letters.size());
    for (const auto& word : words)
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    for (int d = c + 1; d <= n; ++d) {
                        std::vector<std::string> parts{word.substr(a, b - a), word.substr(b, c - b),
                                                       word.substr(c, d - c)};
                        std::vector<int> order{0, 1, 2};
                        std::vector<Rational> row(words.size());
                        do {
                            const std::string m = word.substr(0, a) + parts[order[0]] + parts[order[1]] +
                                                  parts[order[2]] + word.substr(d);
                            row[col.at(m)] += 1;
                        } while (std::next_permutation(order.begin(), order.end()));
                        rows.push_back(row);
                    }
    // Plain Gaussian elimination over Q.
    int rank = 0;
    const int cols = static_cast<int>(words.size());
    for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r)
            if (r != rank && rows[r][c] != 0) {
                const Rational f = rows[r][c] / rows[rank][c];
                for (int j = c; j < cols; ++j)
                    rows[r][j] -= f * rows[rank][j];
            }
        ++rank;
    }
    return rank;
}

// ---------------------------------------------------------------------------

using Clock = std::chrono::steady_clock;

struct Verdict {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<Verdict()>& body) {
    const auto t0 = Clock::now();
    Verdict v;
    try {
        v = body();
    } catch (const std::exception& e) {
        v.ok = false;
        v.detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    if (limit_seconds > 0 && s >= limit_seconds)
        v.expect(false, "took " + std::to_string(s) + " s, limit " + std::to_string(limit_seconds) + " s");
    if (!v.ok)
        ++failures;
    std::printf("%s %2d %s (%.2f s)\n", v.ok ? "PASS" : "FAIL", id, title.c_str(), s);
    if (!v.detail.empty())
        std::printf("        %s\n", v.detail.c_str());
    std::fflush(stdout);
}

std::string cochar_string(const CocharTable& t) {
    std::string out;
    for (const auto& [p, m] : t.entries)
        if (m)
            out += p.to_string() + ":" + std::to_string(m) + " ";
    return out;
}

Polynomial P(const std::string& s) { return parse(s); }

} // namespace

int main(int argc, char** argv) {
    // Optional path to the command line tool for the end-to-end run.
    std::string cli = argc > 1 ? argv[1] : "";
    std::string out_dir = argc > 2 ? argv[2] : ".";

    criterion(1, "Kostka table: all tabulated values reproduced exactly", 1.0, [] {
        struct Row {
            Partition shape;
            MultiDegree content;
            std::uint64_t value;
        };
        // As tabulated.
        const std::vector<Row> table{
            {{4}, {3, 1}, 1},           {{3, 1}, {2, 2}, 1},        {{4}, {2, 1, 1}, 1},
            {{2, 2}, {2, 1, 1}, 1},     {{3, 1}, {2, 1, 1}, 2},     {{3, 2}, {3, 1, 1}, 1},
            {{3, 2}, {2, 2, 1}, 1},     {{3, 1, 1}, {2, 2, 1}, 2},  {{2, 2, 1}, {2, 1, 1, 1}, 2},
            {{3, 2}, {2, 1, 1, 1}, 3},  {{3, 1, 1}, {2, 1, 1, 1}, 3},
        };
        Verdict v;
        int matched = 0;
        for (const auto& r : table) {
            const auto got = kostka(r.shape, r.content);
            matched += got == r.value;
            v.expect(got == r.value, r.shape.to_string() + " at " + r.content.to_string() + ": tabulated " +
                                         std::to_string(r.value) + ", computed " + std::to_string(got));
        }
        if (!v.ok)
            v.detail = std::to_string(matched) + "/" + std::to_string(table.size()) + " match; " + v.detail;
        return v;
    });

    criterion(2, "free algebra: multiplicities are hook dimensions, sum f_lambda^2 = n!, n <= 6", 5.0, [] {
        Verdict v;
        for (int n = 1; n <= 6; ++n) {
            const auto t = cocharacter(IdealPresentation(), n);
            std::uint64_t total = 0;
            for (const auto& p : oracle_partitions(n, n)) {
                const auto f = oracle_hook_dim(p);
                const auto m = t.multiplicity(Partition(p));
                v.expect(m == f, "n=" + std::to_string(n) + " " + Partition(p).to_string() + ": " +
                                     std::to_string(m) + " vs " + std::to_string(f));
                total += m * f;
            }
            v.expect(total == factorial(n), "n=" + std::to_string(n) + ": sum " + std::to_string(total));
            v.expect(pn_dim(IdealPresentation(), n) == factorial(n), "pn_dim " + std::to_string(n));
        }
        return v;
    });

    const IdealPresentation cube({P("x^3")});

    criterion(3, "span ranks for x^3: (3,1) 3, (2,2) 4, (2,1,1) 7, (3,1,1) 18, (2,2,1) 27, (2,1,1,1) 53", 60.0,
              [&] {
                  Verdict v;
                  const std::vector<std::pair<MultiDegree, int>> ladder{
                      {{3, 1}, 3}, {{2, 2}, 4}, {{2, 1, 1}, 7}, {{3, 1, 1}, 18}, {{2, 2, 1}, 27}, {{2, 1, 1, 1}, 53}};
                  for (const auto& [k, r] : ladder) {
                      const int got = consequence_basis(cube, k)->rank();
                      v.expect(got == r, k.to_string() + ": " + std::to_string(got));
                      const int oracle = oracle_cube_rank(k.degrees());
                      v.expect(oracle == got, k.to_string() + ": oracle " + std::to_string(oracle));
                  }
                  return v;
              });

    criterion(4, "x^3 cocharacters at n = 4, 5 and dim P_4 = 12, dim P_5 = 15", 0, [&] {
        Verdict v;
        const auto t4 = cocharacter(cube, 4);
        v.expect(cochar_string(t4) == "(3,1):1 (2,2):1 (2,1,1):2 (1,1,1,1):1 ", "n=4: " + cochar_string(t4));
        const auto t5 = cocharacter(cube, 5);
        v.expect(cochar_string(t5) == "(3,2):1 (3,1,1):1 (2,1,1,1):1 ", "n=5: " + cochar_string(t5));
        for (int n : {4, 5}) {
            std::uint64_t sum = 0;
            for (const auto& [p, m] : cocharacter(cube, n).entries)
                sum += m * oracle_hook_dim(p.parts());
            v.expect(pn_dim(cube, n) == sum, "pn_dim " + std::to_string(n) + " vs hook sum " + std::to_string(sum));
        }
        v.expect(pn_dim(cube, 4) == 12, "pn_dim 4 = " + std::to_string(pn_dim(cube, 4)));
        v.expect(pn_dim(cube, 5) == 15, "pn_dim 5 = " + std::to_string(pn_dim(cube, 5)));
        return v;
    });

    criterion(5, "x^3: dim P_6 = 0, the span at (1^6) has rank 720", 300.0, [&] {
        Verdict v;
        const int r = consequence_basis(cube, MultiDegree::ones(6))->rank();
        v.expect(r == 720, "rank " + std::to_string(r));
        v.expect(pn_dim(cube, 6) == 0, "pn_dim " + std::to_string(pn_dim(cube, 6)));
        return v;
    });

    criterion(6, "[x^2,y]: P_4 = M(4) + M(2,2), rank 4 at (2,2), P_n = M(n) for n = 5, 6", 0, [] {
        Verdict v;
        const IdealPresentation I({P("[x^2,y]")});
        const auto t4 = cocharacter(I, 4);
        v.expect(cochar_string(t4) == "(4):1 (2,2):1 ", "n=4: " + cochar_string(t4));
        v.expect(consequence_basis(I, {2, 2})->rank() == 4, "rank at (2,2)");
        for (int n : {5, 6}) {
            const auto t = cocharacter(I, n);
            v.expect(cochar_string(t) == "(" + std::to_string(n) + "):1 ", "n=" + std::to_string(n) + ": " +
                                                                              cochar_string(t));
        }
        return v;
    });

    criterion(7, "[x,y,z]: multiplicity 1 exactly on hooks for n = 4, 5, 6", 0, [] {
        Verdict v;
        const IdealPresentation I({P("[x,y,z]")});
        for (int n : {4, 5, 6}) {
            const auto t = cocharacter(I, n);
            for (const auto& p : oracle_partitions(n, n)) {
                const auto m = t.multiplicity(Partition(p));
                v.expect(m == (is_hook(p) ? 1u : 0u), Partition(p).to_string() + ": " + std::to_string(m));
            }
        }
        return v;
    });

    criterion(8, "S3: P_4 = M(4) + 2M(3,1) + M(2,2), P_5 = M(5) + 2M(4,1)", 0, [] {
        Verdict v;
        const IdealPresentation I({catalog("S3")});
        v.expect(cochar_string(cocharacter(I, 4)) == "(4):1 (3,1):2 (2,2):1 ", cochar_string(cocharacter(I, 4)));
        v.expect(cochar_string(cocharacter(I, 5)) == "(5):1 (4,1):2 ", cochar_string(cocharacter(I, 5)));
        return v;
    });

    criterion(9, "membership verdicts", 0, [&] {
        Verdict v;
        v.expect(contains(IdealPresentation({catalog("S3"), P("x^3")}), P("[x,y]^2")), "<S3, x^3> contains [x,y]^2");
        v.expect(contains(cube, P("yx^2zt + tyx^2z")), "<x^3> contains yx^2zt + tyx^2z");
        v.expect(!contains(cube.with(catalog("S4")), P("x^2y^2x")), "<x^3, S4> does not contain x^2y^2x");
        v.expect(!contains(IdealPresentation({catalog("S4")}), P("x^2y^2x")), "<S4> does not contain x^2y^2x");
        v.expect(contains(IdealPresentation({P("[x,y,z]")}), P("[x,y]z - z[x,y]")),
                 "<[x,y,z]> contains [x,y]z - z[x,y]");
        return v;
    });

    criterion(10, "witness algebras and agreement between algebra and span verdicts", 0, [] {
        Verdict v;
        const Algebra a1 = builtin_algebra("A1"), b1 = builtin_algebra("B1"), b2 = builtin_algebra("B2");
        v.expect(satisfies(a1, P("x[x,y]")), "A1 satisfies x[x,y]");
        Assignment ab{{1, a1.unit_vector(0)}, {2, a1.unit_vector(1)}};
        v.expect(a1.format(evaluate(P("[x,y]x^2"), a1, ab)) == "-b", "[a,b]a^2 = -b in A1");
        v.expect(satisfies(b2, P("[x,y]x^2")), "B2 satisfies [x,y]x^2");
        for (int k = 2; k <= 4; ++k)
            v.expect(!satisfies(b2, catalog("x^" + std::to_string(k) + "[x,y]")),
                     "B2 does not satisfy x^" + std::to_string(k) + "[x,y]");
        v.expect(satisfies(b1, P("[x,y]^2")) && satisfies(b2, P("[x,y]^2")), "B1, B2 satisfy [x,y]^2");

        // Every algebra that satisfies a variety and a graph node also satisfies
        // the node's consequences, and a target failing there is not in the span.
        int checked = 0;
        for (const auto& c : case_names()) {
            const VarietySpec spec = variety(c);
            const auto g = implication_graph(spec, 5);
            const IdealPresentation base = spec.ideal();
            for (std::size_t i = 0; i < g.nodes.size(); ++i) {
                const auto& src = g.nodes[i];
                for (const std::string name : {"A1", "B1", "B2", "K[x]"}) {
                    const Algebra alg = builtin_algebra(
                        name == "K[x]" ? "KxTrunc(" + std::to_string(src.degree + 2) + ")" : name);
                    bool sat = satisfies(alg, src.generator);
                    for (const auto& gen : spec.generators)
                        sat = sat && satisfies(alg, gen);
                    if (!sat)
                        continue;
                    for (std::size_t j = 0; j < g.nodes.size(); ++j) {
                        if (g.nodes[j].degree != src.degree + 1)
                            continue;
                        const bool edge = std::find(g.edges.begin(), g.edges.end(),
                                                    GraphEdge{static_cast<int>(i), static_cast<int>(j)}) !=
                                          g.edges.end();
                        const bool holds = satisfies(alg, g.nodes[j].generator);
                        ++checked;
                        v.expect(holds || !edge, c + ": " + src.name + " -> " + g.nodes[j].name + " fails in " +
                                                     name);
                        if (!holds)
                            v.expect(!contains(base.with(src.generator), g.nodes[j].generator),
                                     c + ": " + g.nodes[j].name + " in span but fails in " + name);
                    }
                }
            }
        }
        v.expect(checked > 0, "no pairs checked");
        if (v.ok)
            v.detail = std::to_string(checked) + " algebra/edge pairs agree";
        return v;
    });

    criterion(11, "x^3 highest-weight generators are non-zero and killed by raising polarizations", 0, [&] {
        Verdict v;
        for (const std::string name : {"xy^2x", "x^2yx", "x[y,z]x^2", "x^2y^2x", "e", "f1", "f2"}) {
            const Polynomial f = catalog(name);
            v.expect(!contains(cube, f), name + " is zero modulo x^3");
            const int m = f.max_variable();
            for (int i = 1; i <= m; ++i)
                for (int j = i + 1; j <= m; ++j) {
                    const Polynomial raised = polarization(f, j, i);
                    v.expect(raised.is_zero() || contains(cube, raised),
                             name + ": raising x" + std::to_string(j) + " to x" + std::to_string(i));
                }
            v.expect(highest_weight_check(cube, f), name + ": highest_weight_check");
        }
        v.expect(independent_modulo(cube, {catalog("f1"), catalog("f2")}) == 2, "f1, f2 independent");
        v.expect(highest_weight_check(cube, catalog("f1") + 3 * catalog("f2")), "f1 + 3 f2");
        return v;
    });

    criterion(12, "implication graphs for all cases: edges verified, non-edges certified, stable DOT", 0, [&] {
        Verdict v;
        std::filesystem::create_directories(out_dir);
        for (const auto& c : case_names()) {
            const VarietySpec spec = variety(c);
            const int top = c == "case-4" ? 5 : 6;
            const auto g = implication_graph(spec, top);
            const std::string dot = emit_dot(g);
            v.expect(dot == emit_dot(implication_graph(spec, top)), c + ": DOT differs between runs");
            std::ofstream(out_dir + "/" + c + ".dot") << dot;
            const IdealPresentation base = spec.ideal();
            for (const auto& e : g.edges)
                v.expect(contains(base.with(g.nodes[e.from].generator), g.nodes[e.to].generator),
                         c + ": edge " + g.nodes[e.from].name + " -> " + g.nodes[e.to].name);
            for (const auto& ne : g.non_edges) {
                const auto& src = g.nodes[ne.from];
                const auto& dst = g.nodes[ne.to];
                if (ne.certificate == "span") {
                    v.expect(!contains(base.with(src.generator), dst.generator),
                             c + ": span certificate " + src.name + " -/-> " + dst.name);
                    continue;
                }
                const Algebra alg = builtin_algebra(
                    ne.certificate == "K[x]" ? "KxTrunc(" + std::to_string(src.degree + 2) + ")" : ne.certificate);
                bool sat = satisfies(alg, src.generator);
                for (const auto& gen : spec.generators)
                    sat = sat && satisfies(alg, gen);
                v.expect(sat && witness_nonzero(alg, dst.generator).has_value(),
                         c + ": " + ne.certificate + " certificate " + src.name + " -/-> " + dst.name);
            }
            v.expect(g.edges.size() + g.non_edges.size() > 0, c + ": empty graph");
        }
        return v;
    });

    criterion(13, "rank at (3,2) for x^3 is 9, multiplicity of M(3,2) is 1, stated 4 is flagged", 0, [&] {
        Verdict v;
        const int oracle = oracle_cube_rank({3, 2});
        const int got = consequence_basis(cube, {3, 2})->rank();
        v.expect(oracle == 9, "oracle rank " + std::to_string(oracle));
        v.expect(got == oracle, "rank " + std::to_string(got));
        v.expect(cocharacter(cube, 5).multiplicity(Partition{3, 2}) == 1, "multiplicity of M(3,2)");
        RunOptions o;
        o.n_max = 5;
        const Report r = run_case("4", o);
        bool seen = false;
        for (const auto& c : r.claims)
            if (c.id == "4/rank/3,2") {
                seen = true;
                v.expect(c.status == ClaimStatus::flagged, "claim status " + to_string(c.status));
                v.expect(c.expected == "4", "claim expected " + c.expected);
                v.expect(c.note.find("inconsistent") != std::string::npos, "claim note");
            }
        v.expect(seen, "claim 4/rank/3,2 missing from the report");
        return v;
    });

    criterion(14, "full verify-paper run under 10 minutes and 2 GB", 600.0, [&] {
        Verdict v;
        if (cli.empty() || !std::filesystem::exists(cli)) {
            // In process when the tool is not built.
            const auto reports = verify_all();
            for (const auto& r : reports)
                v.expect(r.passed(), r.scenario + " failed");
            struct rusage u {};
            getrusage(RUSAGE_SELF, &u);
            v.expect(u.ru_maxrss < 2L * 1024 * 1024, "peak RSS " + std::to_string(u.ru_maxrss) + " KB");
            v.detail += (v.detail.empty() ? "" : "; ") + std::string("ran in process, peak RSS ") +
                        std::to_string(u.ru_maxrss / 1024) + " MB";
            return v;
        }
        const std::string json = out_dir + "/verify.json";
        const std::string manifest = out_dir + "/manifest.json";
        std::vector<std::string> args{cli, "verify-paper", "--json", json, "--manifest", manifest};
        std::vector<char*> argv_c;
        for (auto& a : args)
            argv_c.push_back(a.data());
        argv_c.push_back(nullptr);
        const std::string log = out_dir + "/verify.log";
        posix_spawn_file_actions_t actions;
        posix_spawn_file_actions_init(&actions);
        posix_spawn_file_actions_addopen(&actions, 1, log.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
        pid_t pid = 0;
        const int rc = posix_spawn(&pid, cli.c_str(), &actions, nullptr, argv_c.data(), environ);
        posix_spawn_file_actions_destroy(&actions);
        if (rc != 0) {
            v.expect(false, "could not start " + cli);
            return v;
        }
        int status = 0;
        struct rusage u {};
        wait4(pid, &status, 0, &u);
        v.expect(WIFEXITED(status) && WEXITSTATUS(status) == 0, "exit status " + std::to_string(status));
        v.expect(u.ru_maxrss < 2L * 1024 * 1024, "peak RSS " + std::to_string(u.ru_maxrss) + " KB");
        v.expect(std::filesystem::exists(manifest), "no manifest");
        if (v.ok)
            v.detail = "peak RSS " + std::to_string(u.ru_maxrss / 1024) + " MB, log in " + log;
        return v;
    });

    std::printf("%d of 14 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
