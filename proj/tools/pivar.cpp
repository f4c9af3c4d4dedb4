#include "pivar/errors.hpp"
#include "pivar/exprio.hpp"
#include "pivar/models.hpp"
#include "pivar/partitions.hpp"
#include "pivar/scenarios.hpp"
#include "pivar/tideal.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace pivar;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write " + path);
    out << text;
}

struct IdealArgs {
    std::string file;
    std::vector<std::string> exprs;

    void attach(CLI::App* app) {
        app->add_option("--ideal", file, "File with one identity per line")->check(CLI::ExistingFile);
        app->add_option("--expr", exprs, "Identity (repeatable)")->allow_extra_args(false);
    }

    IdealPresentation load() const {
        std::vector<Polynomial> gens;
        if (!file.empty())
            gens = parse_ideal(read_file(file));
        for (const auto& e : exprs)
            gens.push_back(parse(e));
        return IdealPresentation(gens);
    }
};

Algebra load_algebra(const std::string& spec) {
    if (std::filesystem::is_regular_file(spec))
        return algebra_from_json(read_file(spec));
    return builtin_algebra(spec);
}

void print_report(const Report& r, bool verbose) {
    for (const auto& c : r.claims) {
        if (!verbose && c.status == ClaimStatus::pass)
            continue;
        std::cout << "  [" << to_string(c.status) << "] " << c.id << ": expected " << c.expected << ", computed "
                  << c.computed;
        if (verbose)
            std::cout << " (" << std::fixed << std::setprecision(2) << c.seconds << " s)";
        std::cout << "\n";
        if (!c.note.empty())
            std::cout << "      " << c.note << "\n";
    }
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.scenario << ": " << r.count(ClaimStatus::pass) << " passed, "
              << r.count(ClaimStatus::flagged) << " flagged, " << r.count(ClaimStatus::fail) << " failed ("
              << std::fixed << std::setprecision(2) << r.seconds << " s)\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Identities of free associative algebras over Q"};
    app.require_subcommand(1);

    IdealArgs ideal_args;
    int n = 0, max_parts = 0;
    bool as_json = false;
    auto* coch = app.add_subcommand("cocharacter", "Multiplicities of the irreducible modules in P_n modulo the ideal");
    ideal_args.attach(coch);
    coch->add_option("--n", n, "Degree")->required()->check(CLI::PositiveNumber);
    coch->add_option("--max-parts", max_parts, "Only partitions with at most this many parts");
    coch->add_flag("--json", as_json, "JSON output");

    std::string multidegree;
    auto* span = app.add_subcommand("span", "Basis of the consequences of a given multidegree");
    ideal_args.attach(span);
    span->add_option("--multidegree", multidegree, "e.g. 2,1,1,1")->required();
    span->add_flag("--json", as_json, "JSON output");

    std::string target;
    auto* member = app.add_subcommand("member", "Is the target a consequence of the ideal; exit 1 when it is not");
    ideal_args.attach(member);
    member->add_option("--target", target, "Polynomial")->required();

    std::string shape, content;
    auto* kost = app.add_subcommand("kostka", "Number of semistandard tableaux");
    kost->add_option("--shape", shape, "e.g. 3,1")->required();
    kost->add_option("--content", content, "e.g. 2,1,1")->required();

    std::string case_name, dot_path;
    int n_max = 6;
    auto* lattice = app.add_subcommand("lattice", "Implication graph of a case");
    lattice->add_option("--case", case_name, "2.1, 2.2, 2.3, 2.4, 3 or 4")->required();
    lattice->add_option("--n-max", n_max, "Largest degree")->check(CLI::PositiveNumber);
    lattice->add_option("--dot", dot_path, "Write Graphviz output here");

    std::string json_path, manifest_path;
    unsigned jobs = 0;
    bool sweep = false, verbose = false;
    auto* verify = app.add_subcommand("verify-paper", "Run the scenario suites");
    verify->add_option("--case", case_name, "Only this case");
    verify->add_option("--json", json_path, "Write the report here");
    verify->add_option("--manifest", manifest_path, "Write the claims manifest here");
    verify->add_option("--n-max", n_max, "Largest degree for claims about every n")->check(CLI::PositiveNumber);
    verify->add_option("--jobs", jobs, "Worker threads, 0 for all cores");
    verify->add_flag("--sweep", sweep, "Also sweep the parameters of case 2.1");
    verify->add_flag("-v,--verbose", verbose, "List passing claims too");

    std::string algebra, expr, assign;
    auto* eval = app.add_subcommand("eval", "Evaluate a polynomial in a finite-dimensional algebra");
    eval->add_option("--algebra", algebra, "A1, B1, B2, kx:N or a JSON file")->required();
    eval->add_option("--expr", expr, "Polynomial")->required();
    eval->add_option("--assign", assign, "e.g. \"x=a,y=b\"; without it the identity is checked");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*coch) {
            auto t = cocharacter(ideal_args.load(), n, max_parts > 0 ? max_parts : n);
            if (as_json) {
                std::cout << to_json(t) << "\n";
            } else {
                for (const auto& [p, m] : t.entries)
                    std::cout << p.to_string() << " " << m << "\n";
                std::cout << "dim " << t.dimension() << "\n";
            }
        } else if (*span) {
            auto s = consequence_basis(ideal_args.load(), MultiDegree::parse(multidegree));
            if (as_json) {
                std::cout << to_json(*s) << "\n";
            } else {
                std::cout << "ambient " << s->ambient_dim() << ", rank " << s->rank() << "\n";
                for (const auto& f : s->row_polynomials())
                    std::cout << print(f) << "\n";
            }
        } else if (*member) {
            const bool in = contains(ideal_args.load(), parse(target));
            std::cout << (in ? "true" : "false") << "\n";
            return in ? 0 : 1;
        } else if (*kost) {
            std::cout << kostka(Partition::parse(shape), MultiDegree::parse(content)) << "\n";
        } else if (*lattice) {
            const auto g = implication_graph(case_name, n_max);
            for (const auto& e : g.edges)
                std::cout << g.nodes[e.from].name << " -> " << g.nodes[e.to].name << "\n";
            for (const auto& e : g.non_edges)
                std::cout << g.nodes[e.from].name << " -/-> " << g.nodes[e.to].name << " [" << e.certificate << "]\n";
            if (!dot_path.empty())
                write_file(dot_path, emit_dot(g));
        } else if (*verify) {
            RunOptions o;
            o.n_max = n_max;
            o.jobs = jobs;
            o.parameter_sweep = sweep;
            std::vector<Report> reports;
            if (case_name.empty())
                reports = verify_all(o);
            else
                reports.push_back(run_case(case_name, o));
            bool ok = true;
            for (const auto& r : reports) {
                print_report(r, verbose);
                ok = ok && r.passed();
            }
            if (!json_path.empty())
                write_file(json_path, to_json(reports) + "\n");
            if (!manifest_path.empty())
                write_file(manifest_path, claims_manifest(reports) + "\n");
            return ok ? 0 : 1;
        } else if (*eval) {
            const Algebra a = load_algebra(algebra);
            const Polynomial f = parse(expr);
            if (assign.empty()) {
                const bool ok = satisfies(a, f);
                std::cout << (ok ? "identity holds in " : "identity fails in ") << a.name() << "\n";
                if (!ok)
                    if (auto w = witness_nonzero(a, f))
                        std::cout << format_assignment(a, *w) << "\n";
                return ok ? 0 : 1;
            }
            std::cout << a.format(evaluate(f, a, parse_assignment(a, assign))) << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "pivar: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
