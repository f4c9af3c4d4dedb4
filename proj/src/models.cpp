#include "pivar/models.hpp"

#include "pivar/errors.hpp"
#include "pivar/freealg.hpp"

#include <json.hpp>

#include <functional>
#include <random>
#include <regex>
#include <sstream>

namespace pivar {

namespace {

using json = nlohmann::json;

} // namespace

Algebra::Algebra(std::string name, std::vector<std::string> basis, std::vector<std::vector<Element>> table)
    : name_(std::move(name)), basis_(std::move(basis)), table_(std::move(table)) {
    const std::size_t n = basis_.size();
    if (n == 0)
        throw Error("algebra " + name_ + " has an empty basis");
    if (table_.size() != n)
        throw Error("structure table of " + name_ + " has the wrong number of rows");
    for (const auto& row : table_) {
        if (row.size() != n)
            throw Error("structure table of " + name_ + " has a row of the wrong length");
        for (const auto& v : row)
            if (v.size() != n)
                throw Error("structure table of " + name_ + " has a vector of the wrong length");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Element left = multiply(table_[i][j], unit_vector(static_cast<int>(k)));
                Element right = multiply(unit_vector(static_cast<int>(i)), table_[j][k]);
                if (left != right)
                    throw AssociativityError("algebra " + name_ + " is not associative: (" + basis_[i] + basis_[j] +
                                             ")" + basis_[k] + " != " + basis_[i] + "(" + basis_[j] + basis_[k] + ")");
            }
}

Element Algebra::unit_vector(int i) const {
    Element e = zero();
    e[i] = 1;
    return e;
}

Element Algebra::multiply(const Element& a, const Element& b) const {
    Element out = zero();
    const std::size_t n = basis_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j] == 0)
                continue;
            const Rational c = a[i] * b[j];
            const Element& p = table_[i][j];
            for (std::size_t k = 0; k < n; ++k)
                if (p[k] != 0)
                    out[k] += c * p[k];
        }
    }
    return out;
}

int Algebra::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i] == label)
            return static_cast<int>(i);
    return -1;
}

std::string Algebra::format(const Element& a) const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        Rational c = a[i];
        if (c < 0) {
            out << (first ? "-" : " - ");
            c = -c;
        } else if (!first) {
            out << " + ";
        }
        if (c != 1)
            out << c.get_str() << '*';
        out << basis_[i];
        first = false;
    }
    return first ? "0" : out.str();
}

bool is_zero(const Element& a) {
    for (const auto& c : a)
        if (c != 0)
            return false;
    return true;
}

namespace {

Algebra truncated_polynomials(int n) {
    if (n < 2)
        throw UnknownName("KxTrunc(" + std::to_string(n) + ")");
    const int dim = n - 1;
    std::vector<std::string> basis;
    for (int i = 1; i <= dim; ++i)
        basis.push_back(i == 1 ? "x" : "x^" + std::to_string(i));
    std::vector<std::vector<Element>> table(dim, std::vector<Element>(dim, Element(dim)));
    for (int i = 1; i <= dim; ++i)
        for (int j = 1; j <= dim; ++j)
            if (i + j < n)
                table[i - 1][j - 1][i + j - 1] = 1;
    return Algebra("KxTrunc(" + std::to_string(n) + ")", basis, table);
}

// Two-dimensional algebra from the products of its basis elements.
Algebra two_dim(const std::string& name, std::vector<std::string> basis, const std::vector<std::vector<int>>& target) {
    // target[i][j]: index of b_i b_j, or -1 for zero
    std::vector<std::vector<Element>> table(2, std::vector<Element>(2, Element(2)));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (target[i][j] >= 0)
                table[i][j][target[i][j]] = 1;
    return Algebra(name, std::move(basis), table);
}

} // namespace

Algebra builtin_algebra(const std::string& name) {
    if (name == "A1")
        return two_dim("A1", {"a", "b"}, {{0, -1}, {1, -1}});
    if (name == "B1")
        return two_dim("B1", {"e11", "e21"}, {{0, -1}, {1, -1}});
    if (name == "B2")
        return two_dim("B2", {"e11", "e12"}, {{0, 1}, {-1, -1}});
    static const std::regex trunc(R"((?:KxTrunc\((\d+)\))|(?:kx:(\d+)))");
    std::smatch m;
    if (std::regex_match(name, m, trunc))
        return truncated_polynomials(std::stoi(m[1].matched ? m[1].str() : m[2].str()));
    throw UnknownName(name);
}

Algebra algebra_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
        const int dim = j.at("dim").get<int>();
        auto basis = j.at("basis").get<std::vector<std::string>>();
        if (static_cast<int>(basis.size()) != dim)
            throw Error("basis has " + std::to_string(basis.size()) + " names but dim is " + std::to_string(dim));
        std::vector<std::vector<Element>> table;
        for (const auto& row : j.at("table")) {
            table.emplace_back();
            for (const auto& vec : row) {
                Element e;
                for (const auto& q : vec) {
                    const auto num = q.at(0).get<std::int64_t>();
                    const auto den = q.at(1).get<std::int64_t>();
                    if (den == 0)
                        throw Error("zero denominator in structure table");
                    e.push_back(make_rational(num, den));
                }
                table.back().push_back(std::move(e));
            }
        }
        return Algebra(j.value("name", std::string("file")), std::move(basis), std::move(table));
    } catch (const json::exception& e) {
        throw Error(std::string("malformed algebra file: ") + e.what());
    }
}

std::string algebra_to_json(const Algebra& a) {
    json table = json::array();
    for (int i = 0; i < a.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < a.dim(); ++j) {
            json vec = json::array();
            for (const auto& c : a.product(i, j))
                vec.push_back({c.get_num().get_si(), c.get_den().get_si()});
            row.push_back(vec);
        }
        table.push_back(row);
    }
    return json{{"name", a.name()}, {"dim", a.dim()}, {"basis", a.basis()}, {"table", table}}.dump();
}

Element evaluate(const Polynomial& f, const Algebra& a, const Assignment& values) {
    Element out = a.zero();
    for (const auto& [w, c] : f.terms()) {
        Element acc;
        for (std::size_t i = 0; i < w.size(); ++i) {
            auto it = values.find(w[i]);
            if (it == values.end())
                throw UnassignedVariable(w[i]);
            if (static_cast<int>(it->second.size()) != a.dim())
                throw Error("assigned element for variable " + std::to_string(w[i]) + " has the wrong length");
            if (i == 0)
                acc = it->second;
            else if (!is_zero(acc))
                acc = a.multiply(acc, it->second);
        }
        for (std::size_t k = 0; k < out.size(); ++k)
            out[k] += c * acc[k];
    }
    return out;
}

namespace {

// Calls visit(tuple) for every tuple of basis indices of the given length until
// it returns true.
bool for_each_tuple(int dim, int length, const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<int> t(length, 0);
    while (true) {
        if (visit(t))
            return true;
        int i = length - 1;
        while (i >= 0 && ++t[i] == dim)
            t[i--] = 0;
        if (i < 0)
            return false;
    }
}

Assignment basis_assignment(const Algebra& a, const std::vector<int>& vars, const std::vector<int>& tuple) {
    Assignment out;
    for (std::size_t i = 0; i < vars.size(); ++i)
        out[vars[i]] = a.unit_vector(tuple[i]);
    return out;
}

using Sparse = std::vector<std::pair<int, Rational>>;

// Evaluates a polynomial on basis elements, tuple[i] being the basis index of x_(i+1). Products of
// basis elements are kept sparse and the running product of a word prefix is
// reused by the next word sharing it.
class BasisEvaluator {
public:
    BasisEvaluator(const Algebra& a, const Polynomial& f) : dim_(a.dim()), table_(dim_ * dim_) {
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) {
                const Element& p = a.product(i, j);
                for (int k = 0; k < dim_; ++k)
                    if (p[k] != 0)
                        table_[i * dim_ + j].emplace_back(k, p[k]);
            }
        for (const auto& [w, c] : f.terms())
            terms_.emplace_back(std::vector<int>(w.letters().begin(), w.letters().end()), c);
    }

    bool vanishes(const std::vector<int>& tuple) {
        Element out(dim_);
        std::vector<Sparse> stack;
        const std::vector<int>* previous = nullptr;
        for (const auto& [word, c] : terms_) {
            std::size_t keep = 0;
            if (previous)
                while (keep < stack.size() && keep < word.size() && (*previous)[keep] == word[keep])
                    ++keep;
            stack.resize(keep);
            for (std::size_t i = keep; i < word.size(); ++i) {
                const int b = tuple[word[i] - 1];
                if (i == 0) {
                    stack.push_back({{b, Rational(1)}});
                    continue;
                }
                Sparse next;
                for (const auto& [idx, coef] : stack.back())
                    for (const auto& [k, v] : table_[idx * dim_ + b]) {
                        auto it = std::find_if(next.begin(), next.end(), [&](const auto& e) { return e.first == k; });
                        if (it == next.end())
                            next.emplace_back(k, coef * v);
                        else
                            it->second += coef * v;
                    }
                std::erase_if(next, [](const auto& e) { return e.second == 0; });
                stack.push_back(std::move(next));
            }
            previous = &word;
            for (const auto& [k, v] : stack.back())
                out[k] += c * v;
        }
        return is_zero(out);
    }

private:
    int dim_;
    std::vector<Sparse> table_;
    std::vector<std::pair<std::vector<int>, Rational>> terms_;
};

// Basis tuple on which the linearization of the multihomogeneous g is non-zero.
std::optional<std::vector<int>> linearized_witness(const Algebra& a, const Linearization& lin) {
    const int n = static_cast<int>(lin.origin.size());
    BasisEvaluator eval(a, lin.poly);
    std::optional<std::vector<int>> found;
    for_each_tuple(a.dim(), n, [&](const std::vector<int>& t) {
        if (eval.vanishes(t))
            return false;
        found = t;
        return true;
    });
    return found;
}

std::vector<int> variables_of(const Polynomial& f) {
    std::vector<bool> seen(f.max_variable() + 1, false);
    for (const auto& [w, c] : f.terms())
        for (auto l : w.letters())
            seen[l] = true;
    std::vector<int> out;
    for (int i = 1; i < static_cast<int>(seen.size()); ++i)
        if (seen[i])
            out.push_back(i);
    return out;
}

bool random_cross_check(const Algebra& a, const Polynomial& f) {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coef(-3, 3);
    const auto vars = variables_of(f);
    for (int s = 0; s < 4; ++s) {
        Assignment values;
        for (int v : vars) {
            Element e(a.dim());
            for (auto& c : e)
                c = coef(rng);
            values[v] = e;
        }
        if (!is_zero(evaluate(f, a, values)))
            return false;
    }
    return true;
}

} // namespace

bool satisfies(const Algebra& a, const Polynomial& f) {
    bool result = true;
    for (const auto& [k, part] : f.components())
        if (linearized_witness(a, linearize(part))) {
            result = false;
            break;
        }
    if (result && !random_cross_check(a, f))
        throw Error("identity check on " + a.name() + " disagrees with a random evaluation");
    return result;
}

std::optional<Assignment> witness_nonzero(const Algebra& a, const Polynomial& f) {
    if (f.is_zero())
        return std::nullopt;
    const auto vars = variables_of(f);

    // Plain basis elements first.
    std::optional<Assignment> found;
    BasisEvaluator eval(a, f);
    std::vector<int> by_variable(f.max_variable(), 0);
    for_each_tuple(a.dim(), static_cast<int>(vars.size()), [&](const std::vector<int>& t) {
        for (std::size_t i = 0; i < vars.size(); ++i)
            by_variable[vars[i] - 1] = t[i];
        if (eval.vanishes(by_variable))
            return false;
        found = basis_assignment(a, vars, t);
        return true;
    });
    if (found)
        return found;

    // Otherwise some component has a non-vanishing linearization on a basis
    // tuple. Put x_i = sum_j c_j e_(t_j) over the fresh variables of x_i; f is then
    // a non-zero polynomial in the c_j of degree at most deg_i(f) in each, so it
    // does not vanish on the grid {0..deg_i(f)}.
    for (const auto& [k, part] : f.components()) {
        const Linearization lin = linearize(part);
        auto tuple = linearized_witness(a, lin);
        if (!tuple)
            continue;
        std::map<int, int> max_degree;
        for (const auto& [w, c] : f.terms())
            for (int v : vars)
                max_degree[v] = std::max(max_degree[v], w.count(v));
        const int n = static_cast<int>(lin.origin.size());
        std::vector<int> grid(n, 0);
        while (true) {
            Assignment values;
            for (int v : vars)
                values[v] = a.zero();
            for (int j = 0; j < n; ++j)
                values[lin.origin[j]][(*tuple)[j]] += grid[j];
            if (!is_zero(evaluate(f, a, values)))
                return values;
            int j = n - 1;
            while (j >= 0 && ++grid[j] > max_degree[lin.origin[j]])
                grid[j--] = 0;
            if (j < 0)
                break;
        }
        throw Error("witness search on " + a.name() + " exhausted its grid");
    }
    return std::nullopt;
}

} // namespace pivar
