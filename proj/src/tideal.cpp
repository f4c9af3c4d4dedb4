#include "pivar/tideal.hpp"

#include "pivar/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace pivar {

DegreeCap DegreeCap::from_env() {
    DegreeCap cap;
    if (const char* env = std::getenv("PIVAR_DEGREE_CAP"); env && *env) {
        try {
            cap.total_degree = std::stoi(env);
        } catch (const std::exception&) {
            throw Error(std::string("PIVAR_DEGREE_CAP is not an integer: ") + env);
        }
    }
    return cap;
}

std::string serialize(const Polynomial& f) {
    std::ostringstream out;
    for (const auto& [w, c] : f.terms()) {
        out << c.get_str() << ':';
        for (std::size_t i = 0; i < w.size(); ++i)
            out << (i ? "." : "") << w[i];
        out << ' ';
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// SpanBasis

SpanBasis::SpanBasis(MultiDegree k, std::vector<Word> monomials, RowEchelon echelon)
    : multidegree_(std::move(k)), monomials_(std::move(monomials)), echelon_(std::move(echelon)) {}

std::vector<Polynomial> SpanBasis::row_polynomials() const {
    std::vector<Polynomial> out;
    for (const auto& row : rows()) {
        Polynomial p;
        for (const auto& e : row)
            p.add_term(monomials_[e.col], e.value);
        out.push_back(std::move(p));
    }
    return out;
}

RatRow SpanBasis::coordinates(const Polynomial& f) const {
    RatRow row;
    for (const auto& [w, c] : f.terms()) {
        auto it = std::lower_bound(monomials_.begin(), monomials_.end(), w);
        if (it == monomials_.end() || !(*it == w))
            throw Error("polynomial is not homogeneous of multidegree " + multidegree_.to_string());
        row.push_back({static_cast<int>(it - monomials_.begin()), c});
    }
    return row;
}

bool SpanBasis::contains(const Polynomial& f) const { return echelon_.contains(coordinates(f)); }

// ---------------------------------------------------------------------------
// IdealPresentation

struct IdealPresentation::State {
    std::vector<Polynomial> generators;
    std::vector<Linearization> linearized;
    int universe = 0;
    DegreeCap cap;
    std::string fingerprint;
};

IdealPresentation::IdealPresentation() : IdealPresentation(std::vector<Polynomial>{}) {}

IdealPresentation::IdealPresentation(const std::vector<Polynomial>& generators, DegreeCap cap)
    : state_(std::make_shared<State>()) {
    if (generators.size() > cap.generator_count)
        throw DegreeCapExceeded("ideal has " + std::to_string(generators.size()) + " generators, cap is " +
                                std::to_string(cap.generator_count));
    state_->cap = cap;
    std::vector<std::string> keys;
    for (const auto& g : generators)
        for (auto& [k, component] : g.components()) {
            std::string key = serialize(component);
            if (std::find(keys.begin(), keys.end(), key) != keys.end())
                continue;
            keys.push_back(key);
            state_->universe = std::max(state_->universe, component.max_variable());
            state_->generators.push_back(component);
        }
    for (const auto& g : state_->generators)
        state_->linearized.push_back(linearize(g));
    std::sort(keys.begin(), keys.end());
    for (const auto& key : keys)
        state_->fingerprint += key + ";";
}

const std::vector<Polynomial>& IdealPresentation::generators() const { return state_->generators; }
const std::vector<Linearization>& IdealPresentation::linearized() const { return state_->linearized; }
int IdealPresentation::universe() const { return state_->universe; }
const DegreeCap& IdealPresentation::cap() const { return state_->cap; }
const std::string& IdealPresentation::fingerprint() const { return state_->fingerprint; }

IdealPresentation IdealPresentation::with(const Polynomial& extra) const {
    return with(std::vector<Polynomial>{extra});
}

IdealPresentation IdealPresentation::with(const std::vector<Polynomial>& extra) const {
    std::vector<Polynomial> all = state_->generators;
    all.insert(all.end(), extra.begin(), extra.end());
    DegreeCap cap = state_->cap;
    cap.generator_count = std::max(cap.generator_count, all.size());
    return IdealPresentation(all, cap);
}

// ---------------------------------------------------------------------------
// Consequence enumeration

namespace {

struct RowHash {
    std::size_t operator()(const IntRow& row) const {
        std::size_t h = row.size();
        for (const auto& e : row) {
            h = h * 1000003u ^ static_cast<std::size_t>(e.col);
            h = h * 1000003u ^ static_cast<std::size_t>(mpz_get_si(e.value.get_mpz_t()));
        }
        return h;
    }
};

// Integer form of a multilinear generator: slot order of each term plus coefficient.
struct LinearTerms {
    int degree = 0;
    std::vector<std::pair<std::vector<int>, Integer>> terms;
};

LinearTerms integer_terms(const Linearization& lin) {
    LinearTerms out;
    out.degree = static_cast<int>(lin.origin.size());
    Integer common = 1;
    for (const auto& [w, c] : lin.poly.terms())
        common = lcm(common, Integer(c.get_den()));
    for (const auto& [w, c] : lin.poly.terms()) {
        std::vector<int> slots(w.letters().begin(), w.letters().end());
        for (auto& s : slots)
            --s;
        Rational scaled = c * Rational(common);
        out.terms.emplace_back(std::move(slots), Integer(scaled.get_num()));
    }
    return out;
}

class WordIndex {
public:
    WordIndex(const std::vector<Word>& words, int letters_bound) {
        bits_ = letters_bound < 16 ? 4 : 8;
        if (!words.empty() && words.front().size() * bits_ > 64)
            throw DegreeCapExceeded("words too long to index");
        index_.reserve(words.size() * 2);
        for (std::size_t i = 0; i < words.size(); ++i) {
            std::vector<int> letters(words[i].letters().begin(), words[i].letters().end());
            index_.emplace(encode(letters), static_cast<int>(i));
        }
    }

    std::uint64_t encode(const std::vector<int>& letters) const {
        std::uint64_t key = 0;
        for (int l : letters)
            key = (key << bits_) | static_cast<std::uint64_t>(l);
        return key;
    }

    int at(std::uint64_t key) const { return index_.at(key); }

private:
    int bits_;
    std::unordered_map<std::uint64_t, int> index_;
};

RowEchelon build_span(const IdealPresentation& ideal, const MultiDegree& k, const std::vector<Word>& basis) {
    const int n = k.total();
    const int columns = static_cast<int>(basis.size());
    RowEchelon echelon(columns);
    WordIndex index(basis, k.size());

    std::vector<LinearTerms> gens;
    for (const auto& lin : ideal.linearized())
        if (static_cast<int>(lin.origin.size()) <= n)
            gens.push_back(integer_terms(lin));
    if (gens.empty())
        return echelon;

    std::unordered_set<IntRow, RowHash> seen;
    std::vector<IntRow> rows;
    std::vector<int> letters(n), built(n);
    std::vector<int> cuts;

    for (const auto& gen : gens) {
        const int d = gen.degree;
        // Boundaries s_0 < s_1 < ... < s_d: u = W[0, s_0), w_i = W[s_{i-1}, s_i), v = W[s_d, n).
        cuts.assign(d + 1, 0);
        for (const Word& word : basis) {
            for (int i = 0; i < n; ++i)
                letters[i] = word[i];
            auto emit = [&]() {
                IntRow row;
                row.reserve(gen.terms.size());
                for (const auto& [slots, coeff] : gen.terms) {
                    int p = 0;
                    for (int i = 0; i < cuts[0]; ++i)
                        built[p++] = letters[i];
                    for (int s : slots)
                        for (int i = cuts[s]; i < cuts[s + 1]; ++i)
                            built[p++] = letters[i];
                    for (int i = cuts[d]; i < n; ++i)
                        built[p++] = letters[i];
                    row.push_back({index.at(index.encode(built)), coeff});
                }
                std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
                IntRow merged;
                for (auto& e : row) {
                    if (!merged.empty() && merged.back().col == e.col)
                        merged.back().value += e.value;
                    else
                        merged.push_back(std::move(e));
                }
                std::erase_if(merged, [](const auto& e) { return e.value == 0; });
                if (!make_primitive(merged))
                    return;
                if (seen.insert(merged).second)
                    rows.push_back(std::move(merged));
            };
            auto rec = [&](auto&& self, int i) -> void {
                if (i > d) {
                    emit();
                    return;
                }
                int lo = i == 0 ? 0 : cuts[i - 1] + 1;
                int hi = n - (d - i); // leave room for the remaining non-empty slots
                for (int s = lo; s <= hi; ++s) {
                    cuts[i] = s;
                    self(self, i + 1);
                }
            };
            rec(rec, 0);
        }
    }

    for (auto& row : rows) {
        echelon.insert(std::move(row));
        if (echelon.full())
            break;
    }
    return echelon;
}

struct SpanCache {
    std::mutex mutex;
    std::map<std::pair<std::string, MultiDegree>, std::shared_future<std::shared_ptr<const SpanBasis>>> entries;

    static SpanCache& global() {
        static SpanCache cache;
        return cache;
    }
};

void check_cap(const IdealPresentation& ideal, const MultiDegree& k, std::size_t ambient) {
    if (k.total() > ideal.cap().total_degree)
        throw DegreeCapExceeded("total degree " + std::to_string(k.total()) + " exceeds cap " +
                                std::to_string(ideal.cap().total_degree));
    if (ambient > ideal.cap().ambient_dim)
        throw DegreeCapExceeded("ambient dimension " + std::to_string(ambient) + " at " + k.to_string() +
                                " exceeds cap " + std::to_string(ideal.cap().ambient_dim));
}

} // namespace

std::shared_ptr<const SpanBasis> IdealPresentation::basis(const MultiDegree& raw) const {
    MultiDegree k = raw.trimmed();
    if (k.total() < 1)
        throw Error("multidegree must have positive total degree");
    check_cap(*this, k, multinomial(k));

    auto& cache = SpanCache::global();
    std::promise<std::shared_ptr<const SpanBasis>> promise;
    std::shared_future<std::shared_ptr<const SpanBasis>> future;
    bool owner = false;
    {
        std::lock_guard lock(cache.mutex);
        auto key = std::make_pair(fingerprint(), k);
        if (auto it = cache.entries.find(key); it != cache.entries.end()) {
            future = it->second;
        } else {
            future = promise.get_future().share();
            cache.entries.emplace(std::move(key), future);
            owner = true;
        }
    }
    if (owner) {
        try {
            std::vector<Word> monomials = monomial_basis(k.size(), k);
            RowEchelon echelon = build_span(*this, k, monomials);
            promise.set_value(std::make_shared<const SpanBasis>(k, std::move(monomials), std::move(echelon)));
        } catch (...) {
            promise.set_exception(std::current_exception());
            std::lock_guard lock(cache.mutex);
            cache.entries.erase(std::make_pair(fingerprint(), k));
        }
    }
    return future.get();
}

std::shared_ptr<const SpanBasis> consequence_basis(const IdealPresentation& ideal, const MultiDegree& k) {
    return ideal.basis(k);
}

bool contains(const IdealPresentation& ideal, const Polynomial& g) {
    for (const auto& [k, component] : g.components())
        if (!ideal.basis(k)->contains(component))
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Cocharacters

std::uint64_t CocharTable::multiplicity(const Partition& lambda) const {
    for (const auto& [p, kappa] : entries)
        if (p == lambda)
            return kappa;
    return 0;
}

std::uint64_t CocharTable::dimension() const {
    std::uint64_t total = 0;
    for (const auto& [p, kappa] : entries)
        total += kappa * hook_dim(p);
    return total;
}

std::map<Partition, std::uint64_t> CocharTable::nonzero() const {
    std::map<Partition, std::uint64_t> out;
    for (const auto& [p, kappa] : entries)
        if (kappa)
            out.emplace(p, kappa);
    return out;
}

CocharTable cocharacter(const IdealPresentation& ideal, int n, int max_parts) {
    CocharTable table;
    table.n = n;
    for (const Partition& lambda : partitions_of(n, max_parts)) {
        MultiDegree k = lambda.as_multidegree();
        auto span = ideal.basis(k);
        Integer kappa = static_cast<unsigned long>(span->quotient_dim());
        for (const auto& [mu, kappa_mu] : table.entries)
            kappa -= Integer(static_cast<unsigned long>(kappa_mu)) *
                     Integer(static_cast<unsigned long>(kostka(mu, k)));
        if (kappa < 0)
            throw NegativeMultiplicity("multiplicity of " + lambda.to_string() + " computed as " + kappa.get_str());
        table.entries.emplace_back(lambda, kappa.get_ui());
    }
    return table;
}

std::uint64_t pn_dim(const IdealPresentation& ideal, int n) {
    return ideal.basis(MultiDegree::ones(n))->quotient_dim();
}

std::map<MultiDegree, std::uint64_t> hilbert_dims(const IdealPresentation& ideal, int m, int total_degree_cap) {
    std::map<MultiDegree, std::uint64_t> out;
    std::vector<int> k(m, 0);
    auto rec = [&](auto&& self, int i, int budget) -> void {
        if (i == m) {
            MultiDegree md(k);
            if (md.total() >= 1)
                out.emplace(md, ideal.basis(md)->quotient_dim());
            return;
        }
        for (int d = 0; d <= budget; ++d) {
            k[i] = d;
            self(self, i + 1, budget - d);
        }
        k[i] = 0;
    };
    rec(rec, 0, total_degree_cap);
    return out;
}

bool highest_weight_check(const IdealPresentation& ideal, const Polynomial& f) {
    auto k = f.multidegree();
    if (!k)
        throw NotMultihomogeneous();
    const auto& d = k->degrees();
    if (!std::is_sorted(d.begin(), d.end(), std::greater<>()))
        throw Error("highest weight check needs a partition multidegree, got " + k->to_string());
    if (ideal.basis(*k)->contains(f))
        return false;
    const int r = k->size();
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) {
            Polynomial raised = polarization(f, j, i);
            if (!raised.is_zero() && !contains(ideal, raised))
                return false;
        }
    return true;
}

int independent_modulo(const IdealPresentation& ideal, const std::vector<Polynomial>& fs) {
    if (fs.empty())
        return 0;
    std::optional<MultiDegree> k;
    for (const auto& f : fs) {
        auto fk = f.multidegree();
        if (!fk)
            continue;
        if (k && !(*k == *fk))
            throw Error("independent_modulo needs polynomials of one multidegree");
        k = fk;
    }
    if (!k)
        return 0;
    auto span = ideal.basis(*k);
    // Rebuild an echelon from the span rows plus fs.
    RowEchelon echelon(static_cast<int>(span->ambient_dim()));
    auto to_int = [](const RatRow& row) {
        Integer common = 1;
        for (const auto& e : row)
            common = lcm(common, Integer(e.value.get_den()));
        IntRow out;
        for (const auto& e : row) {
            Rational scaled = e.value * Rational(common);
            out.push_back({e.col, Integer(scaled.get_num())});
        }
        return out;
    };
    for (const auto& row : span->rows())
        echelon.insert(to_int(row));
    const int base = echelon.rank();
    for (const auto& f : fs) {
        RatRow coords = span->coordinates(f);
        std::sort(coords.begin(), coords.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
        echelon.insert(to_int(coords));
    }
    return echelon.rank() - base;
}

} // namespace pivar
