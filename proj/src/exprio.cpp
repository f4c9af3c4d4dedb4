#include "pivar/exprio.hpp"

#include "pivar/errors.hpp"
#include "pivar/freealg.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pivar {

namespace {

class Parser {
public:
    Parser(std::string_view src, std::size_t line_offset = 0) : src_(src), line_offset_(line_offset) {}

    Polynomial parse_all() {
        Polynomial f = expr();
        skip();
        if (pos_ < src_.size())
            fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        return f;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_offset_;

    [[noreturn]] void fail(const std::string& what, std::size_t at, bool arity_error = false) const {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < at && i < src_.size(); ++i) {
            if (src_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        if (arity_error)
            throw ArityError(what, line + line_offset_, col);
        throw SyntaxError(what, line + line_offset_, col);
    }
    [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
    [[noreturn]] void arity(const std::string& what, std::size_t at) const { fail(what, at, true); }

    void skip() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }
    char peek() {
        skip();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }
    bool digit_at(std::size_t i) const {
        return i < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i]));
    }
    bool starts_with(std::string_view s) const { return src_.substr(pos_, s.size()) == s; }

    std::string digits() {
        std::size_t start = pos_;
        while (digit_at(pos_))
            ++pos_;
        return std::string(src_.substr(start, pos_ - start));
    }

    int small_uint() {
        skip();
        const std::size_t at = pos_;
        std::string d = digits();
        if (d.empty())
            fail("expected an integer");
        if (d.size() > 3)
            fail("integer too large", at);
        return std::stoi(d);
    }

    bool factor_ahead() {
        switch (peek()) {
        case 'x': case 'y': case 'z': case 't': case 'u': case 'v':
        case '(': case '[': case 'S': case 'h': case 'd':
            return true;
        default:
            return false;
        }
    }

    Polynomial expr() {
        Polynomial f;
        bool negative = false;
        if (accept('-'))
            negative = true;
        else
            accept('+');
        while (true) {
            Polynomial t = term();
            if (negative)
                f -= t;
            else
                f += t;
            if (accept('+'))
                negative = false;
            else if (accept('-'))
                negative = true;
            else
                return f;
        }
    }

    Polynomial term() {
        Rational coef = 1;
        bool has_coef = false;
        skip();
        const std::size_t start = pos_;
        if (digit_at(pos_)) {
            Integer num(digits());
            Integer den = 1;
            if (accept('/')) {
                skip();
                const std::string d = digits();
                if (d.empty())
                    fail("expected a denominator");
                den = Integer(d);
                if (den == 0)
                    fail("zero denominator", start);
            }
            coef = make_rational(num, den);
            has_coef = true;
            if (accept('*') && !factor_ahead())
                fail("expected a factor");
        }
        if (!factor_ahead()) {
            if (has_coef && coef == 0)
                return {};
            if (has_coef)
                fail("constant terms are not allowed: the algebra has no unit", start);
            fail(peek() ? "expected a term" : "unexpected end of input");
        }
        Polynomial f = factor();
        while (true) {
            if (accept('*')) {
                if (!factor_ahead())
                    fail("expected a factor");
            } else if (!factor_ahead()) {
                break;
            }
            f = f * factor();
        }
        return f * coef;
    }

    Polynomial factor() {
        Polynomial f = atom();
        while (accept('^')) {
            const std::size_t at = pos_;
            int e = small_uint();
            if (e < 1)
                fail("exponent must be at least 1: the algebra has no unit", at);
            f = pow(f, e);
        }
        return f;
    }

    std::vector<Polynomial> arguments(char close) {
        std::vector<Polynomial> args{expr()};
        while (accept(','))
            args.push_back(expr());
        expect(close);
        return args;
    }

    // A separator slot of d3; "1" gets a dedicated message.
    Polynomial slot() {
        skip();
        if (starts_with("1")) {
            std::size_t i = pos_ + 1;
            while (i < src_.size() && std::isspace(static_cast<unsigned char>(src_[i])))
                ++i;
            if (i < src_.size() && (src_[i] == ')' || src_[i] == ','))
                fail("'1' is not a word of the non-unitary algebra; use d3tail(a,b,c; w) for an empty last slot");
        }
        return expr();
    }

    Polynomial atom() {
        skip();
        const std::size_t at = pos_;
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial f = expr();
            expect(')');
            return f;
        }
        if (c == '[') {
            ++pos_;
            auto args = arguments(']');
            if (args.size() < 2)
                fail("a commutator needs at least two entries", at);
            return commutator(args);
        }
        if (c == 'x') {
            ++pos_;
            if (!digit_at(pos_))
                return Polynomial::variable(1);
            std::string d = digits();
            if (d.size() > 3 || std::stoi(d) < 1 || std::stoi(d) > 255)
                fail("variable index out of range", at);
            return Polynomial::variable(std::stoi(d));
        }
        static const std::string_view letters = "xyztuv";
        if (auto i = letters.find(c); i != std::string_view::npos) {
            ++pos_;
            return Polynomial::variable(static_cast<int>(i) + 1);
        }
        if (c == 'S' || c == 'h') {
            ++pos_;
            if (!digit_at(pos_))
                fail(std::string("expected the arity after '") + c + "'");
            const int n = small_uint();
            if (n < 1)
                arity("arity must be positive", at);
            expect('(');
            auto args = arguments(')');
            if (static_cast<int>(args.size()) != n)
                arity(std::string(1, c) + std::to_string(n) + " takes " + std::to_string(n) + " arguments, got " +
                          std::to_string(args.size()),
                      at);
            return c == 'S' ? standard_polynomial(args) : symmetric_polynomial(args);
        }
        if (starts_with("d3tail")) {
            pos_ += 6;
            expect('(');
            std::vector<Polynomial> alt{expr()};
            while (accept(','))
                alt.push_back(expr());
            std::vector<Polynomial> sep;
            if (accept(';')) {
                sep.push_back(slot());
                while (accept(','))
                    sep.push_back(slot());
            }
            expect(')');
            if (alt.size() != 3 || sep.size() != 1)
                arity("d3tail takes three alternating arguments and one separator", at);
            return capelli_d3_with_tail(alt, sep[0]);
        }
        if (starts_with("d3")) {
            pos_ += 2;
            expect('(');
            std::vector<Polynomial> alt{expr()};
            while (accept(','))
                alt.push_back(expr());
            std::vector<Polynomial> sep;
            if (accept(';')) {
                sep.push_back(slot());
                while (accept(','))
                    sep.push_back(slot());
            }
            expect(')');
            if (alt.size() != 3 || sep.size() != 2)
                arity("d3 takes three alternating arguments and two separators", at);
            return capelli_d3(alt, sep[0], sep[1]);
        }
        fail("unknown symbol '" + std::string(1, c) + "'");
    }
};

std::string monomial(const Word& w) {
    std::string out;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i])
            ++j;
        if (!out.empty())
            out += '*';
        out += variable_name(w[i]);
        if (j - i > 1)
            out += '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

nlohmann::json json_integer(const Integer& z) {
    if (z.fits_slong_p())
        return z.get_si();
    return z.get_str();
}

} // namespace

Polynomial parse(std::string_view src) { return Parser(src).parse_all(); }

std::vector<Polynomial> parse_ideal(std::string_view text) {
    std::vector<Polynomial> out;
    std::size_t line = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view content = text.substr(start, end - start);
        if (auto hash = content.find('#'); hash != std::string_view::npos)
            content = content.substr(0, hash);
        if (content.find_first_not_of(" \t\r") != std::string_view::npos)
            out.push_back(Parser(content, line).parse_all());
        ++line;
        start = end + 1;
    }
    return out;
}

std::string variable_name(int index) {
    static const char* names[] = {"x", "y", "z", "t", "u", "v"};
    if (index >= 1 && index <= 6)
        return names[index - 1];
    return "x" + std::to_string(index);
}

std::string print(const Polynomial& f) {
    if (f.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : f.terms()) {
        Rational a = c;
        if (a < 0) {
            out += first ? "-" : " - ";
            a = -a;
        } else if (!first) {
            out += " + ";
        }
        if (a != 1)
            out += a.get_str() + "*";
        out += monomial(w);
        first = false;
    }
    return out;
}

Assignment parse_assignment(const Algebra& a, std::string_view spec) {
    std::vector<int> labels(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        labels[i] = i;
    // Longest label first so "x^2" wins over "x".
    std::sort(labels.begin(), labels.end(),
              [&](int l, int r) { return a.basis()[l].size() > a.basis()[r].size(); });

    Assignment out;
    std::string text(spec);
    std::erase_if(text, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) { throw SyntaxError(what, 1, pos + 1); };
    while (pos < text.size()) {
        std::size_t eq = text.find('=', pos);
        if (eq == std::string::npos)
            fail("expected 'variable=value'");
        Polynomial var = parse(std::string_view(text).substr(pos, eq - pos));
        if (var.size() != 1 || var.terms().begin()->first.size() != 1 || var.terms().begin()->second != 1)
            fail("left side of an assignment must be a variable");
        const int index = var.terms().begin()->first[0];
        pos = eq + 1;
        Element value = a.zero();
        bool any = false;
        while (pos < text.size() && text[pos] != ',') {
            Rational sign = 1;
            if (text[pos] == '+' || text[pos] == '-') {
                sign = text[pos] == '-' ? -1 : 1;
                ++pos;
            } else if (any) {
                fail("expected '+' or '-'");
            }
            Rational coef = 1;
            const std::size_t term_start = pos;
            std::size_t digits_end = pos;
            while (digits_end < text.size() && (std::isdigit(static_cast<unsigned char>(text[digits_end])) ||
                                                text[digits_end] == '/'))
                ++digits_end;
            if (digits_end > pos) {
                coef = Rational(text.substr(pos, digits_end - pos));
                coef.canonicalize();
                pos = digits_end;
                if (pos < text.size() && text[pos] == '*')
                    ++pos;
            }
            int matched = -1;
            for (int l : labels)
                if (text.compare(pos, a.basis()[l].size(), a.basis()[l]) == 0) {
                    matched = l;
                    break;
                }
            if (matched < 0) {
                if (pos == term_start || coef != 0)
                    fail("unknown basis element of " + a.name());
            } else {
                value[matched] += sign * coef;
                pos += a.basis()[matched].size();
            }
            any = true;
        }
        if (!any)
            fail("missing value");
        out[index] = value;
        if (pos < text.size())
            ++pos;
    }
    return out;
}

std::string format_assignment(const Algebra& a, const Assignment& values) {
    std::string out;
    for (const auto& [var, value] : values) {
        if (!out.empty())
            out += ", ";
        out += variable_name(var) + "=" + a.format(value);
    }
    return out;
}

std::string emit_dot(const ImplicationGraph& g) {
    std::ostringstream out;
    out << "digraph \"" << escape(g.name.empty() ? "G" : g.name) << "\" {\n";
    if (!g.nodes.empty())
        out << "  rankdir=LR;\n  node [shape=box, fontname=\"monospace\"];\n";
    std::vector<int> degrees;
    for (const auto& n : g.nodes)
        degrees.push_back(n.degree);
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    for (int d : degrees) {
        out << "  subgraph cluster_n" << d << " {\n    label=\"n = " << d << "\";\n";
        for (std::size_t i = 0; i < g.nodes.size(); ++i) {
            const auto& n = g.nodes[i];
            if (n.degree != d)
                continue;
            std::string label = n.name + "\\n" + escape(print(n.generator));
            if (!n.module.empty())
                label += "\\n" + escape(n.module);
            out << "    v" << i << " [label=\"" << label << "\"];\n";
        }
        out << "  }\n";
    }
    for (const auto& e : g.edges)
        out << "  v" << e.from << " -> v" << e.to << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_json(const SpanBasis& s) {
    using json = nlohmann::json;
    json rows = json::array();
    for (const auto& row : s.rows()) {
        json r = json::array();
        for (const auto& e : row)
            r.push_back({monomial(s.monomials()[e.col]), json_integer(e.value.get_num()), json_integer(e.value.get_den())});
        rows.push_back(r);
    }
    return json{{"multidegree", s.multidegree().degrees()},
                {"ambient_dim", s.ambient_dim()},
                {"rank", s.rank()},
                {"rows", rows}}
        .dump();
}

std::string to_json(const CocharTable& t) {
    using json = nlohmann::json;
    json entries = json::array();
    for (const auto& [p, m] : t.entries)
        entries.push_back({p.parts(), m});
    return json{{"n", t.n}, {"entries", entries}}.dump();
}

} // namespace pivar
