#include "qtorus/element_io.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include "qtorus/error.hpp"

namespace qtorus {

namespace {

std::string parameter_name(const Field& field, std::size_t k) {
    if (field.mode().is_root()) return "z";
    if (field.mode().r == 1) return "q";
    return "q" + std::to_string(k + 1);
}

std::string rational_text(const Rational& c) { return c.get_str(); }

struct LaurentTerm {
    std::vector<std::int64_t> e;
    Rational c;
};

// Monomial part of a scalar term, or "" for the constant monomial.
std::string scalar_monomial(const std::vector<std::int64_t>& e, const Field& field) {
    std::string s;
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (!s.empty()) s += "*";
        s += parameter_name(field, k);
        if (e[k] != 1) s += "^" + std::to_string(e[k]);
    }
    return s;
}

std::string laurent_text(const std::vector<LaurentTerm>& terms, const Field& field) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms) {
        Rational c = t.c;
        bool neg = c < 0;
        if (neg) c = -c;
        std::string mono = scalar_monomial(t.e, field);
        std::string body;
        if (mono.empty()) body = rational_text(c);
        else if (c == 1) body = mono;
        else body = rational_text(c) + "*" + mono;
        if (first) out += neg ? "-" + body : body;
        else out += (neg ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

std::vector<LaurentTerm> poly_terms(const QPoly& p, const Monomial& shift, const Rational& scale) {
    std::vector<LaurentTerm> out;
    for (const auto& [e, c] : p.terms()) {
        LaurentTerm t;
        for (std::size_t i = 0; i < e.size(); ++i) t.e.push_back(static_cast<std::int64_t>(e[i]) - shift[i]);
        t.c = c * scale;
        out.push_back(std::move(t));
    }
    return out;
}

// Text for a scalar and whether it is a single signed factor (no parentheses
// needed as a coefficient).
std::pair<std::string, bool> scalar_text(const Scalar& s, const Field& field) {
    if (s.is_rational()) return {rational_text(s.rational()), true};
    if (const RatFunc* f = s.ratfunc()) {
        if (f->den().is_monomial()) {
            const auto& [de, dc] = *f->den().terms().begin();
            auto terms = poly_terms(f->num(), de, Rational(1) / dc);
            return {laurent_text(terms, field), terms.size() == 1};
        }
        Monomial zero(f->nvars(), 0);
        std::string num = laurent_text(poly_terms(f->num(), zero, 1), field);
        std::string den = laurent_text(poly_terms(f->den(), zero, 1), field);
        return {"(" + num + ")/(" + den + ")", false};
    }
    const CycloNum& z = *s.cyclo();
    std::vector<LaurentTerm> terms;
    for (std::size_t i = z.coeffs().size(); i-- > 0;)
        if (z.coeffs()[i] != 0) terms.push_back({{static_cast<std::int64_t>(i)}, z.coeffs()[i]});
    return {laurent_text(terms, field), terms.size() == 1};
}

std::string generator_name(const Algebra& alg, std::size_t j) {
    if (alg.last_is_t() && j + 1 == static_cast<std::size_t>(alg.n())) return "t";
    return "x" + std::to_string(j + 1);
}

}  // namespace

std::string format_scalar(const Scalar& s, const Field& field) { return scalar_text(s, field).first; }

std::string format_element(const Element& e) {
    if (e.is_zero()) return "0";
    const Algebra& alg = *e.context();
    std::vector<std::pair<Exponent, Scalar>> terms(e.terms().begin(), e.terms().end());
    // Last coordinate most significant, descending.
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(b.first.rbegin(), b.first.rend(), a.first.rbegin(), a.first.rend());
    });
    std::string out;
    bool first = true;
    for (const auto& [a, c] : terms) {
        std::string mono;
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (a[j] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += generator_name(alg, j);
            if (a[j] != 1) mono += "^" + std::to_string(a[j]);
        }
        auto [ctext, atomic] = scalar_text(c, alg.field());
        bool neg = false;
        if (atomic && ctext[0] == '-') {
            neg = true;
            ctext.erase(0, 1);
        }
        std::string body;
        if (mono.empty()) body = atomic ? ctext : "(" + ctext + ")";
        else if (atomic && ctext == "1") body = mono;
        else body = (atomic ? ctext : "(" + ctext + ")") + "*" + mono;
        if (first) out += neg ? "-" + body : body;
        else out += (neg ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

namespace {

class Parser {
public:
    Parser(const std::string& text, AlgebraPtr ctx) : s_(text), ctx_(std::move(ctx)) {}

    Element parse() {
        Element e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        std::ostringstream os;
        os << msg << " at position " << pos_ << " in \"" << s_ << "\"";
        throw Error(ErrorKind::Parse, os.str());
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Element expr() {
        Element acc(ctx_);
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        Element t = term();
        acc = neg ? -t : t;
        for (;;) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else break;
        }
        return acc;
    }

    bool starts_primary() {
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
    }

    Element term() {
        Element acc = power();
        for (;;) {
            if (accept('*')) acc *= power();
            else if (accept('/')) acc *= invert(power());
            else if (starts_primary()) acc *= power();
            else break;
        }
        return acc;
    }

    Element invert(const Element& e) {
        if (!is_unit(e)) fail("division by a non-unit");
        return e.unit_inverse();
    }

    std::int64_t integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        if (pos_ - start > 9) fail("exponent too large");
        return std::stoll(s_.substr(start, pos_ - start));
    }

    Element power() {
        Element base = primary();
        if (!accept('^')) return base;
        bool neg = false;
        bool paren = accept('(');
        if (accept('-')) neg = true;
        else accept('+');
        std::int64_t k = integer();
        if (paren && !accept(')')) fail("expected ')'");
        if (neg) base = invert(base);
        Element r = Element::scalar(ctx_, Scalar(1));
        Element b = base;
        while (k > 0) {
            if (k & 1) r *= b;
            k >>= 1;
            if (k) b *= b;
        }
        return r;
    }

    Element primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Element e = expr();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            Rational v(mpz_class(s_.substr(start, pos_ - start)));
            return Element::scalar(ctx_, Scalar(v));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return name(s_.substr(start, pos_ - start), start);
        }
        fail("expected a number, name or '('");
    }

    Element name(const std::string& id, std::size_t at) {
        const Algebra& alg = *ctx_;
        const int n = alg.n();
        const FieldMode& mode = alg.field().mode();
        if (id == "t") return Element::generator(ctx_, n - 1);
        auto index = [&](const std::string& prefix) -> std::optional<int> {
            if (id.size() <= prefix.size() || id.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
            std::string digits = id.substr(prefix.size());
            if (digits.size() > 6 || !std::all_of(digits.begin(), digits.end(), ::isdigit)) return std::nullopt;
            return std::stoi(digits);
        };
        if (auto j = index("x"); j && *j >= 1 && *j <= n) return Element::generator(ctx_, *j - 1);
        if (mode.is_root()) {
            if (id == "z") return Element::scalar(ctx_, alg.field().zeta());
        } else {
            if (id == "q" && mode.r == 1) return Element::scalar(ctx_, alg.field().parameter(0));
            if (auto k = index("q"); k && *k >= 1 && *k <= mode.r)
                return Element::scalar(ctx_, alg.field().parameter(*k - 1));
        }
        pos_ = at;
        fail("unknown name '" + id + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    AlgebraPtr ctx_;
};

}  // namespace

Element parse_element(const std::string& text, const AlgebraPtr& ctx) { return Parser(text, ctx).parse(); }

Scalar parse_scalar(const std::string& text, const Field& field) {
    const FieldMode& mode = field.mode();
    ExponentSystem sys{1, mode, std::vector<IntMatrix>(static_cast<std::size_t>(mode.is_root() ? 1 : mode.r), IntMatrix(1, 1))};
    auto ctx = Algebra::make(sys);
    Element e = parse_element(text, ctx);
    if (e.is_zero()) return Scalar();
    if (e.size() != 1 || e.terms().begin()->first != Exponent{0})
        throw Error(ErrorKind::Parse, "expected a scalar: \"" + text + "\"");
    return e.terms().begin()->second;
}

}  // namespace qtorus
