#include "qtorus/algebra.hpp"

#include "qtorus/error.hpp"

namespace qtorus {

Algebra::Algebra(ExponentSystem sys, bool last_is_t)
    : sys_((validate(sys), std::move(sys))), field_(sys_.mode), last_is_t_(last_is_t) {
    center_ = center_lattice(sys_);
}

IntVec Algebra::cocycle_exponent(const Exponent& a, const Exponent& b) const {
    const auto n = static_cast<std::size_t>(sys_.n);
    if (a.size() != n || b.size() != n) throw Error(ErrorKind::DimensionMismatch, "exponent has wrong length");
    IntVec out(sys_.E.size(), 0);
    for (std::size_t k = 0; k < sys_.E.size(); ++k) {
        const IntMatrix& E = sys_.E[k];
        std::int64_t s = 0;
        for (std::size_t i = 1; i < n; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < i; ++j)
                if (b[j] != 0 && E(i, j) != 0) s = checked_add(s, checked_mul(checked_mul(E(i, j), a[i]), b[j]));
        }
        out[k] = s;
    }
    return out;
}

Scalar Algebra::cocycle(const Exponent& a, const Exponent& b) const { return q_power(cocycle_exponent(a, b)); }

Scalar Algebra::commutation_scalar(const Exponent& a, const Exponent& b) const { return q_power(pairing(a, b)); }

Element Element::scalar(AlgebraPtr ctx, const Scalar& c) {
    const auto n = static_cast<std::size_t>(ctx->n());
    return monomial(std::move(ctx), Exponent(n, 0), c);
}

Element Element::monomial(AlgebraPtr ctx, const Exponent& a, const Scalar& c) {
    if (a.size() != static_cast<std::size_t>(ctx->n()))
        throw Error(ErrorKind::DimensionMismatch, "exponent has wrong length");
    Element e(std::move(ctx));
    e.add_term(a, c);
    return e;
}

Element Element::generator(AlgebraPtr ctx, int j, std::int64_t power) {
    Exponent a(static_cast<std::size_t>(ctx->n()), 0);
    a.at(static_cast<std::size_t>(j)) = power;
    return monomial(std::move(ctx), a);
}

std::vector<Exponent> Element::support() const {
    std::vector<Exponent> s;
    s.reserve(terms_.size());
    for (const auto& [a, c] : terms_) s.push_back(a);
    return s;
}

Scalar Element::coeff(const Exponent& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? Scalar() : it->second;
}

void Element::add_term(const Exponent& a, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(a, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Element::check(const Element& o) const {
    if (ctx_ && o.ctx_ && ctx_ != o.ctx_) throw Error(ErrorKind::ContextMismatch, "elements of different algebras");
}

Element Element::operator-() const {
    Element r(ctx_);
    for (const auto& [a, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), a, -c);
    return r;
}

Element& Element::operator+=(const Element& o) {
    check(o);
    if (!ctx_) ctx_ = o.ctx_;
    for (const auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    check(o);
    if (!ctx_) ctx_ = o.ctx_;
    for (const auto& [a, c] : o.terms_) add_term(a, -c);
    return *this;
}

Element operator*(const Element& x, const Element& y) {
    x.check(y);
    const AlgebraPtr& ctx = x.ctx_ ? x.ctx_ : y.ctx_;
    Element r(ctx);
    if (x.is_zero() || y.is_zero()) return r;
    const std::size_t n = static_cast<std::size_t>(ctx->n());
    Exponent s(n);
    for (const auto& [a, ca] : x.terms_)
        for (const auto& [b, cb] : y.terms_) {
            for (std::size_t i = 0; i < n; ++i) s[i] = checked_add(a[i], b[i]);
            IntVec e = ctx->cocycle_exponent(a, b);
            Scalar c = ca * cb;
            if (!ctx->field().is_trivial_power(e)) c *= ctx->q_power(e);
            r.add_term(s, c);
        }
    return r;
}

Element Element::scaled(const Scalar& c) const {
    Element r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [a, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), a, v * c);
    return r;
}

Element Element::unit_inverse() const {
    if (!is_unit(*this)) throw Error(ErrorKind::DivisionByZero, "element is not a unit");
    const auto& [a, c] = *terms_.begin();
    Exponent neg = a;
    for (auto& x : neg) x = -x;
    // x^a x^{-a} = lambda(a, -a), so (c x^a)^{-1} = (c lambda(a, -a))^{-1} x^{-a}.
    Scalar k = c * ctx_->cocycle(a, neg);
    return monomial(ctx_, neg, k.inverse());
}

bool is_central(const Element& a) {
    if (a.is_zero()) return true;
    const auto& center = a.context()->center();
    for (const auto& [e, c] : a.terms())
        if (!in_integer_span(center.basis, e)) return false;
    return true;
}

bool is_unit(const Element& a) { return a.size() == 1; }

bool in_subalgebra(const Element& a, const Sublattice& B) {
    for (const auto& [e, c] : a.terms())
        if (!in_integer_span(B.basis, e)) return false;
    return true;
}

}  // namespace qtorus
