#include "qtorus/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "qtorus/error.hpp"

namespace qtorus {

namespace {

using ZPoly = std::vector<mpz_class>;
using QDense = std::vector<mpq_class>;

void trim(QDense& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact quotient of monic integer polynomials.
ZPoly divide_exact(ZPoly a, const ZPoly& b) {
    const std::size_t db = b.size() - 1;
    ZPoly q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        mpz_class c = a[i];
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    return q;
}

ZPoly cyclotomic_poly(int m) {
    ZPoly p(static_cast<std::size_t>(m) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(m)] = 1;
    for (int d = 1; d < m; ++d)
        if (m % d == 0) p = divide_exact(p, cyclotomic_poly(d));
    return p;
}

// (q, r) with a = q b + r over Q.
std::pair<QDense, QDense> divmod(QDense a, const QDense& b) {
    trim(a);
    if (a.size() < b.size()) return {QDense{}, a};
    QDense q(a.size() - b.size() + 1, 0);
    const std::size_t db = b.size() - 1;
    const mpq_class lb = b.back();
    for (std::size_t k = a.size(); k-- > db;) {
        mpq_class c = a[k] / lb;
        q[k - db] = c;
        if (c != 0)
            for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
    }
    trim(a);
    trim(q);
    return {q, a};
}

QDense mul(const QDense& a, const QDense& b) {
    if (a.empty() || b.empty()) return {};
    QDense r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

QDense sub(QDense a, const QDense& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

}  // namespace

CyclotomicField::CyclotomicField(int m) : m_(m) {
    if (m < 2) throw Error(ErrorKind::WrongMode, "root of unity order must be at least 2");
    phi_ = cyclotomic_poly(m);
    const std::size_t deg = phi_.size() - 1;
    powers_.assign(static_cast<std::size_t>(m), std::vector<mpq_class>(deg, 0));
    // zeta^k for k < m by repeated multiplication by zeta.
    std::vector<mpq_class> cur(deg, 0);
    cur[0] = 1;
    for (int k = 0; k < m; ++k) {
        powers_[static_cast<std::size_t>(k)] = cur;
        std::vector<mpq_class> next(deg, 0);
        mpq_class top = cur[deg - 1];
        for (std::size_t i = deg - 1; i > 0; --i) next[i] = cur[i - 1];
        next[0] = 0;
        for (std::size_t i = 0; i < deg; ++i) next[i] -= top * mpq_class(phi_[i]);
        cur = std::move(next);
    }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(int m) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const CyclotomicField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[m];
    if (!slot) slot = std::make_shared<const CyclotomicField>(m);
    return slot;
}

CycloNum::CycloNum(std::shared_ptr<const CyclotomicField> field, std::vector<mpq_class> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    const auto deg = static_cast<std::size_t>(field_->degree());
    if (c_.size() > deg) {
        // Reduce modulo Phi_m.
        const auto& phi = field_->modulus();
        for (std::size_t i = c_.size(); i-- > deg;) {
            mpq_class top = c_[i];
            if (top == 0) continue;
            for (std::size_t j = 0; j <= deg; ++j) c_[i - deg + j] -= top * mpq_class(phi[j]);
        }
    }
    c_.resize(deg, 0);
}

CycloNum CycloNum::zeta_power(std::shared_ptr<const CyclotomicField> field, std::int64_t k) {
    std::int64_t m = field->order();
    k %= m;
    if (k < 0) k += m;
    auto coeffs = field->power(static_cast<int>(k));
    return CycloNum(std::move(field), std::move(coeffs));
}

CycloNum CycloNum::constant(std::shared_ptr<const CyclotomicField> field, const mpq_class& c) {
    std::vector<mpq_class> coeffs(static_cast<std::size_t>(field->degree()), 0);
    coeffs[0] = c;
    return CycloNum(std::move(field), std::move(coeffs));
}

bool CycloNum::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

bool CycloNum::is_constant() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

void CycloNum::check(const CycloNum& o) const {
    if (!field_ || !o.field_ || field_->order() != o.field_->order())
        throw Error(ErrorKind::ContextMismatch, "cyclotomic elements of different orders");
}

CycloNum CycloNum::operator-() const {
    CycloNum r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

CycloNum operator+(const CycloNum& a, const CycloNum& b) {
    a.check(b);
    CycloNum r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
}

CycloNum operator-(const CycloNum& a, const CycloNum& b) {
    a.check(b);
    CycloNum r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
    return r;
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
    a.check(b);
    std::vector<mpq_class> prod(a.c_.size() * 2, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
    }
    return CycloNum(a.field_, std::move(prod));
}

CycloNum CycloNum::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in cyclotomic field");
    // Extended Euclid: track s with s*a == r (mod Phi).
    QDense phi;
    for (const auto& c : field_->modulus()) phi.emplace_back(c);
    QDense r0 = phi, r1 = c_;
    trim(r1);
    QDense s0, s1{1};
    while (r1.size() > 1) {
        auto [q, r] = divmod(r0, r1);
        QDense s = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r1 is a nonzero constant because Phi_m is irreducible.
    mpq_class inv = mpq_class(1) / r1[0];
    for (auto& c : s1) c *= inv;
    return CycloNum(field_, std::move(s1));
}

}  // namespace qtorus
