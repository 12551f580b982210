#include "qtorus/modp.hpp"

#include <algorithm>

#include "qtorus/error.hpp"

namespace qtorus {

namespace {

__extension__ typedef unsigned __int128 u128;

constexpr u64 kMersenne61 = (u64{1} << 61) - 1;

u64 splitmix(std::uint64_t& s) {
    u64 z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

u64 reduce_mpz(const mpz_class& z, u64 p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return r.get_ui();
}

std::vector<u64> prime_factors(u64 m) {
    std::vector<u64> out;
    for (u64 f = 2; f * f <= m; ++f)
        if (m % f == 0) {
            out.push_back(f);
            while (m % f == 0) m /= f;
        }
    if (m > 1) out.push_back(m);
    return out;
}

}  // namespace

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 addmod(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    return s >= p ? s - p : s;
}
u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) {
    if (a % p == 0) throw UnluckySpecialization{};
    return powmod(a, p - 2, p);
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 s : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % s == 0) return n == s;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) d >>= 1, ++r;
    // Deterministic for 64-bit inputs.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Specialization::Specialization(const FieldMode& mode, std::uint64_t seed) : mode_(mode), state_(seed) {
    if (!mode.is_root()) {
        p_ = kMersenne61;
        for (int k = 0; k < mode.r; ++k) q_.push_back(2 + splitmix(state_) % (p_ - 3));
        return;
    }
    const u64 m = static_cast<u64>(mode.m);
    u64 cand = (kMersenne61 / m) * m + 1;
    while (cand > kMersenne61) cand -= m;
    while (!is_prime(cand)) cand -= m;
    p_ = cand;
    const auto factors = prime_factors(m);
    for (;;) {
        u64 g = 2 + splitmix(state_) % (p_ - 3);
        u64 w = powmod(g, (p_ - 1) / m, p_);
        bool exact = w != 1 || m == 1;
        for (u64 l : factors)
            if (powmod(w, m / l, p_) == 1) exact = false;
        if (exact) {
            q_.push_back(w);
            break;
        }
    }
}

u64 Specialization::random_unit() { return 1 + splitmix(state_) % (p_ - 1); }

u64 Specialization::rational(const Rational& c) const {
    u64 num = reduce_mpz(c.get_num(), p_), den = reduce_mpz(c.get_den(), p_);
    return mulmod(num, invmod(den, p_), p_);
}

u64 Specialization::q_power(const std::vector<std::int64_t>& e) const {
    u64 r = 1;
    for (std::size_t k = 0; k < e.size() && k < q_.size(); ++k) {
        if (e[k] == 0) continue;
        u64 base = e[k] > 0 ? q_[k] : invmod(q_[k], p_);
        r = mulmod(r, powmod(base, static_cast<u64>(e[k] > 0 ? e[k] : -e[k]), p_), p_);
    }
    return r;
}

u64 Specialization::eval_poly(const QPoly& f) const {
    u64 acc = 0;
    for (const auto& [e, c] : f.terms()) {
        std::vector<std::int64_t> ex(e.begin(), e.end());
        acc = addmod(acc, mulmod(rational(c), q_power(ex), p_), p_);
    }
    return acc;
}

u64 Specialization::operator()(const Scalar& s) const {
    if (s.is_rational()) return rational(s.rational());
    if (const RatFunc* f = s.ratfunc()) {
        if (mode_.is_root()) throw Error(ErrorKind::WrongMode, "rational function in root-of-unity mode");
        u64 den = eval_poly(f->den());
        return mulmod(eval_poly(f->num()), invmod(den, p_), p_);
    }
    if (!mode_.is_root()) throw Error(ErrorKind::WrongMode, "cyclotomic scalar in generic mode");
    const auto& cs = s.cyclo()->coeffs();
    u64 acc = 0, w = 1;
    for (const auto& c : cs) {
        if (c != 0) acc = addmod(acc, mulmod(rational(c), w, p_), p_);
        w = mulmod(w, q_[0], p_);
    }
    return acc;
}

ModPoly modpoly_trim(ModPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

ModPoly modpoly_gcd(ModPoly a, ModPoly b, u64 p) {
    a = modpoly_trim(std::move(a));
    b = modpoly_trim(std::move(b));
    while (!b.empty()) {
        // a <- a mod b
        const u64 inv = invmod(b.back(), p);
        while (a.size() >= b.size()) {
            const u64 c = mulmod(a.back(), inv, p);
            const std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = submod(a[shift + i], mulmod(c, b[i], p), p);
            a = modpoly_trim(std::move(a));
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        const u64 inv = invmod(a.back(), p);
        for (auto& x : a) x = mulmod(x, inv, p);
    }
    return a;
}

bool SparseEchelon::insert(Row v) {
    while (!v.empty()) {
        auto lead = v.begin();
        auto it = pivots_.find(lead->first);
        if (it == pivots_.end()) {
            const u64 inv = invmod(lead->second, p_);
            for (auto& [k, c] : v) c = mulmod(c, inv, p_);
            pivots_.emplace(lead->first, std::move(v));
            return true;
        }
        const u64 c = lead->second;
        for (const auto& [k, x] : it->second) {
            auto [slot, inserted] = v.emplace(k, 0);
            slot->second = submod(slot->second, mulmod(c, x, p_), p_);
            if (slot->second == 0) v.erase(slot);
        }
    }
    return false;
}

std::size_t modp_rank(std::vector<std::vector<u64>> m, u64 p) {
    std::size_t rank = 0;
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        const u64 inv = invmod(m[rank][c], p);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            if (m[r][c] == 0) continue;
            const u64 f = mulmod(m[r][c], inv, p);
            for (std::size_t k = c; k < cols; ++k) m[r][k] = submod(m[r][k], mulmod(f, m[rank][k], p), p);
        }
        ++rank;
    }
    return rank;
}

}  // namespace qtorus
