#include "qtorus/finite_module.hpp"

#include "qtorus/error.hpp"

namespace qtorus {

namespace {

// Incremental row echelon form over the ground field.
class Echelon {
public:
    /// Reduces v; returns true and keeps it when independent.
    bool insert(std::vector<Scalar> v) {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Scalar c = v[lead_[r]];
            if (c.is_zero()) continue;
            for (std::size_t i = lead_[r]; i < v.size(); ++i)
                if (!rows_[r][i].is_zero()) v[i] -= c * rows_[r][i];
        }
        std::size_t l = 0;
        while (l < v.size() && v[l].is_zero()) ++l;
        if (l == v.size()) return false;
        const Scalar inv = v[l].inverse();
        for (auto& x : v) x *= inv;
        // Keep earlier rows reduced at the new pivot so reduction order does not matter.
        for (auto& row : rows_) {
            const Scalar c = row[l];
            if (c.is_zero()) continue;
            for (std::size_t i = l; i < v.size(); ++i)
                if (!v[i].is_zero()) row[i] -= c * v[i];
        }
        rows_.push_back(std::move(v));
        lead_.push_back(l);
        return true;
    }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<std::vector<Scalar>>& rows() const { return rows_; }

private:
    std::vector<std::vector<Scalar>> rows_;
    std::vector<std::size_t> lead_;
};

std::vector<Scalar> flatten(const ScalarMatrix& m) {
    std::vector<Scalar> v;
    for (const auto& row : m) v.insert(v.end(), row.begin(), row.end());
    return v;
}

std::vector<Scalar> mat_vec(const ScalarMatrix& m, const std::vector<Scalar>& x) {
    std::vector<Scalar> y(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            if (!m[i][j].is_zero() && !x[j].is_zero()) y[i] += m[i][j] * x[j];
    return y;
}

}  // namespace

ScalarMatrix identity_matrix(std::size_t d) {
    ScalarMatrix m(d, std::vector<Scalar>(d));
    for (std::size_t i = 0; i < d; ++i) m[i][i] = Scalar(1);
    return m;
}

ScalarMatrix matmul(const ScalarMatrix& a, const ScalarMatrix& b) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    ScalarMatrix c(n, std::vector<Scalar>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (!b[l][j].is_zero()) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

ScalarMatrix matinv(const ScalarMatrix& a) {
    const std::size_t d = a.size();
    ScalarMatrix m = a, inv = identity_matrix(d);
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t piv = c;
        while (piv < d && m[piv][c].is_zero()) ++piv;
        if (piv == d) throw Error(ErrorKind::DivisionByZero, "singular matrix");
        std::swap(m[piv], m[c]);
        std::swap(inv[piv], inv[c]);
        const Scalar s = m[c][c].inverse();
        for (std::size_t j = 0; j < d; ++j) {
            m[c][j] *= s;
            inv[c][j] *= s;
        }
        for (std::size_t r = 0; r < d; ++r) {
            if (r == c || m[r][c].is_zero()) continue;
            const Scalar f = m[r][c];
            for (std::size_t j = 0; j < d; ++j) {
                m[r][j] -= f * m[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

std::string verify_relations(const FiniteDimModule& M) {
    const int n = M.ctx->n();
    if (static_cast<int>(M.X.size()) != n) return "expected one matrix per generator";
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            IntVec ei(static_cast<std::size_t>(n), 0), ej(static_cast<std::size_t>(n), 0);
            ei[static_cast<std::size_t>(i)] = 1;
            ej[static_cast<std::size_t>(j)] = 1;
            const Scalar qij = M.ctx->commutation_scalar(ei, ej);
            ScalarMatrix rhs = matmul(M.X[static_cast<std::size_t>(j)], M.X[static_cast<std::size_t>(i)]);
            for (auto& row : rhs)
                for (auto& x : row) x *= qij;
            if (matmul(M.X[static_cast<std::size_t>(i)], M.X[static_cast<std::size_t>(j)]) != rhs)
                return "X" + std::to_string(i + 1) + " X" + std::to_string(j + 1) + " != q_" + std::to_string(i + 1) +
                       std::to_string(j + 1) + " X" + std::to_string(j + 1) + " X" + std::to_string(i + 1);
        }
    return {};
}

FiniteDimModule clock_shift_module(const AlgebraPtr& ctx, const Scalar& scale) {
    const auto& sys = ctx->system();
    if (!sys.mode.is_root()) throw Error(ErrorKind::WrongMode, "clock and shift matrices need a root of unity");
    if (sys.mode.m < 2) throw Error(ErrorKind::WrongMode, "clock and shift matrices need order m >= 2");
    if (sys.n != 2 || sys.E[0](0, 1) != 1)
        throw Error(ErrorKind::DimensionMismatch, "clock and shift matrices need n = 2 and E_12 = 1");
    if (scale.is_zero()) throw Error(ErrorKind::DivisionByZero, "clock scale must be nonzero");
    const std::size_t m = static_cast<std::size_t>(sys.mode.m);
    FiniteDimModule M{ctx, m, {}};
    ScalarMatrix clock(m, std::vector<Scalar>(m)), shift(m, std::vector<Scalar>(m));
    const Scalar z = ctx->field().zeta();
    Scalar zi = scale;
    for (std::size_t i = 0; i < m; ++i) {
        clock[i][i] = zi;
        zi *= z;
        shift[(i + 1) % m][i] = Scalar(1);
    }
    M.X = {clock, shift};
    const std::string bad = verify_relations(M);
    if (!bad.empty()) throw Error(ErrorKind::InvalidExponentSystem, "clock and shift: " + bad);
    return M;
}

FiniteDimModule direct_sum(const FiniteDimModule& a, const FiniteDimModule& b) {
    if (a.X.size() != b.X.size()) throw Error(ErrorKind::DimensionMismatch, "direct sum of modules over different algebras");
    FiniteDimModule s{a.ctx, a.dim + b.dim, {}};
    for (std::size_t g = 0; g < a.X.size(); ++g) {
        ScalarMatrix m(s.dim, std::vector<Scalar>(s.dim));
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j) m[i][j] = a.X[g][i][j];
        for (std::size_t i = 0; i < b.dim; ++i)
            for (std::size_t j = 0; j < b.dim; ++j) m[a.dim + i][a.dim + j] = b.X[g][i][j];
        s.X.push_back(std::move(m));
    }
    return s;
}

std::string FiniteVerdict::describe() const {
    switch (kind) {
        case Kind::AbsolutelySimple:
            return "absolutely simple (word span dimension " + std::to_string(span_dim) + ")";
        case Kind::InvariantSubspace:
            return "invariant subspace of dimension " + std::to_string(subspace.size()) + " (word span dimension " +
                   std::to_string(span_dim) + ")";
        case Kind::Undecided:
            break;
    }
    return "undecided (word span dimension " + std::to_string(span_dim) + ")";
}

FiniteVerdict certify_simplicity_finite(const FiniteDimModule& M, int word_length_cap) {
    const std::size_t d = M.dim;
    std::vector<ScalarMatrix> gens;
    for (const auto& X : M.X) {
        gens.push_back(X);
        gens.push_back(matinv(X));
    }
    FiniteVerdict v;
    Echelon span;
    std::vector<ScalarMatrix> basis{identity_matrix(d)};
    span.insert(flatten(basis[0]));
    std::vector<ScalarMatrix> frontier = basis;
    for (int len = 1; len <= word_length_cap && !frontier.empty() && span.rank() < d * d; ++len) {
        std::vector<ScalarMatrix> next;
        for (const auto& w : frontier)
            for (const auto& g : gens) {
                ScalarMatrix p = matmul(w, g);
                if (span.insert(flatten(p))) {
                    basis.push_back(p);
                    next.push_back(std::move(p));
                }
            }
        frontier = std::move(next);
        v.word_length = len;
    }
    v.span_dim = span.rank();
    // An empty frontier means the span is closed under right multiplication by every generator.
    v.stabilized = frontier.empty() || span.rank() == d * d;
    if (v.span_dim == d * d) {
        v.kind = FiniteVerdict::Kind::AbsolutelySimple;
        return v;
    }
    if (!v.stabilized) return v;
    // The span is an algebra containing 1, so A' e_i is the submodule generated by e_i.
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Scalar> e(d);
        e[i] = Scalar(1);
        Echelon sub;
        for (const auto& b : basis) sub.insert(mat_vec(b, e));
        if (sub.rank() < d) {
            v.kind = FiniteVerdict::Kind::InvariantSubspace;
            v.subspace = sub.rows();
            return v;
        }
    }
    return v;
}

}  // namespace qtorus
