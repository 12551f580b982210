#include "qtorus/scalar.hpp"

#include <sstream>

#include "qtorus/error.hpp"

namespace qtorus {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::InvalidExponentSystem: return "InvalidExponentSystem";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::ContextMismatch: return "ContextMismatch";
        case ErrorKind::NotInSubalgebra: return "NotInSubalgebra";
        case ErrorKind::ZeroElement: return "ZeroElement";
        case ErrorKind::NotUnitary: return "NotUnitary";
        case ErrorKind::NonUnitLeadingCoefficient: return "NonUnitLeadingCoefficient";
        case ErrorKind::NonCommutativeCoefficients: return "NonCommutativeCoefficients";
        case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::UnsupportedRank: return "UnsupportedRank";
        case ErrorKind::ZeroCharacterValue: return "ZeroCharacterValue";
        case ErrorKind::WrongMode: return "WrongMode";
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::Config: return "ConfigError";
        case ErrorKind::Overflow: return "Overflow";
    }
    return "Error";
}

namespace {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

RatFunc lift(const Rational& c, const RatFunc& like) { return RatFunc(like.nvars(), c); }
CycloNum lift(const Rational& c, const CycloNum& like) { return CycloNum::constant(like.field(), c); }

[[noreturn]] void mismatch() {
    throw Error(ErrorKind::ContextMismatch, "scalars from different fields");
}

// Applies a binary field operation after promoting rational constants.
template <class Op>
Scalar combine(const std::variant<Rational, RatFunc, CycloNum>& a,
               const std::variant<Rational, RatFunc, CycloNum>& b, Op op) {
    return std::visit(
        overloaded{
            [&](const Rational& x, const Rational& y) -> Scalar { return Scalar(Rational(op(x, y))); },
            [&](const Rational& x, const RatFunc& y) -> Scalar { return Scalar(op(lift(x, y), y)); },
            [&](const RatFunc& x, const Rational& y) -> Scalar { return Scalar(op(x, lift(y, x))); },
            [&](const RatFunc& x, const RatFunc& y) -> Scalar {
                if (x.nvars() != y.nvars()) mismatch();
                return Scalar(op(x, y));
            },
            [&](const Rational& x, const CycloNum& y) -> Scalar { return Scalar(op(lift(x, y), y)); },
            [&](const CycloNum& x, const Rational& y) -> Scalar { return Scalar(op(x, lift(y, x))); },
            [&](const CycloNum& x, const CycloNum& y) -> Scalar { return Scalar(op(x, y)); },
            [&](const RatFunc&, const CycloNum&) -> Scalar { mismatch(); },
            [&](const CycloNum&, const RatFunc&) -> Scalar { mismatch(); },
        },
        a, b);
}

}  // namespace

Scalar::Scalar(RatFunc f) {
    if (f.is_constant()) v_ = f.constant_value();
    else v_ = std::move(f);
}

Scalar::Scalar(CycloNum z) {
    if (z.is_constant()) v_ = z.constant_value();
    else v_ = std::move(z);
}

bool Scalar::is_zero() const {
    const Rational* r = std::get_if<Rational>(&v_);
    return r && *r == 0;
}

bool Scalar::is_one() const {
    const Rational* r = std::get_if<Rational>(&v_);
    return r && *r == 1;
}

Scalar Scalar::operator-() const {
    return std::visit(overloaded{
                          [](const Rational& x) -> Scalar { return Scalar(Rational(-x)); },
                          [](const auto& x) -> Scalar { return Scalar(-x); },
                      },
                      v_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return combine(a.v_, b.v_, [](const auto& x, const auto& y) { return x + y; });
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) return a;
    return combine(a.v_, b.v_, [](const auto& x, const auto& y) { return x - y; });
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar();
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    return combine(a.v_, b.v_, [](const auto& x, const auto& y) { return x * y; });
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero scalar");
    return std::visit(overloaded{
                          [](const Rational& x) -> Scalar { return Scalar(Rational(1) / x); },
                          [](const RatFunc& x) -> Scalar { return Scalar(x.inverse()); },
                          [](const CycloNum& x) -> Scalar { return Scalar(x.inverse()); },
                      },
                      v_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "scalar division by zero");
    if (b.is_one()) return a;
    return a * b.inverse();
}

Scalar Scalar::pow(std::int64_t k) const {
    if (k < 0) return inverse().pow(-k);
    Scalar result(1), base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

FieldMode FieldMode::generic(int r) {
    if (r < 1) throw Error(ErrorKind::Config, "generic mode needs at least one parameter");
    return FieldMode{Kind::Generic, r, 0};
}

FieldMode FieldMode::root_of_unity(int m) {
    if (m < 2) throw Error(ErrorKind::WrongMode, "root of unity order must be at least 2");
    return FieldMode{Kind::RootOfUnity, 1, m};
}

std::string FieldMode::describe() const {
    std::ostringstream os;
    if (is_root()) os << "root_of_unity(m=" << m << ")";
    else os << "generic(r=" << r << ")";
    return os.str();
}

Field::Field(FieldMode mode) : mode_(mode) {
    if (mode_.is_root()) {
        if (mode_.r != 1) throw Error(ErrorKind::WrongMode, "root-of-unity mode requires r = 1");
        cyclo_ = CyclotomicField::get(mode_.m);
    } else if (mode_.r < 1) {
        throw Error(ErrorKind::Config, "generic mode needs at least one parameter");
    }
}

Scalar Field::q_power(std::span<const std::int64_t> e) const {
    if (static_cast<int>(e.size()) != mode_.r)
        throw Error(ErrorKind::DimensionMismatch, "q_power exponent vector has wrong length");
    if (mode_.is_root()) return Scalar(CycloNum::zeta_power(cyclo_, e[0]));
    bool trivial = true;
    for (auto x : e) trivial = trivial && x == 0;
    if (trivial) return Scalar(1);
    return Scalar(RatFunc::monomial(std::vector<std::int64_t>(e.begin(), e.end())));
}

Scalar Field::parameter(int k) const {
    std::vector<std::int64_t> e(static_cast<std::size_t>(mode_.r), 0);
    e[static_cast<std::size_t>(k)] = 1;
    return q_power(e);
}

Scalar Field::zeta() const {
    if (!mode_.is_root()) throw Error(ErrorKind::WrongMode, "zeta exists only in root-of-unity mode");
    return Scalar(CycloNum::zeta_power(cyclo_, 1));
}

bool Field::is_trivial_power(std::span<const std::int64_t> e) const {
    for (auto x : e) {
        if (mode_.is_root() ? (x % mode_.m != 0) : (x != 0)) return false;
    }
    return true;
}

}  // namespace qtorus
