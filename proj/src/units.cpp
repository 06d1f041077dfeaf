#include "qvh/units.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace qvh {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "dimension_mismatch";
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::NonFinite: return "non_finite";
    case ErrorCode::UnknownUnitSystem: return "unknown_unit_system";
    case ErrorCode::HorizonSingular: return "horizon_singular";
    case ErrorCode::SingularMetric: return "singular_metric";
    case ErrorCode::NotTimelike: return "not_timelike";
    case ErrorCode::InternalInconsistency: return "internal_inconsistency";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "rational exponent with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g == 0 ? 0 : num / g;
  den_ = g == 0 ? 1 : den / g;
}

Rational operator+(Rational a, Rational b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(Rational a, Rational b) { return a + (-b); }

Rational operator*(Rational a, Rational b) { return Rational(a.num_ * b.num_, a.den_ * b.den_); }

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

// ---------------------------------------------------------------------------
// Dimension

Dimension::Dimension(Rational mass, Rational length, Rational time, Rational temperature,
                     Rational current)
    : exps_{mass, length, time, temperature, current} {}

bool Dimension::dimensionless() const {
  for (const auto& e : exps_)
    if (!e.is_zero()) return false;
  return true;
}

Dimension operator+(const Dimension& a, const Dimension& b) {
  Dimension out;
  for (std::size_t i = 0; i < kBaseDims; ++i) out.exps_[i] = a.exps_[i] + b.exps_[i];
  return out;
}

Dimension operator-(const Dimension& a, const Dimension& b) {
  Dimension out;
  for (std::size_t i = 0; i < kBaseDims; ++i) out.exps_[i] = a.exps_[i] - b.exps_[i];
  return out;
}

Dimension operator*(const Dimension& a, Rational p) {
  Dimension out;
  for (std::size_t i = 0; i < kBaseDims; ++i) out.exps_[i] = a.exps_[i] * p;
  return out;
}

std::string Dimension::str() const {
  static constexpr const char* kSymbols[kBaseDims] = {"M", "L", "T", "Theta", "I"};
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < kBaseDims; ++i) {
    if (exps_[i].is_zero()) continue;
    if (!first) os << ' ';
    os << kSymbols[i] << '^' << exps_[i].str();
    first = false;
  }
  return first ? "1" : os.str();
}

namespace dim {
Dimension none() { return {}; }
Dimension mass() { return {1, 0, 0}; }
Dimension length() { return {0, 1, 0}; }
Dimension time() { return {0, 0, 1}; }
Dimension temperature() { return {0, 0, 0, 1}; }
Dimension current() { return {0, 0, 0, 0, 1}; }
Dimension charge() { return {0, 0, 1, 0, 1}; }
Dimension velocity() { return {0, 1, -1}; }
Dimension acceleration() { return {0, 1, -2}; }
Dimension momentum() { return {1, 1, -1}; }
Dimension energy() { return {1, 2, -2}; }
Dimension action() { return {1, 2, -1}; }
Dimension entropy() { return {1, 2, -2, -1}; }
Dimension electric_field() { return {1, 1, -3, 0, -1}; }
Dimension gravitational() { return {-1, 3, -2}; }
Dimension angular_frequency() { return {0, 0, -1}; }
Dimension rate_density() { return {0, -3, -1}; }
}  // namespace dim

// ---------------------------------------------------------------------------
// Quantity

namespace {

[[noreturn]] void mismatch(const char* op, const Dimension& a, const Dimension& b) {
  throw Error(ErrorCode::DimensionMismatch,
              std::string("dimension mismatch in ") + op + ": [" + a.str() + "] vs [" + b.str() + "]");
}

Quantity checked(double value, Dimension d, const char* op) {
  if (!std::isfinite(value))
    throw Error(ErrorCode::NonFinite, std::string("non-finite result from ") + op);
  return Quantity(value, d);
}

}  // namespace

Quantity::Quantity(double value, Dimension dim) : value_(value), dim_(dim) {
  if (!std::isfinite(value)) throw Error(ErrorCode::NonFinite, "quantity value must be finite");
}

double Quantity::as_scalar() const {
  if (!dim_.dimensionless()) mismatch("as_scalar", dim_, dim::none());
  return value_;
}

Quantity& Quantity::operator+=(const Quantity& o) {
  if (dim_ != o.dim_) mismatch("addition", dim_, o.dim_);
  *this = checked(value_ + o.value_, dim_, "addition");
  return *this;
}

Quantity& Quantity::operator-=(const Quantity& o) {
  if (dim_ != o.dim_) mismatch("subtraction", dim_, o.dim_);
  *this = checked(value_ - o.value_, dim_, "subtraction");
  return *this;
}

Quantity operator*(const Quantity& a, const Quantity& b) {
  return checked(a.value_ * b.value_, a.dim_ + b.dim_, "multiplication");
}

Quantity operator/(const Quantity& a, const Quantity& b) {
  if (b.value_ == 0.0) throw Error(ErrorCode::NonFinite, "division by zero quantity");
  return checked(a.value_ / b.value_, a.dim_ - b.dim_, "division");
}

Quantity operator*(const Quantity& a, double s) { return checked(a.value_ * s, a.dim_, "scaling"); }

Quantity operator/(const Quantity& a, double s) {
  if (s == 0.0) throw Error(ErrorCode::NonFinite, "division by zero");
  return checked(a.value_ / s, a.dim_, "scaling");
}

Quantity operator/(double s, const Quantity& a) {
  if (a.value_ == 0.0) throw Error(ErrorCode::NonFinite, "division by zero quantity");
  return checked(s / a.value_, dim::none() - a.dim_, "division");
}

bool operator<(const Quantity& a, const Quantity& b) {
  if (a.dim_ != b.dim_) mismatch("comparison", a.dim_, b.dim_);
  return a.value_ < b.value_;
}

Quantity pow(const Quantity& q, Rational p) {
  if (p.den() != 1 && q.value() < 0.0)
    throw Error(ErrorCode::InvalidArgument, "fractional power of a negative quantity");
  double v;
  if (p.den() == 1)
    v = std::pow(q.value(), static_cast<double>(p.num()));
  else if (p == Rational(1, 2))
    v = std::sqrt(q.value());
  else
    v = std::pow(q.value(), p.to_double());
  return checked(v, q.dim() * p, "pow");
}

Quantity sqrt(const Quantity& q) { return pow(q, Rational(1, 2)); }

Quantity abs(const Quantity& q) { return Quantity(std::fabs(q.value()), q.dim()); }

void require_dim(const Quantity& q, const Dimension& expected, const char* what) {
  if (q.dim() != expected)
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " has dimension [" + q.dim().str() +
                                                  "], expected [" + expected.str() + "]");
}

double require_finite(double value, const char* what) {
  if (!std::isfinite(value)) throw Error(ErrorCode::NonFinite, std::string(what) + " must be finite");
  return value;
}

}  // namespace qvh
