#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "qvh/error.hpp"

namespace qvh {

/// Exact rational exponent. Always stored in lowest terms with den > 0.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  bool is_zero() const noexcept { return num_ == 0; }

  friend Rational operator+(Rational a, Rational b);
  friend Rational operator-(Rational a, Rational b);
  friend Rational operator*(Rational a, Rational b);
  friend Rational operator-(Rational a) { return Rational(-a.num_, a.den_); }
  friend bool operator==(const Rational&, const Rational&) = default;

  std::string str() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Base dimensions, in the order the exponent vector stores them.
enum class BaseDim : std::size_t { Mass = 0, Length, Time, Temperature, Current };
inline constexpr std::size_t kBaseDims = 5;

/// Exponent vector over (M, L, T, Θ, I). Multiplying quantities adds
/// dimensions; only equal dimensions may be added or compared.
class Dimension {
 public:
  constexpr Dimension() = default;
  Dimension(Rational mass, Rational length, Rational time, Rational temperature = {},
            Rational current = {});

  const Rational& operator[](BaseDim d) const { return exps_[static_cast<std::size_t>(d)]; }
  const Rational& operator[](std::size_t i) const { return exps_[i]; }

  bool dimensionless() const;

  friend Dimension operator+(const Dimension& a, const Dimension& b);
  friend Dimension operator-(const Dimension& a, const Dimension& b);
  friend Dimension operator*(const Dimension& a, Rational p);
  friend bool operator==(const Dimension&, const Dimension&) = default;

  /// Compact signature such as "M^1 L^2 T^-1".
  std::string str() const;

 private:
  std::array<Rational, kBaseDims> exps_{};
};

namespace dim {
// Dimensions used across the toolkit.
Dimension none();
Dimension mass();
Dimension length();
Dimension time();
Dimension temperature();
Dimension current();
Dimension charge();
Dimension velocity();
Dimension acceleration();
Dimension momentum();
Dimension energy();
Dimension action();
Dimension entropy();  // energy per temperature
Dimension electric_field();
Dimension gravitational();  // L^3 M^-1 T^-2
Dimension angular_frequency();
Dimension rate_density();  // T^-1 L^-3
}  // namespace dim

/// Real value tagged with a dimension vector. Arithmetic checks dimensions
/// and finiteness; violations raise qvh::Error.
class Quantity {
 public:
  Quantity() = default;
  Quantity(double value, Dimension dim);

  static Quantity scalar(double value) { return Quantity(value, dim::none()); }

  double value() const noexcept { return value_; }
  const Dimension& dim() const noexcept { return dim_; }

  /// Value of a dimensionless quantity; throws if the dimension is not empty.
  double as_scalar() const;

  Quantity operator-() const { return Quantity(-value_, dim_); }
  Quantity& operator+=(const Quantity& o);
  Quantity& operator-=(const Quantity& o);

  friend Quantity operator+(Quantity a, const Quantity& b) { return a += b; }
  friend Quantity operator-(Quantity a, const Quantity& b) { return a -= b; }
  friend Quantity operator*(const Quantity& a, const Quantity& b);
  friend Quantity operator/(const Quantity& a, const Quantity& b);
  friend Quantity operator*(const Quantity& a, double s);
  friend Quantity operator*(double s, const Quantity& a) { return a * s; }
  friend Quantity operator/(const Quantity& a, double s);
  friend Quantity operator/(double s, const Quantity& a);

  // Comparisons require matching dimensions.
  friend bool operator<(const Quantity& a, const Quantity& b);
  friend bool operator>(const Quantity& a, const Quantity& b) { return b < a; }
  friend bool operator<=(const Quantity& a, const Quantity& b) { return !(b < a); }
  friend bool operator>=(const Quantity& a, const Quantity& b) { return !(a < b); }

  /// Exact equality of value and dimension.
  friend bool operator==(const Quantity&, const Quantity&) = default;

 private:
  double value_ = 0.0;
  Dimension dim_{};
};

Quantity pow(const Quantity& q, Rational p);
Quantity sqrt(const Quantity& q);
Quantity abs(const Quantity& q);

/// Throws DimensionMismatch unless q has dimension `expected`.
void require_dim(const Quantity& q, const Dimension& expected, const char* what);

/// Throws NonFinite if value is NaN or infinite.
double require_finite(double value, const char* what);

}  // namespace qvh
