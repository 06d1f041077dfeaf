#include "qvh/vacuum.hpp"

#include <cmath>
#include <numbers>

namespace qvh {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(const Quantity& q, const Dimension& d, const char* what) {
  require_dim(q, d, what);
  if (!(q.value() > 0.0)) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be positive");
}

void require_nonnegative(const Quantity& q, const Dimension& d, const char* what) {
  require_dim(q, d, what);
  if (q.value() < 0.0) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be nonnegative");
}

// sum_{n>=1} z^n / n^2 for 0 <= z <= 1/2.
PolylogSum dilog_series(double z, double rel_tol) {
  PolylogSum out;
  if (z == 0.0) return out;
  // Tail after stopping is below next_term / (1 - z); fold that into the test.
  const double threshold = rel_tol * (1.0 - z);
  double zn = z;
  for (std::size_t n = 1; n <= kMaxSeriesTerms; ++n) {
    const double nd = static_cast<double>(n);
    out.value += zn / (nd * nd);
    out.terms = n;
    zn *= z;
    const double next = zn / ((nd + 1.0) * (nd + 1.0));
    if (next < threshold * out.value) break;
  }
  return out;
}

Quantity heuristic_unruh(const Quantity& a, const ConstantSet& c) {
  return c.hbar * a / (6.0 * c.k * c.c);
}

}  // namespace

PolylogSum dilog_exp_neg(double x, double rel_tol) {
  if (std::isnan(x) || x < 0.0) throw Error(ErrorCode::InvalidArgument, "series argument must be nonnegative");
  if (!(rel_tol > 0.0 && rel_tol < 1.0))
    throw Error(ErrorCode::InvalidArgument, "rel_tol must lie in (0, 1)");
  if (std::isinf(x)) return {};
  if (x == 0.0) return {kPi * kPi / 6.0, 0};

  const double z = std::exp(-x);
  if (z <= 0.5) return dilog_series(z, rel_tol);

  // Reflection about z = 1/2 with ln z = -x and 1 - z = -expm1(-x).
  const double w = -std::expm1(-x);
  PolylogSum reflected = dilog_series(w, rel_tol);
  reflected.value = kPi * kPi / 6.0 + x * std::log(w) - reflected.value;
  return reflected;
}

Quantity critical_field(const Quantity& m, const ConstantSet& consts, Mode mode) {
  require_positive(m, dim::mass(), "mass");
  validate(consts);
  const double coeff = mode == Mode::Exact ? kPi : 2.0;
  return coeff * m * m * pow(consts.c, 3) / (consts.e * consts.hbar);
}

SchwingerResult schwinger(const Quantity& E, const ConstantSet& consts, double rel_tol) {
  validate(consts);
  return schwinger(E, consts.m_e, consts, rel_tol);
}

SchwingerResult schwinger(const Quantity& E, const Quantity& m, const ConstantSet& consts, double rel_tol) {
  require_nonnegative(E, dim::electric_field(), "electric field");
  if (!(rel_tol > 0.0 && rel_tol < 1.0))
    throw Error(ErrorCode::InvalidArgument, "rel_tol must lie in (0, 1)");
  validate(consts);

  SchwingerResult r;
  r.critical_field = critical_field(m, consts, Mode::Exact);
  r.prefactor = (consts.e * consts.e * E * E) / (kPi * kPi * consts.hbar * consts.hbar * consts.c);
  if (E.value() == 0.0) {
    r.rate = Quantity(0.0, dim::rate_density());
    return r;
  }
  const double x = r.critical_field.value() / E.value();
  r.series = dilog_exp_neg(x, rel_tol);
  r.rate = r.prefactor * r.series.value;
  return r;
}

Quantity schwinger_rate(const Quantity& E, const ConstantSet& consts, double rel_tol) {
  return schwinger(E, consts, rel_tol).rate;
}

FluctuationScales fluctuation_scales(const Quantity& m, const ConstantSet& consts) {
  require_positive(m, dim::mass(), "mass");
  validate(consts);
  FluctuationScales s;
  s.delta_E = 2.0 * m * consts.c * consts.c;
  s.delta_t = consts.hbar / s.delta_E;
  s.delta_x = consts.c * s.delta_t;
  return s;
}

Quantity characteristic_acceleration(const Quantity& m, const ConstantSet& consts) {
  require_positive(m, dim::mass(), "mass");
  validate(consts);
  return 2.0 * m * pow(consts.c, 3) / consts.hbar;
}

TemperatureEstimate unruh_temperature(const Quantity& a, const ConstantSet& consts) {
  require_nonnegative(a, dim::acceleration(), "acceleration");
  validate(consts);
  return {consts.hbar * a / (2.0 * kPi * consts.k * consts.c), heuristic_unruh(a, consts)};
}

MasslessChain massless_unruh_chain(const Quantity& a, const Quantity& omega, const ConstantSet& consts) {
  require_nonnegative(a, dim::acceleration(), "acceleration");
  require_positive(omega, dim::angular_frequency(), "angular frequency");
  validate(consts);
  MasslessChain ch;
  ch.delta_t = 1.0 / (2.0 * omega);
  ch.wavelength = 2.0 * kPi * consts.c / omega;
  ch.delta_x = ch.wavelength / (4.0 * kPi);
  ch.effective_mass = consts.hbar * omega / (consts.c * consts.c);
  ch.work = ch.effective_mass * a * ch.delta_x;
  // (hbar omega / c^2) a (2 pi c / omega) / (4 pi) = hbar a / (2 c) = 3 k T
  ch.temperature = heuristic_unruh(a, consts);
  return ch;
}

Quantity massless_unruh_temperature(const Quantity& a, const Quantity& omega, const ConstantSet& consts) {
  return massless_unruh_chain(a, omega, consts).temperature;
}

}  // namespace qvh
