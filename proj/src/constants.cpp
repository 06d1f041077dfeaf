#include "qvh/constants.hpp"

#include <cmath>
#include <sstream>
#include <utility>
#include <vector>

namespace qvh {

UnitSystem parse_unit_system(std::string_view tag) {
  if (tag == "si" || tag == "SI") return UnitSystem::SI;
  if (tag == "natural") return UnitSystem::Natural;
  if (tag == "planck") return UnitSystem::Planck;
  throw Error(ErrorCode::UnknownUnitSystem,
              "unknown unit system '" + std::string(tag) + "' (expected si, natural or planck)");
}

std::string_view to_string(UnitSystem system) {
  switch (system) {
    case UnitSystem::SI: return "si";
    case UnitSystem::Natural: return "natural";
    case UnitSystem::Planck: return "planck";
  }
  return "si";
}

namespace {

ConstantSet codata2018() {
  ConstantSet s;
  s.system = UnitSystem::SI;
  s.e = Quantity(1.602176634e-19, dim::charge());
  s.hbar = Quantity(1.054571817e-34, dim::action());
  s.c = Quantity(299792458.0, dim::velocity());
  s.k = Quantity(1.380649e-23, dim::entropy());
  s.G = Quantity(6.67430e-11, dim::gravitational());
  s.m_e = Quantity(9.1093837015e-31, dim::mass());
  return s;
}

// Factor f such that value_in_basis = value_in_SI * f.
double from_si_factor(const Dimension& d, const UnitBasis& basis) {
  double f = 1.0;
  for (std::size_t i = 0; i < kBaseDims; ++i) {
    if (d[i].is_zero()) continue;
    f /= std::pow(basis[i], d[i].to_double());
  }
  return f;
}

Quantity to_si(const Quantity& q, const UnitBasis& basis) {
  return Quantity(q.value() / from_si_factor(q.dim(), basis), q.dim());
}

Quantity from_si(const Quantity& q, const UnitBasis& basis) {
  return Quantity(q.value() * from_si_factor(q.dim(), basis), q.dim());
}

ConstantSet recover_si(const ConstantSet& consts) {
  if (consts.system == UnitSystem::SI) return consts;
  ConstantSet s;
  s.system = UnitSystem::SI;
  s.e = to_si(consts.e, consts.basis);
  s.hbar = to_si(consts.hbar, consts.basis);
  s.c = to_si(consts.c, consts.basis);
  s.k = to_si(consts.k, consts.basis);
  s.G = to_si(consts.G, consts.basis);
  s.m_e = to_si(consts.m_e, consts.basis);
  return s;
}

UnitBasis basis_from_si(UnitSystem system, const ConstantSet& si) {
  const double hbar = si.hbar.value();
  const double c = si.c.value();
  const double k = si.k.value();
  const double G = si.G.value();
  const double e = si.e.value();
  switch (system) {
    case UnitSystem::SI:
      return {1, 1, 1, 1, 1};
    case UnitSystem::Natural: {
      const double m = si.m_e.value();
      const double t = hbar / (m * c * c);
      return {m, hbar / (m * c), t, m * c * c / k, e / t};
    }
    case UnitSystem::Planck: {
      const double m = std::sqrt(hbar * c / G);
      const double l = std::sqrt(hbar * G / (c * c * c));
      const double t = l / c;
      return {m, l, t, m * c * c / k, e / t};
    }
  }
  throw Error(ErrorCode::UnknownUnitSystem, "unknown unit system");
}

}  // namespace

UnitBasis unit_basis(UnitSystem system, const ConstantSet& consts) {
  return basis_from_si(system, recover_si(consts));
}

ConstantSet make_constants(UnitSystem system) {
  const ConstantSet si = codata2018();
  if (system == UnitSystem::SI) return si;

  const UnitBasis basis = basis_from_si(system, si);
  ConstantSet s;
  s.system = system;
  s.basis = basis;
  s.e = Quantity(1.0, dim::charge());
  s.hbar = Quantity(1.0, dim::action());
  s.c = Quantity(1.0, dim::velocity());
  s.k = Quantity(1.0, dim::entropy());
  if (system == UnitSystem::Natural) {
    s.m_e = Quantity(1.0, dim::mass());
    s.G = from_si(si.G, basis);
  } else {
    s.G = Quantity(1.0, dim::gravitational());
    s.m_e = from_si(si.m_e, basis);
  }
  return s;
}

ConstantSet make_constants(std::string_view tag) { return make_constants(parse_unit_system(tag)); }

void validate(const ConstantSet& consts) {
  const std::pair<const Quantity*, std::pair<Dimension, const char*>> checks[] = {
      {&consts.e, {dim::charge(), "e"}},      {&consts.hbar, {dim::action(), "hbar"}},
      {&consts.c, {dim::velocity(), "c"}},    {&consts.k, {dim::entropy(), "k"}},
      {&consts.G, {dim::gravitational(), "G"}}, {&consts.m_e, {dim::mass(), "m_e"}},
  };
  for (const auto& [q, spec] : checks) {
    require_dim(*q, spec.first, spec.second);
    if (!(q->value() > 0.0))
      throw Error(ErrorCode::InvalidArgument, std::string("constant ") + spec.second + " must be positive");
  }
}

PlanckScale planck_scale(const ConstantSet& consts) {
  validate(consts);
  const Quantity& hbar = consts.hbar;
  const Quantity& c = consts.c;
  const Quantity& G = consts.G;
  PlanckScale p;
  p.m_pl = sqrt(hbar * c / G);
  p.l_pl = sqrt(hbar * G / pow(c, 3));
  p.t_pl = p.l_pl / c;
  p.T_pl = sqrt(hbar * pow(c, 5) / G) / consts.k;
  return p;
}

Quantity convert(const Quantity& q, UnitSystem from, UnitSystem to, const ConstantSet& consts) {
  require_finite(q.value(), "quantity to convert");
  if (from == to) return q;
  const ConstantSet si = recover_si(consts);
  const UnitBasis a = basis_from_si(from, si);
  const UnitBasis b = basis_from_si(to, si);
  double f = 1.0;
  for (std::size_t i = 0; i < kBaseDims; ++i) {
    if (q.dim()[i].is_zero()) continue;
    f *= std::pow(a[i] / b[i], q.dim()[i].to_double());
  }
  return Quantity(q.value() * f, q.dim());
}

std::string unit_label(const Dimension& d, UnitSystem system) {
  if (system == UnitSystem::SI) {
    static const std::vector<std::pair<Dimension, const char*>> kNamed = {
        {dim::none(), "1"},
        {dim::acceleration(), "m/s^2"},
        {dim::velocity(), "m/s"},
        {dim::electric_field(), "V/m"},
        {dim::energy(), "J"},
        {dim::entropy(), "J/K"},
        {dim::action(), "J s"},
        {dim::charge(), "C"},
        {dim::rate_density(), "m^-3 s^-1"},
        {dim::momentum(), "kg m/s"},
        {dim::angular_frequency(), "rad/s"},
    };
    for (const auto& [nd, name] : kNamed)
      if (nd == d) return name;
  }
  if (d.dimensionless()) return "1";

  static constexpr const char* kSi[kBaseDims] = {"kg", "m", "s", "K", "A"};
  static constexpr const char* kNatural[kBaseDims] = {"m_e", "lbar_C", "tbar_C", "T_e", "e/tbar_C"};
  static constexpr const char* kPlanck[kBaseDims] = {"m_P", "l_P", "t_P", "T_P", "e/t_P"};
  const char* const* names = system == UnitSystem::SI        ? kSi
                             : system == UnitSystem::Natural ? kNatural
                                                             : kPlanck;
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < kBaseDims; ++i) {
    if (d[i].is_zero()) continue;
    if (!first) os << ' ';
    os << names[i];
    if (d[i] != Rational(1)) os << '^' << d[i].str();
    first = false;
  }
  return os.str();
}

}  // namespace qvh
