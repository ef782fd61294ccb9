#include "theta/genus.hpp"

#include <map>

#include "theta/combinatorics.hpp"
#include "theta/error.hpp"
#include "theta/permutohedron.hpp"

namespace theta::genus {

using ring::monomial;
using ring::mpoly;
using ring::symbol;
using ring::xseries;

xseries td_theta_gf(unsigned order) {
  if (order < 1) throw precondition_error("td_theta_gf: order must be >= 1");
  mpoly b(symbol::b());
  mpoly t(symbol::t());
  xseries one = xseries::constant(mpoly(1), order);
  xseries num = one - xseries::exp_linear(-b, order);
  xseries den = xseries::constant(b, order) - t * num;
  return num.divide(den);
}

xseries f_gf(unsigned order) {
  if (order < 1) throw precondition_error("f_gf: order must be >= 1");
  mpoly s(symbol::s());
  mpoly t(symbol::t());
  xseries one = xseries::constant(mpoly(1), order);
  xseries num = xseries::exp_linear(s, order) - one;
  xseries den = xseries::constant(s, order) - t * num;
  return num.divide(den);
}

xseries h_gf(unsigned order) {
  if (order < 1) throw precondition_error("h_gf: order must be >= 1");
  mpoly s(symbol::s());
  mpoly t(symbol::t());
  xseries es = xseries::exp_linear(s, order);
  xseries et = xseries::exp_linear(t, order);
  return (es - et).divide(s * et - t * es);
}

xseries chi_y_gf(unsigned order) {
  if (order < 1) throw precondition_error("chi_y_gf: order must be >= 1");
  mpoly y(symbol::y());
  xseries one = xseries::constant(mpoly(1), order);
  xseries e = xseries::exp_linear(-(mpoly(1) + y), order);
  return (one - e).divide(one + y * e);
}

mpoly egf_coeff(const xseries& series, unsigned n) {
  if (n + 1 > series.order())
    throw precondition_error("egf_coeff: series order too small for n = " +
                             std::to_string(n));
  return rational(comb::factorial(n + 1)) * series.coeff(n + 1);
}

integer chi_p(unsigned n, unsigned p) {
  if (p > n) throw precondition_error("chi_p: need p <= n");
  integer a = comb::eulerian(n + 1, p);
  return (n - p) % 2 == 0 ? a : integer(-a);
}

genus_spec todd() {
  return {"Td", [](unsigned m) {
            return mpoly(m % 2 == 0 ? rational(1) : rational(-1));
          }};
}

genus_spec todd_two_parameter() {
  return {"Td_{s,t}", [](unsigned m) { return perm::h_poly(m); }};
}

genus_spec chi_y() {
  return {"chi_y", [](unsigned m) {
            mpoly acc;
            for (unsigned k = 0; k <= m; ++k) {
              rational c(comb::eulerian(m + 1, k));
              if ((m + k) % 2 == 1) c = -c;
              acc += mpoly(monomial(symbol::y(), k), c);
            }
            return acc;
          }};
}

genus_spec euler_characteristic() {
  return {"chi", [](unsigned m) {
            rational c(comb::factorial(m + 1));
            return mpoly(m % 2 == 0 ? c : rational(-c));
          }};
}

mpoly evaluate(const genus_spec& g, const ring::theta_poly& cls) {
  std::map<unsigned, mpoly> values;
  auto value_of = [&](unsigned m) -> const mpoly& {
    auto it = values.find(m);
    if (it == values.end()) it = values.emplace(m, g.on_theta(m)).first;
    return it->second;
  };
  mpoly acc;
  for (const auto& [m, c] : cls.poly().terms()) {
    mpoly prod{c};
    for (const auto& f : m.factors())
      prod *= value_of(f.sym.index()).pow(f.exp);
    acc += prod;
  }
  return acc;
}

}  // namespace theta::genus
