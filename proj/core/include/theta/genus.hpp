#pragma once

#include <functional>
#include <string>

#include "theta/theta_poly.hpp"
#include "theta/xseries.hpp"

namespace theta::genus {

inline constexpr unsigned default_order = 12;

// (1 - e^{-bx}) / (b - t(1 - e^{-bx}))
ring::xseries td_theta_gf(unsigned order = default_order);

// (e^{sx} - 1) / (s - t(e^{sx} - 1))
ring::xseries f_gf(unsigned order = default_order);

// (e^{sx} - e^{tx}) / (s e^{tx} - t e^{sx})
ring::xseries h_gf(unsigned order = default_order);

// (1 - e^{-x(1+y)}) / (1 + y e^{-x(1+y)})
ring::xseries chi_y_gf(unsigned order = default_order);

// the exponential-generating-function reading: (n+1)! times the coefficient
// of x^{n+1}; requires n + 1 <= series order
ring::mpoly egf_coeff(const ring::xseries& series, unsigned n);

// chi^p of the n-dimensional theta divisor: (-1)^{n-p} A_{n+1,p}
integer chi_p(unsigned n, unsigned p);

// A genus is determined by its values on the theta generators and extends to
// theta polynomials as a ring homomorphism.
struct genus_spec {
  std::string name;
  std::function<ring::mpoly(unsigned)> on_theta;  // value at θ_m, m >= 1
};

genus_spec todd();                  // θ_m -> (-1)^m
genus_spec todd_two_parameter();    // θ_m -> h-polynomial of Π^m
genus_spec chi_y();                 // θ_m -> (-1)^m A_{m+1}(-y)
genus_spec euler_characteristic();  // θ_m -> (-1)^m (m+1)!

ring::mpoly evaluate(const genus_spec& g, const ring::theta_poly& cls);

}  // namespace theta::genus
