#include "theta/theta_poly.hpp"

#include <utility>

#include "theta/error.hpp"

namespace theta::ring {

theta_poly::theta_poly(mpoly p) : poly_(std::move(p)) {
  for (const auto& [m, c] : poly_.terms())
    for (const auto& f : m.factors())
      if (f.sym.cat() != symbol::category::theta)
        throw precondition_error("theta_poly: non-theta symbol " +
                                 f.sym.name() + " in " + poly_.str());
}

theta_poly theta_poly::grade_part(unsigned g) const {
  return theta_poly(poly_.grade_part(g), unchecked_tag{});
}

theta_poly theta_poly::truncate_grade(unsigned gmax) const {
  return theta_poly(poly_.truncate_grade(gmax), unchecked_tag{});
}

theta_poly& theta_poly::operator+=(const theta_poly& o) {
  poly_ += o.poly_;
  return *this;
}

theta_poly& theta_poly::operator-=(const theta_poly& o) {
  poly_ -= o.poly_;
  return *this;
}

theta_poly operator*(const theta_poly& a, const theta_poly& b) {
  return theta_poly(a.poly_ * b.poly_, theta_poly::unchecked_tag{});
}

theta_poly operator*(const rational& c, const theta_poly& a) {
  return theta_poly(mpoly(c) * a.poly_, theta_poly::unchecked_tag{});
}

theta_poly operator-(const theta_poly& a) {
  return theta_poly(-a.poly_, theta_poly::unchecked_tag{});
}

theta_poly theta_poly::pow(unsigned e) const {
  return theta_poly(poly_.pow(e), unchecked_tag{});
}

theta_poly mul_capped(const theta_poly& a, const theta_poly& b,
                      unsigned grade_cap) {
  mpoly acc;
  for (const auto& [ma, ca] : a.poly_.terms()) {
    unsigned ga = ma.grade();
    if (ga > grade_cap) continue;
    for (const auto& [mb, cb] : b.poly_.terms()) {
      if (ga + mb.grade() > grade_cap) continue;
      acc += mpoly(ma * mb, ca * cb);
    }
  }
  return theta_poly(std::move(acc), theta_poly::unchecked_tag{});
}

}  // namespace theta::ring
