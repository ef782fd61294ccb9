#pragma once

#include <string>

#include "theta/mpoly.hpp"

namespace theta::ring {

// Polynomial in the theta generators only (rationals allowed as
// coefficients).  The grade of θ_{m1}^{e1}…θ_{mk}^{ek} is Σ e_i·m_i.
class theta_poly {
 public:
  theta_poly() = default;
  // validates that p mentions no scalar or z symbols
  explicit theta_poly(mpoly p);
  theta_poly(const rational& c) : poly_(c) {}
  theta_poly(long c) : poly_(c) {}

  static theta_poly generator(unsigned m) {
    return theta_poly(mpoly(symbol::theta(m)));
  }

  const mpoly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }
  unsigned max_grade() const { return poly_.max_grade(); }
  bool is_homogeneous_of_grade(unsigned g) const {
    return poly_.is_homogeneous_of_grade(g);
  }
  theta_poly grade_part(unsigned g) const;
  theta_poly truncate_grade(unsigned gmax) const;

  theta_poly& operator+=(const theta_poly& o);
  theta_poly& operator-=(const theta_poly& o);
  friend theta_poly operator+(theta_poly a, const theta_poly& b) {
    return a += b;
  }
  friend theta_poly operator-(theta_poly a, const theta_poly& b) {
    return a -= b;
  }
  friend theta_poly operator*(const theta_poly& a, const theta_poly& b);
  friend theta_poly operator*(const rational& c, const theta_poly& a);
  friend theta_poly operator-(const theta_poly& a);

  theta_poly pow(unsigned e) const;

  friend bool operator==(const theta_poly&, const theta_poly&) = default;

  std::string str() const { return poly_.str(); }
  std::string latex() const { return poly_.latex(); }

  // product with terms of grade > grade_cap discarded
  friend theta_poly mul_capped(const theta_poly& a, const theta_poly& b,
                               unsigned grade_cap);

 private:
  struct unchecked_tag {};
  theta_poly(mpoly p, unchecked_tag) : poly_(std::move(p)) {}

  mpoly poly_;
};

}  // namespace theta::ring
