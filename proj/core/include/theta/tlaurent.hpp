#pragma once

#include <vector>

#include "theta/theta_poly.hpp"

namespace theta::ring {

// Laurent polynomial in t over the theta ring, tracked on an explicit
// exponent window [lo, hi] with a theta-grade cap applied to every product.
// Addition takes the union of windows; multiplication adds them.  The
// principal part (exponents < 0) is what the permutohedral-class formula
// requires to cancel.
class tlaurent {
 public:
  tlaurent(int lo, int hi, unsigned grade_cap);

  static tlaurent term(int e, theta_poly c, unsigned grade_cap);

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  unsigned grade_cap() const { return grade_cap_; }

  // zero outside the window
  const theta_poly& coeff(int e) const;
  void set_coeff(int e, theta_poly c);  // e must lie in the window

  bool is_zero() const;
  theta_poly constant_coeff() const { return coeff(0); }
  bool principal_part_is_zero() const;
  // exponents < 0 with nonzero coefficient, ascending
  std::vector<int> principal_exponents() const;

  // caps must agree
  friend tlaurent operator+(const tlaurent& a, const tlaurent& b);
  friend tlaurent operator*(const tlaurent& a, const tlaurent& b);

  // Narrow the window.  Dropping a nonzero coefficient below new_lo throws
  // truncation_error; coefficients above new_hi are discarded (the caller is
  // asserting they are out of interest).
  tlaurent restrict_window(int new_lo, int new_hi) const;

  std::string str() const;

 private:
  int lo_;
  int hi_;
  unsigned grade_cap_;
  std::vector<theta_poly> coeffs_;  // coeffs_[e - lo_]
  static const theta_poly zero_;
};

}  // namespace theta::ring
