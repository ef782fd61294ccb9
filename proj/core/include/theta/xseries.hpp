#pragma once

#include <string>
#include <vector>

#include "theta/mpoly.hpp"

namespace theta::ring {

// Power series in x truncated at a fixed order, with polynomial
// coefficients.  Arithmetic never consults coefficients beyond the retained
// order; mixed-order operands are truncated to the shorter one.
class xseries {
 public:
  explicit xseries(unsigned order) : coeffs_(order + 1) {}
  explicit xseries(std::vector<mpoly> coeffs);

  static xseries constant(const mpoly& c, unsigned order);
  static xseries variable(unsigned order);  // the series x; order >= 1
  // sum_{k<=order} c^k x^k / k!
  static xseries exp_linear(const mpoly& c, unsigned order);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
  const mpoly& coeff(unsigned k) const;
  void set_coeff(unsigned k, mpoly c);
  const std::vector<mpoly>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  // index of the first nonzero coefficient; series must be nonzero
  unsigned low_trail() const;

  xseries truncate(unsigned new_order) const;
  // apply an mpoly substitution to every coefficient
  xseries subst(const symbol& s, const mpoly& value) const;
  // drop coefficient terms of theta-grade > gmax, coefficientwise
  xseries truncate_grade(unsigned gmax) const;

  friend xseries operator+(const xseries& a, const xseries& b);
  friend xseries operator-(const xseries& a, const xseries& b);
  friend xseries operator*(const xseries& a, const xseries& b);
  friend xseries operator*(const mpoly& c, const xseries& a);
  friend xseries operator-(const xseries& a);

  xseries pow(unsigned e) const;

  // Exact series quotient.  A common leading power of x is cancelled first
  // (recorded in the quotient's provenance note); each remaining step divides
  // by the denominator's lowest coefficient via mpoly::exact_div, so a
  // non-polynomial quotient fails loudly instead of losing terms.
  xseries divide(const xseries& den) const;

  // informational remarks attached by divide(); empty otherwise
  const std::string& note() const { return note_; }

  // equal orders and equal retained coefficients
  friend bool operator==(const xseries& a, const xseries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string str() const;

 private:
  std::vector<mpoly> coeffs_;
  std::string note_;
};

}  // namespace theta::ring
