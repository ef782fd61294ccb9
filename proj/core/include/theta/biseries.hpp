#pragma once

#include <vector>

#include "theta/xseries.hpp"

namespace theta::ring {

// Bivariate power series in (u, v) truncated at a fixed total order:
// coefficients c[i][j] are retained for i + j <= order.  Used for the
// formal-group identity, where a one-variable series is lifted to u, to v,
// or composed with u + v.
class biseries {
 public:
  explicit biseries(unsigned order);

  static biseries constant(const mpoly& c, unsigned order);
  // a(u), a(v), and a(u+v); the last spreads a_k over u^i v^j by binomials
  static biseries lift_u(const xseries& a, unsigned order);
  static biseries lift_v(const xseries& a, unsigned order);
  static biseries lift_sum(const xseries& a, unsigned order);

  unsigned order() const { return order_; }
  const mpoly& coeff(unsigned i, unsigned j) const;  // requires i + j <= order
  void set_coeff(unsigned i, unsigned j, mpoly c);

  friend biseries operator+(const biseries& a, const biseries& b);
  friend biseries operator-(const biseries& a, const biseries& b);
  friend biseries operator*(const biseries& a, const biseries& b);

  // Exact quotient by a series whose (0,0) coefficient divides every
  // elimination step (mpoly::exact_div); errors propagate.
  biseries divide(const biseries& den) const;

  friend bool operator==(const biseries&, const biseries&) = default;

  std::string str() const;

 private:
  unsigned order_;
  // rows_[i][j] for i + j <= order
  std::vector<std::vector<mpoly>> rows_;
};

}  // namespace theta::ring
