#include "theta/biseries.hpp"

#include <algorithm>
#include <utility>

#include "theta/combinatorics.hpp"
#include "theta/error.hpp"

namespace theta::ring {

biseries::biseries(unsigned order) : order_(order) {
  rows_.resize(order + 1);
  for (unsigned i = 0; i <= order; ++i) rows_[i].resize(order - i + 1);
}

biseries biseries::constant(const mpoly& c, unsigned order) {
  biseries r(order);
  r.rows_[0][0] = c;
  return r;
}

biseries biseries::lift_u(const xseries& a, unsigned order) {
  biseries r(order);
  unsigned top = std::min(order, a.order());
  for (unsigned i = 0; i <= top; ++i) r.rows_[i][0] = a.coeff(i);
  return r;
}

biseries biseries::lift_v(const xseries& a, unsigned order) {
  biseries r(order);
  unsigned top = std::min(order, a.order());
  for (unsigned j = 0; j <= top; ++j) r.rows_[0][j] = a.coeff(j);
  return r;
}

biseries biseries::lift_sum(const xseries& a, unsigned order) {
  // (u+v)^k spreads a_k over u^i v^{k-i} with binomial weights
  biseries r(order);
  unsigned top = std::min(order, a.order());
  for (unsigned k = 0; k <= top; ++k) {
    const mpoly& ak = a.coeff(k);
    if (ak.is_zero()) continue;
    for (unsigned i = 0; i <= k; ++i)
      r.rows_[i][k - i] = rational(comb::binomial(k, i)) * ak;
  }
  return r;
}

const mpoly& biseries::coeff(unsigned i, unsigned j) const {
  if (i + j > order_)
    throw precondition_error("biseries::coeff: index beyond truncation order");
  return rows_[i][j];
}

void biseries::set_coeff(unsigned i, unsigned j, mpoly c) {
  if (i + j > order_)
    throw precondition_error(
        "biseries::set_coeff: index beyond truncation order");
  rows_[i][j] = std::move(c);
}

biseries operator+(const biseries& a, const biseries& b) {
  unsigned n = std::min(a.order_, b.order_);
  biseries r(n);
  for (unsigned i = 0; i <= n; ++i)
    for (unsigned j = 0; i + j <= n; ++j)
      r.rows_[i][j] = a.rows_[i][j] + b.rows_[i][j];
  return r;
}

biseries operator-(const biseries& a, const biseries& b) {
  unsigned n = std::min(a.order_, b.order_);
  biseries r(n);
  for (unsigned i = 0; i <= n; ++i)
    for (unsigned j = 0; i + j <= n; ++j)
      r.rows_[i][j] = a.rows_[i][j] - b.rows_[i][j];
  return r;
}

biseries operator*(const biseries& a, const biseries& b) {
  unsigned n = std::min(a.order_, b.order_);
  biseries r(n);
  for (unsigned i = 0; i <= n; ++i)
    for (unsigned j = 0; i + j <= n; ++j) {
      mpoly acc;
      for (unsigned k = 0; k <= i; ++k)
        for (unsigned l = 0; l <= j; ++l)
          acc += a.rows_[k][l] * b.rows_[i - k][j - l];
      r.rows_[i][j] = std::move(acc);
    }
  return r;
}

biseries biseries::divide(const biseries& den) const {
  if (den.rows_[0][0].is_zero())
    throw precondition_error(
        "biseries::divide: denominator has zero constant term");
  unsigned n = std::min(order_, den.order_);
  biseries q(n);
  const mpoly& d0 = den.rows_[0][0];
  // solve q*den = num degree by degree
  for (unsigned d = 0; d <= n; ++d)
    for (unsigned i = 0; i <= d; ++i) {
      unsigned j = d - i;
      mpoly acc = rows_[i][j];
      for (unsigned k = 0; k <= i; ++k)
        for (unsigned l = 0; l <= j; ++l) {
          if (k == i && l == j) continue;
          acc -= q.rows_[k][l] * den.rows_[i - k][j - l];
        }
      q.rows_[i][j] = acc.exact_div(d0);
    }
  return q;
}

std::string biseries::str() const {
  std::string out;
  for (unsigned i = 0; i <= order_; ++i)
    for (unsigned j = 0; i + j <= order_; ++j) {
      if (rows_[i][j].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + rows_[i][j].str() + ")";
      if (i > 0) out += "*u" + (i > 1 ? "^" + std::to_string(i) : "");
      if (j > 0) out += "*v" + (j > 1 ? "^" + std::to_string(j) : "");
    }
  return out.empty() ? "0" : out;
}

}  // namespace theta::ring
