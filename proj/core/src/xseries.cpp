#include "theta/xseries.hpp"

#include <algorithm>
#include <utility>

#include "theta/error.hpp"

namespace theta::ring {

xseries::xseries(std::vector<mpoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw precondition_error("xseries: coefficient list must be nonempty");
}

xseries xseries::constant(const mpoly& c, unsigned order) {
  xseries r(order);
  r.coeffs_[0] = c;
  return r;
}

xseries xseries::variable(unsigned order) {
  if (order < 1)
    throw precondition_error("xseries::variable: order must be >= 1");
  xseries r(order);
  r.coeffs_[1] = mpoly(1);
  return r;
}

xseries xseries::exp_linear(const mpoly& c, unsigned order) {
  xseries r(order);
  mpoly ck(1);
  r.coeffs_[0] = ck;
  for (unsigned k = 1; k <= order; ++k) {
    ck *= c;
    r.coeffs_[k] = ratio(integer(1), factorial(k)) * ck;
  }
  return r;
}

const mpoly& xseries::coeff(unsigned k) const {
  if (k >= coeffs_.size())
    throw precondition_error("xseries::coeff: index beyond truncation order");
  return coeffs_[k];
}

void xseries::set_coeff(unsigned k, mpoly c) {
  if (k >= coeffs_.size())
    throw precondition_error(
        "xseries::set_coeff: index beyond truncation order");
  coeffs_[k] = std::move(c);
}

bool xseries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const mpoly& c) { return c.is_zero(); });
}

unsigned xseries::low_trail() const {
  for (unsigned k = 0; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) return k;
  throw precondition_error("low_trail of the zero series");
}

xseries xseries::truncate(unsigned new_order) const {
  if (new_order > order())
    throw precondition_error("xseries::truncate: cannot extend the order");
  xseries r(new_order);
  std::copy(coeffs_.begin(), coeffs_.begin() + new_order + 1,
            r.coeffs_.begin());
  r.note_ = note_;
  return r;
}

xseries xseries::subst(const symbol& s, const mpoly& value) const {
  xseries r(order());
  for (unsigned k = 0; k <= order(); ++k)
    r.coeffs_[k] = coeffs_[k].subst(s, value);
  return r;
}

xseries xseries::truncate_grade(unsigned gmax) const {
  xseries r(order());
  for (unsigned k = 0; k <= order(); ++k)
    r.coeffs_[k] = coeffs_[k].truncate_grade(gmax);
  return r;
}

xseries operator+(const xseries& a, const xseries& b) {
  unsigned n = std::min(a.order(), b.order());
  xseries r(n);
  for (unsigned k = 0; k <= n; ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
  return r;
}

xseries operator-(const xseries& a, const xseries& b) {
  unsigned n = std::min(a.order(), b.order());
  xseries r(n);
  for (unsigned k = 0; k <= n; ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
  return r;
}

xseries operator*(const xseries& a, const xseries& b) {
  unsigned n = std::min(a.order(), b.order());
  xseries r(n);
  for (unsigned k = 0; k <= n; ++k) {
    mpoly acc;
    for (unsigned i = 0; i <= k; ++i) acc += a.coeffs_[i] * b.coeffs_[k - i];
    r.coeffs_[k] = std::move(acc);
  }
  return r;
}

xseries operator*(const mpoly& c, const xseries& a) {
  xseries r(a.order());
  for (unsigned k = 0; k <= a.order(); ++k) r.coeffs_[k] = c * a.coeffs_[k];
  return r;
}

xseries operator-(const xseries& a) {
  xseries r(a.order());
  for (unsigned k = 0; k <= a.order(); ++k) r.coeffs_[k] = -a.coeffs_[k];
  return r;
}

xseries xseries::pow(unsigned e) const {
  xseries acc = constant(mpoly(1), order());
  xseries base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

xseries xseries::divide(const xseries& den) const {
  if (den.is_zero())
    throw precondition_error("xseries::divide: zero denominator series");
  unsigned ell = den.low_trail();
  if (!is_zero() && low_trail() < ell)
    throw inexact_division_error(
        "xseries::divide: denominator vanishes to higher order in x than the "
        "numerator",
        "x^" + std::to_string(low_trail()) + " * (" +
            coeffs_[low_trail()].str() + ")");
  unsigned n = std::min(order(), den.order());
  if (n < ell)
    throw precondition_error(
        "xseries::divide: truncation order too small for the shared x power");
  unsigned qn = n - ell;
  xseries q(qn);
  const mpoly& d0 = den.coeffs_[ell];
  for (unsigned k = 0; k <= qn; ++k) {
    mpoly acc = coeffs_[k + ell];
    for (unsigned j = 0; j < k; ++j)
      acc -= q.coeffs_[j] * den.coeffs_[k - j + ell];
    q.coeffs_[k] = acc.exact_div(d0);
  }
  if (ell > 0)
    q.note_ = "cancelled a common factor x^" + std::to_string(ell) +
              " before dividing";
  return q;
}

std::string xseries::str() const {
  std::string out;
  for (unsigned k = 0; k <= order(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[k].str() + ")";
    if (k == 1)
      out += "*x";
    else if (k > 1)
      out += "*x^" + std::to_string(k);
  }
  if (out.empty()) return "0";
  return out + " + O(x^" + std::to_string(order() + 1) + ")";
}

}  // namespace theta::ring
