#include "theta/tlaurent.hpp"

#include <algorithm>
#include <utility>

#include "theta/error.hpp"

namespace theta::ring {

const theta_poly tlaurent::zero_{};

tlaurent::tlaurent(int lo, int hi, unsigned grade_cap)
    : lo_(lo), hi_(hi), grade_cap_(grade_cap) {
  if (lo > hi)
    throw precondition_error("tlaurent: window lower bound above upper bound");
  coeffs_.resize(static_cast<std::size_t>(hi - lo) + 1);
}

tlaurent tlaurent::term(int e, theta_poly c, unsigned grade_cap) {
  tlaurent r(e, e, grade_cap);
  r.set_coeff(e, std::move(c));
  return r;
}

const theta_poly& tlaurent::coeff(int e) const {
  if (e < lo_ || e > hi_) return zero_;
  return coeffs_[static_cast<std::size_t>(e - lo_)];
}

void tlaurent::set_coeff(int e, theta_poly c) {
  if (e < lo_ || e > hi_)
    throw precondition_error("tlaurent::set_coeff: exponent outside window");
  coeffs_[static_cast<std::size_t>(e - lo_)] = c.truncate_grade(grade_cap_);
}

bool tlaurent::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool tlaurent::principal_part_is_zero() const {
  for (int e = lo_; e < 0 && e <= hi_; ++e)
    if (!coeff(e).is_zero()) return false;
  return true;
}

std::vector<int> tlaurent::principal_exponents() const {
  std::vector<int> out;
  for (int e = lo_; e < 0 && e <= hi_; ++e)
    if (!coeff(e).is_zero()) out.push_back(e);
  return out;
}

tlaurent operator+(const tlaurent& a, const tlaurent& b) {
  if (a.grade_cap_ != b.grade_cap_)
    throw precondition_error("tlaurent: adding values with different caps");
  tlaurent r(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_), a.grade_cap_);
  for (int e = r.lo_; e <= r.hi_; ++e)
    r.coeffs_[static_cast<std::size_t>(e - r.lo_)] = a.coeff(e) + b.coeff(e);
  return r;
}

tlaurent operator*(const tlaurent& a, const tlaurent& b) {
  if (a.grade_cap_ != b.grade_cap_)
    throw precondition_error(
        "tlaurent: multiplying values with different caps");
  tlaurent r(a.lo_ + b.lo_, a.hi_ + b.hi_, a.grade_cap_);
  for (int i = a.lo_; i <= a.hi_; ++i) {
    const theta_poly& ci = a.coeff(i);
    if (ci.is_zero()) continue;
    for (int j = b.lo_; j <= b.hi_; ++j) {
      const theta_poly& cj = b.coeff(j);
      if (cj.is_zero()) continue;
      r.coeffs_[static_cast<std::size_t>(i + j - r.lo_)] +=
          mul_capped(ci, cj, r.grade_cap_);
    }
  }
  return r;
}

tlaurent tlaurent::restrict_window(int new_lo, int new_hi) const {
  for (int e = lo_; e < new_lo && e <= hi_; ++e)
    if (!coeff(e).is_zero())
      throw truncation_error(
          "tlaurent::restrict_window: nonzero coefficient at t^" +
          std::to_string(e) + " below the new window: " + coeff(e).str());
  tlaurent r(new_lo, new_hi, grade_cap_);
  for (int e = new_lo; e <= new_hi; ++e) {
    if (e < lo_ || e > hi_) continue;
    r.coeffs_[static_cast<std::size_t>(e - new_lo)] = coeff(e);
  }
  return r;
}

std::string tlaurent::str() const {
  std::string out;
  for (int e = lo_; e <= hi_; ++e) {
    const theta_poly& c = coeff(e);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    if (e != 0) out += "*t^" + std::to_string(e);
  }
  return out.empty() ? "0" : out;
}

}  // namespace theta::ring
