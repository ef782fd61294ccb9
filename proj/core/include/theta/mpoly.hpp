#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "theta/numeric.hpp"
#include "theta/symbol.hpp"

namespace theta::ring {

struct factor {
  symbol sym;
  unsigned exp = 1;

  friend auto operator<=>(const factor&, const factor&) = default;
};

// Product of symbol powers.  Factors are kept sorted by symbol with
// exponents >= 1; the empty factor list is the unit monomial.
class monomial {
 public:
  monomial() = default;
  explicit monomial(const symbol& s, unsigned e = 1) {
    if (e > 0) factors_.push_back({s, e});
  }

  static monomial from_factors(std::vector<factor> fs);

  const std::vector<factor>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }
  unsigned total_degree() const;
  // sum of exp * grade over theta factors; scalars contribute 0
  unsigned grade() const;
  unsigned exponent_of(const symbol& s) const;

  monomial operator*(const monomial& o) const;
  bool divides(const monomial& o) const;
  // o / *this; caller must ensure divisibility
  monomial quotient_of(const monomial& o) const;

  std::string str() const;
  std::string latex() const;

  friend auto operator<=>(const monomial&, const monomial&) = default;

 private:
  std::vector<factor> factors_;
};

// Graded lexicographic term order: lower total degree first, ties broken by
// the exponent sequence over the fixed symbol order (a higher exponent on an
// earlier symbol makes the monomial larger).  Map iteration therefore runs
// ascending; printing walks it in reverse.
struct mono_less {
  bool operator()(const monomial& a, const monomial& b) const;
};

// Multivariate polynomial over the rationals with no stored zero
// coefficients, so equality of maps is equality of polynomials.
class mpoly {
 public:
  using term_map = std::map<monomial, rational, mono_less>;

  mpoly() = default;
  mpoly(long value) { add_term(monomial(), rational(value)); }
  mpoly(const integer& value) { add_term(monomial(), rational(value)); }
  mpoly(const rational& value) { add_term(monomial(), value); }
  mpoly(const symbol& s) { add_term(monomial(s), rational(1)); }
  mpoly(const monomial& m) { add_term(m, rational(1)); }
  mpoly(const monomial& m, const rational& c) { add_term(m, c); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
  }
  rational constant_term() const { return coeff(monomial()); }
  rational coeff(const monomial& m) const;
  const term_map& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  unsigned total_degree() const;  // 0 for the zero polynomial
  bool contains(const symbol& s) const;

  // leading term under the graded-lex order; polynomial must be nonzero
  const std::pair<const monomial, rational>& leading_term() const;

  mpoly& operator+=(const mpoly& o);
  mpoly& operator-=(const mpoly& o);
  mpoly& operator*=(const mpoly& o);

  friend mpoly operator+(mpoly a, const mpoly& b) { return a += b; }
  friend mpoly operator-(mpoly a, const mpoly& b) { return a -= b; }
  friend mpoly operator*(const mpoly& a, const mpoly& b);
  friend mpoly operator-(const mpoly& a);

  friend bool operator==(const mpoly&, const mpoly&) = default;

  mpoly pow(unsigned e) const;

  // Exact polynomial quotient; throws inexact_division_error (carrying the
  // remainder as witness) when *this is not a multiple of the divisor.
  mpoly exact_div(const mpoly& divisor) const;

  mpoly subst(const symbol& s, const mpoly& value) const;

  // theta grading: grade of a term is its monomial's grade
  unsigned max_grade() const;  // 0 for the zero polynomial
  bool is_homogeneous_of_grade(unsigned g) const;
  mpoly grade_part(unsigned g) const;
  mpoly truncate_grade(unsigned gmax) const;

  std::string str() const;
  std::string latex() const;

 private:
  void add_term(const monomial& m, const rational& c);

  term_map terms_;
};

}  // namespace theta::ring
