#include "theta/mpoly.hpp"

#include <algorithm>
#include <utility>

#include "theta/error.hpp"

namespace theta::ring {

monomial monomial::from_factors(std::vector<factor> fs) {
  std::sort(fs.begin(), fs.end(),
            [](const factor& a, const factor& b) { return a.sym < b.sym; });
  monomial m;
  for (const auto& f : fs) {
    if (f.exp == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().sym == f.sym)
      m.factors_.back().exp += f.exp;
    else
      m.factors_.push_back(f);
  }
  return m;
}

unsigned monomial::total_degree() const {
  unsigned d = 0;
  for (const auto& f : factors_) d += f.exp;
  return d;
}

unsigned monomial::grade() const {
  unsigned g = 0;
  for (const auto& f : factors_) g += f.exp * f.sym.grade();
  return g;
}

unsigned monomial::exponent_of(const symbol& s) const {
  for (const auto& f : factors_)
    if (f.sym == s) return f.exp;
  return 0;
}

monomial monomial::operator*(const monomial& o) const {
  monomial r;
  auto i = factors_.begin();
  auto j = o.factors_.begin();
  while (i != factors_.end() && j != o.factors_.end()) {
    if (i->sym < j->sym)
      r.factors_.push_back(*i++);
    else if (j->sym < i->sym)
      r.factors_.push_back(*j++);
    else {
      r.factors_.push_back({i->sym, i->exp + j->exp});
      ++i;
      ++j;
    }
  }
  r.factors_.insert(r.factors_.end(), i, factors_.end());
  r.factors_.insert(r.factors_.end(), j, o.factors_.end());
  return r;
}

bool monomial::divides(const monomial& o) const {
  for (const auto& f : factors_)
    if (o.exponent_of(f.sym) < f.exp) return false;
  return true;
}

monomial monomial::quotient_of(const monomial& o) const {
  std::vector<factor> fs;
  for (const auto& f : o.factors_) {
    unsigned e = exponent_of(f.sym);
    if (f.exp > e) fs.push_back({f.sym, f.exp - e});
  }
  return from_factors(std::move(fs));
}

std::string monomial::str() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += "*";
    out += f.sym.name();
    if (f.exp > 1) out += "^" + std::to_string(f.exp);
  }
  return out;
}

std::string monomial::latex() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += " ";
    out += f.sym.latex();
    if (f.exp > 1) out += "^{" + std::to_string(f.exp) + "}";
  }
  return out;
}

bool mono_less::operator()(const monomial& a, const monomial& b) const {
  unsigned da = a.total_degree();
  unsigned db = b.total_degree();
  if (da != db) return da < db;
  // equal degree: lexicographic on the exponent sequence over the symbol
  // order; a positive exponent on an earlier symbol wins
  auto i = a.factors().begin();
  auto j = b.factors().begin();
  while (i != a.factors().end() && j != b.factors().end()) {
    if (i->sym < j->sym) return false;  // a is lex-larger
    if (j->sym < i->sym) return true;
    if (i->exp != j->exp) return i->exp < j->exp;
    ++i;
    ++j;
  }
  return i == a.factors().end() && j != b.factors().end();
}

void mpoly::add_term(const monomial& m, const rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

rational mpoly::coeff(const monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? rational(0) : it->second;
}

unsigned mpoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.total_degree();
}

bool mpoly::contains(const symbol& s) const {
  for (const auto& [m, c] : terms_)
    if (m.exponent_of(s) > 0) return true;
  return false;
}

const std::pair<const monomial, rational>& mpoly::leading_term() const {
  if (terms_.empty())
    throw precondition_error("leading_term of the zero polynomial");
  return *terms_.rbegin();
}

mpoly& mpoly::operator+=(const mpoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

mpoly& mpoly::operator-=(const mpoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

mpoly operator*(const mpoly& a, const mpoly& b) {
  mpoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

mpoly& mpoly::operator*=(const mpoly& o) { return *this = *this * o; }

mpoly operator-(const mpoly& a) {
  mpoly r;
  for (const auto& [m, c] : a.terms_) r.add_term(m, -c);
  return r;
}

mpoly mpoly::pow(unsigned e) const {
  mpoly acc(1);
  mpoly base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return acc;
}

mpoly mpoly::exact_div(const mpoly& divisor) const {
  if (divisor.is_zero())
    throw precondition_error("exact_div: division by the zero polynomial");
  mpoly q;
  mpoly rem;
  mpoly r = *this;
  const auto& [dm, dc] = divisor.leading_term();
  while (!r.is_zero()) {
    const auto& [lm, lc] = r.leading_term();
    if (dm.divides(lm)) {
      monomial qm = dm.quotient_of(lm);
      rational qc = lc / dc;
      q.add_term(qm, qc);
      r -= mpoly(qm, qc) * divisor;
    } else {
      rem.add_term(lm, lc);
      r -= mpoly(lm, lc);
    }
  }
  if (!rem.is_zero())
    throw inexact_division_error("exact_div: division left a remainder",
                                 rem.str());
  return q;
}

mpoly mpoly::subst(const symbol& s, const mpoly& value) const {
  mpoly acc;
  std::vector<mpoly> powers = {mpoly(1)};  // powers[e] = value^e
  for (const auto& [m, c] : terms_) {
    unsigned e = 0;
    std::vector<factor> rest;
    for (const auto& f : m.factors()) {
      if (f.sym == s)
        e = f.exp;
      else
        rest.push_back(f);
    }
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    acc += mpoly(monomial::from_factors(std::move(rest)), c) * powers[e];
  }
  return acc;
}

unsigned mpoly::max_grade() const {
  unsigned g = 0;
  for (const auto& [m, c] : terms_) g = std::max(g, m.grade());
  return g;
}

bool mpoly::is_homogeneous_of_grade(unsigned g) const {
  for (const auto& [m, c] : terms_)
    if (m.grade() != g) return false;
  return true;
}

mpoly mpoly::grade_part(unsigned g) const {
  mpoly r;
  for (const auto& [m, c] : terms_)
    if (m.grade() == g) r.add_term(m, c);
  return r;
}

mpoly mpoly::truncate_grade(unsigned gmax) const {
  mpoly r;
  for (const auto& [m, c] : terms_)
    if (m.grade() <= gmax) r.add_term(m, c);
  return r;
}

std::string mpoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const rational& c = it->second;
    bool negative = c < 0;
    rational a = negative ? rational(-c) : c;
    std::string body;
    if (it->first.is_unit())
      body = theta::str(a);
    else if (a == 1)
      body = it->first.str();
    else
      body = theta::str(a) + "*" + it->first.str();
    if (out.empty())
      out = (negative ? "-" : "") + body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out;
}

std::string mpoly::latex() const {
  if (terms_.empty()) return "0";
  auto coeff_latex = [](const rational& a) {
    if (a.get_den() == 1) return a.get_num().get_str();
    return "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() +
           "}";
  };
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const rational& c = it->second;
    bool negative = c < 0;
    rational a = negative ? rational(-c) : c;
    std::string body;
    if (it->first.is_unit())
      body = coeff_latex(a);
    else if (a == 1)
      body = it->first.latex();
    else
      body = coeff_latex(a) + " " + it->first.latex();
    if (out.empty())
      out = (negative ? "-" : "") + body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out;
}

}  // namespace theta::ring
