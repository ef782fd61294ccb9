#include "theta/hodge.hpp"

#include <algorithm>

#include "theta/combinatorics.hpp"
#include "theta/error.hpp"
#include "theta/genus.hpp"
#include "theta/permutohedron.hpp"

namespace theta::hodge {

using ring::monomial;
using ring::mpoly;
using ring::symbol;

integer s_correction_closed(unsigned n, unsigned p) {
  if (p > n) throw precondition_error("s_correction_closed: need p <= n");
  rational inner(0);
  for (unsigned k = 0; k < p; ++k) {
    rational term(comb::binomial(n + 1, k));
    inner += (k % 2 == 0) ? term : rational(-term);
  }
  long diff = 2 * static_cast<long>(p) - static_cast<long>(n);
  rational lead = ratio(integer(diff), integer(n + 2)) *
                  rational(comb::binomial(n + 1, p));
  inner += (p % 2 == 0) ? lead : rational(-lead);
  rational pre(comb::binomial(n + 2, p + 1));
  if (p % 2 == 1) pre = -pre;
  return require_integral(pre * inner, "middle-row correction");
}

integer s_correction_oracle(unsigned n, unsigned p) {
  if (p > n) throw precondition_error("s_correction_oracle: need p <= n");
  // alternating sum of the off-middle Hodge numbers in column p, normalized
  // so that the middle entry comes out as A_{n+1,p} minus this value
  integer acc = 0;
  for (unsigned q = 0; q <= n; ++q) {
    if (p + q == n) continue;
    integer h = (p + q < n)
                    ? comb::binomial(n + 1, p) * comb::binomial(n + 1, q)
                    : comb::binomial(n + 1, p + 1) * comb::binomial(n + 1, q + 1);
    acc += (q % 2 == 0) ? h : integer(-h);
  }
  return (n - p) % 2 == 0 ? acc : integer(-acc);
}

integer hodge_number(unsigned n, unsigned p, unsigned q,
                     bool middle_via_oracle) {
  if (p > n || q > n)
    throw precondition_error("hodge_number: need p, q <= n");
  if (p + q < n) return comb::binomial(n + 1, p) * comb::binomial(n + 1, q);
  if (p + q > n)
    return comb::binomial(n + 1, p + 1) * comb::binomial(n + 1, q + 1);
  integer s = middle_via_oracle ? s_correction_oracle(n, p)
                                : s_correction_closed(n, p);
  return comb::eulerian(n + 1, p) - s;
}

hodge_diamond diamond(unsigned n, bool middle_via_oracle) {
  hodge_diamond d;
  d.n = n;
  d.h.assign(n + 1, std::vector<integer>(n + 1));
  d.betti.assign(2 * n + 1, integer(0));
  for (unsigned p = 0; p <= n; ++p)
    for (unsigned q = 0; q <= n; ++q) {
      d.h[p][q] = hodge_number(n, p, q, middle_via_oracle);
      d.betti[p + q] += d.h[p][q];
    }
  return d;
}

integer euler_char_theta(unsigned n) {
  integer e = comb::factorial(n + 1);
  return n % 2 == 0 ? e : integer(-e);
}

integer signature_theta(unsigned n) {
  if (n % 2 != 0)
    throw precondition_error(
        "signature_theta: defined here for even n only");
  integer power = pow_integer(integer(2), n + 2);
  rational value =
      ratio(power * (power - 1), integer(n + 2)) * comb::bernoulli(n + 2);
  integer tau = require_integral(value, "signature");
  integer alt = 0;
  for (unsigned k = 0; k <= n; ++k) {
    integer a = comb::eulerian(n + 1, k);
    alt += (k % 2 == 0) ? a : integer(-a);
  }
  if (alt != tau)
    throw formula_violation_error(
        "signature: Bernoulli form " + str(tau) +
        " disagrees with the alternating Eulerian sum " + str(alt));
  return tau;
}

integer hodge_xpi(unsigned n, unsigned p, unsigned q) {
  if (p > n || q > n) throw precondition_error("hodge_xpi: need p, q <= n");
  if (p != q) return 0;
  return comb::eulerian(n + 1, p);
}

duality_report duality(unsigned n) {
  duality_report rep;
  rep.n = n;
  for (unsigned k = 0; k <= n; ++k) {
    integer lhs = perm::toric_betti(n, k);
    integer chi = genus::chi_p(n, k);
    integer rhs = (n - k) % 2 == 0 ? chi : integer(-chi);
    rep.pairings.push_back({"b_" + std::to_string(2 * k) +
                                "(X) = (-1)^(n-k) chi^" + std::to_string(k) +
                                "(Theta)",
                            str(lhs), str(rhs), lhs == rhs});
  }
  mpoly poincare;
  for (unsigned k = 0; k <= n; ++k)
    poincare += mpoly(monomial(symbol::s(), 2 * k),
                      rational(perm::toric_betti(n, k)));
  mpoly chi_poly;
  for (unsigned p = 0; p <= n; ++p)
    chi_poly += mpoly(monomial(symbol::y(), p), rational(genus::chi_p(n, p)));
  mpoly substituted =
      chi_poly.subst(symbol::y(), -mpoly(monomial(symbol::s(), 2)));
  if (n % 2 == 1) substituted = -substituted;
  rep.pairings.push_back({"P(X, s) = (-1)^n chi_{-s^2}(Theta)",
                          poincare.str(), substituted.str(),
                          poincare == substituted});
  if (n % 2 == 0) {
    integer tau_lr = 0;
    for (unsigned k = 0; k <= n; ++k) {
      integer b = perm::toric_betti(n, k);
      tau_lr += (k % 2 == 0) ? b : integer(-b);
    }
    integer tau_theta = signature_theta(n);
    rep.pairings.push_back({"tau(X) via alternating even Betti sum = "
                            "tau(Theta)",
                            str(tau_lr), str(tau_theta), tau_lr == tau_theta});
  }
  rep.all_equal = std::all_of(rep.pairings.begin(), rep.pairings.end(),
                              [](const duality_pairing& p) { return p.equal; });
  return rep;
}

namespace {

std::string centered(const std::string& s, std::size_t width) {
  if (s.size() >= width) return s;
  std::size_t left = (width - s.size()) / 2;
  std::size_t right = width - s.size() - left;
  return std::string(left, ' ') + s + std::string(right, ' ');
}

}  // namespace

std::string diamond_text(const hodge_diamond& d) {
  unsigned n = d.n;
  std::size_t w = 1;
  for (const auto& row : d.h)
    for (const auto& e : row) w = std::max(w, str(e).size());
  std::size_t betti_w = 1;
  for (const auto& b : d.betti) betti_w = std::max(betti_w, str(b).size());
  std::string out;
  for (unsigned m = 0; m <= 2 * n; ++m) {
    unsigned pmax = std::min(m, n);
    unsigned pmin = m - pmax;  // = max(0, m-n)
    std::vector<std::string> cells(2 * n + 1, std::string(w, ' '));
    for (unsigned p = pmax, j = 0; j <= pmax - pmin; ++j, --p) {
      unsigned col = (m <= n ? n - m : m - n) + 2 * j;
      cells[col] = centered(str(d.h[p][m - p]), w);
    }
    std::string line;
    for (const auto& c : cells) {
      if (!line.empty()) line += " ";
      line += c;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    line.resize((w + 1) * (2 * n + 1) + 2, ' ');
    std::string b = str(d.betti[m]);
    line += std::string(betti_w - b.size(), ' ') + b;
    out += line + "\n";
  }
  return out;
}

std::string diamond_latex(const hodge_diamond& d) {
  unsigned n = d.n;
  std::string out = "\\[ \\begin{array}{*{" + std::to_string(2 * n + 1) +
                    "}{c}r}\n";
  for (unsigned m = 0; m <= 2 * n; ++m) {
    unsigned pmax = std::min(m, n);
    unsigned pmin = m - pmax;
    std::vector<std::string> cells(2 * n + 1);
    for (unsigned p = pmax, j = 0; j <= pmax - pmin; ++j, --p) {
      unsigned col = (m <= n ? n - m : m - n) + 2 * j;
      cells[col] = str(d.h[p][m - p]);
    }
    for (const auto& c : cells) out += c + " & ";
    out += "\\quad " + str(d.betti[m]) + " \\\\\n";
  }
  out += "\\end{array} \\]\n";
  return out;
}

}  // namespace theta::hodge
