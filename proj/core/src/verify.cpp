#include "theta/verify.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "theta/biseries.hpp"
#include "theta/cobordism.hpp"
#include "theta/combinatorics.hpp"
#include "theta/error.hpp"
#include "theta/genus.hpp"
#include "theta/hodge.hpp"
#include "theta/permutohedron.hpp"
#include "theta/tlaurent.hpp"
#include "theta/tomei.hpp"

namespace theta::verify {

namespace {

using ring::biseries;
using ring::monomial;
using ring::mpoly;
using ring::symbol;
using ring::theta_poly;
using ring::xseries;

struct runner {
  options opts;
  std::ostream* progress = nullptr;
  std::vector<check_result> results;

  unsigned cap(unsigned hard) const {
    unsigned c = std::min(opts.n_max, hard);
    if (opts.fast) c = std::min(c, 4u);
    return c;
  }

  // body returns an empty string on success, a description on failure;
  // exceptions are failures too
  void check(const std::string& name, const std::string& anchor,
             const std::function<std::string()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    check_result r;
    r.name = name;
    r.anchor = anchor;
    try {
      r.detail = body();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              t0)
                    .count();
    if (progress) {
      std::ostringstream line;
      line.setf(std::ios::fixed);
      line.precision(2);
      line << (r.passed ? "[ ok ] " : "[FAIL] ") << r.name << " (" << r.anchor
           << ", " << r.seconds << "s)";
      if (!r.passed) line << "\n       " << r.detail;
      *progress << line.str() << "\n";
    }
    results.push_back(std::move(r));
  }
};

std::string mismatch(const std::string& where, const std::string& lhs,
                     const std::string& rhs) {
  return where + ": " + lhs + " != " + rhs;
}

mpoly random_poly(std::mt19937_64& rng) {
  static const symbol pool[6] = {symbol::s(), symbol::t(),
                                 symbol::b(), symbol::y(),
                                 symbol::theta(1), symbol::theta(2)};
  mpoly p;
  unsigned terms = 1 + rng() % 4;
  for (unsigned i = 0; i < terms; ++i) {
    std::vector<ring::factor> fs;
    unsigned vars = 1 + rng() % 2;
    for (unsigned j = 0; j < vars; ++j)
      fs.push_back({pool[rng() % 6], 1 + static_cast<unsigned>(rng() % 2)});
    long num = static_cast<long>(rng() % 19) - 9;
    long den = 1 + static_cast<long>(rng() % 4);
    p += mpoly(monomial::from_factors(std::move(fs)), ratio(num, den));
  }
  return p;
}

theta_poly random_theta_poly(std::mt19937_64& rng) {
  theta_poly p;
  unsigned terms = 1 + rng() % 3;
  for (unsigned i = 0; i < terms; ++i) {
    theta_poly mono(ratio(static_cast<long>(rng() % 9) - 4,
                          1 + static_cast<long>(rng() % 3)));
    unsigned vars = 1 + rng() % 2;
    for (unsigned j = 0; j < vars; ++j)
      mono = mono * theta_poly::generator(1 + rng() % 3);
    p += mono;
  }
  return p;
}

xseries random_series(std::mt19937_64& rng, unsigned order) {
  xseries a(order);
  for (unsigned k = 0; k <= order; ++k)
    if (rng() % 3 != 0) a.set_coeff(k, random_poly(rng));
  return a;
}

theta_poly expected_permutohedral_class(unsigned n) {
  theta_poly t1 = theta_poly::generator(1);
  theta_poly t2 = theta_poly::generator(2);
  theta_poly t3 = theta_poly::generator(3);
  switch (n) {
    case 1:
      return -t1;
    case 2:
      return t2;
    default:
      return ratio(1, 2) * t1.pow(3) - ratio(2, 3) * (t1 * t2) -
             ratio(5, 6) * t3;
  }
}

void run_combinatorics(runner& r) {
  r.check("eulerian numbers: recurrence vs explicit sum vs descent count",
          "expli", [&] {
            for (unsigned n = 1; n <= r.cap(9); ++n) {
              auto row = comb::eulerian_row(n);
              auto hist = comb::eulerian_by_descents(n);
              for (unsigned k = 0; k < n; ++k) {
                if (row[k] != comb::eulerian_by_formula(n, k))
                  return mismatch("explicit sum at (" + std::to_string(n) +
                                      "," + std::to_string(k) + ")",
                                  str(row[k]),
                                  str(comb::eulerian_by_formula(n, k)));
                if (row[k] != hist[k])
                  return mismatch("descent count at (" + std::to_string(n) +
                                      "," + std::to_string(k) + ")",
                                  str(row[k]), str(hist[k]));
              }
            }
            return std::string();
          });

  r.check("eulerian symmetry A(n,k) = A(n,n-1-k)", "expli", [&] {
    for (unsigned n = 1; n <= r.cap(12); ++n)
      for (unsigned k = 0; k < n; ++k)
        if (comb::eulerian(n, k) != comb::eulerian(n, n - 1 - k))
          return "asymmetric at (" + std::to_string(n) + "," +
                 std::to_string(k) + ")";
    return std::string();
  });

  r.check("eulerian row sums equal n!", "expli", [&] {
    for (unsigned n = 1; n <= r.cap(10); ++n) {
      integer total = 0;
      for (const auto& a : comb::eulerian_row(n)) total += a;
      if (total != comb::factorial(n))
        return mismatch("row sum at n=" + std::to_string(n), str(total),
                        str(comb::factorial(n)));
    }
    return std::string();
  });

  r.check("alternating eulerian row sum vanishes for even n", "tau", [&] {
    for (unsigned n = 2; n <= r.cap(10); n += 2) {
      integer alt = 0;
      auto row = comb::eulerian_row(n);
      for (unsigned k = 0; k < n; ++k)
        alt += (k % 2 == 0) ? row[k] : integer(-row[k]);
      if (alt != 0)
        return "nonzero alternating sum " + str(alt) +
               " at n=" + std::to_string(n);
    }
    return std::string();
  });

  r.check("ordered set partitions equal k! S(n,k)", "st", [&] {
    for (unsigned n = 1; n <= r.cap(9); ++n)
      for (unsigned k = 1; k <= n; ++k) {
        integer oracle = comb::ordered_set_partition_count(n, k);
        integer closed = comb::factorial(k) * comb::stirling2(n, k);
        if (oracle != closed)
          return mismatch("(" + std::to_string(n) + "," + std::to_string(k) +
                              ")",
                          str(oracle), str(closed));
      }
    return std::string();
  });

  r.check("bernoulli numbers: binomial recurrence and odd vanishing", "tau",
          [&] {
            for (unsigned m = 2; m <= 14; ++m) {
              rational acc = 0;
              for (unsigned k = 0; k < m; ++k)
                acc += rational(comb::binomial(m, k)) * comb::bernoulli(k);
              if (acc != 0)
                return "recurrence fails at m=" + std::to_string(m) + ": " +
                       str(acc);
            }
            for (unsigned k = 3; k <= 13; k += 2)
              if (comb::bernoulli(k) != 0)
                return "odd index " + std::to_string(k) + " is nonzero";
            return std::string();
          });
}

void run_permutohedron(runner& r) {
  r.check("face counts: Stirling closed form vs enumeration", "st", [&] {
    for (unsigned n = 0; n <= r.cap(7); ++n)
      if (!(perm::f_vector(n) == perm::face_oracle(n)))
        return "face vectors differ at n=" + std::to_string(n);
    return std::string();
  });

  r.check("h-polynomial coefficients equal the Eulerian row", "equalint", [&] {
    for (unsigned n = 0; n <= r.cap(10); ++n)
      if (perm::h_vector(n) != comb::eulerian_row(n + 1))
        return "rows differ at n=" + std::to_string(n);
    return std::string();
  });

  r.check("Dehn-Sommerville symmetry and f/h round-trip", "hf", [&] {
    for (unsigned n = 0; n <= r.cap(10); ++n) {
      auto h = perm::h_vector(n);
      for (unsigned k = 0; k <= n; ++k)
        if (h[k] != h[n - k])
          return "h-vector not palindromic at n=" + std::to_string(n);
      mpoly back = perm::h_poly(n).subst(
          symbol::s(), mpoly(symbol::s()) + mpoly(symbol::t()));
      if (!(back == perm::f_poly(n)))
        return "h(s+t,t) != f(s,t) at n=" + std::to_string(n);
    }
    return std::string();
  });

  r.check("vertex index histogram equals the h-vector", "Eul", [&] {
    std::mt19937_64 rng(r.opts.seed);
    for (unsigned n = 1; n <= r.cap(5); ++n) {
      auto expected = perm::h_vector(n);
      if (perm::vertex_index_oracle(n, perm::default_height(n)) != expected)
        return "default height fails at n=" + std::to_string(n);
      for (unsigned trial = 0; trial < 3; ++trial) {
        for (unsigned attempt = 0;; ++attempt) {
          std::vector<rational> h;
          for (unsigned i = 0; i <= n; ++i)
            h.push_back(rational(1 + rng() % 1000000));
          try {
            if (perm::vertex_index_oracle(n, h) != expected)
              return "random height fails at n=" + std::to_string(n);
            break;
          } catch (const theta::precondition_error&) {
            if (attempt > 20) throw;
          }
        }
      }
    }
    return std::string();
  });
}

void run_polyring(runner& r) {
  r.check("polynomial ring axioms on random values", "ring", [&] {
    std::mt19937_64 rng(r.opts.seed + 1);
    for (unsigned i = 0; i < 20; ++i) {
      mpoly a = random_poly(rng);
      mpoly b = random_poly(rng);
      mpoly c = random_poly(rng);
      if (!((a + b) + c == a + (b + c))) return std::string("+ associativity");
      if (!((a * b) * c == a * (b * c))) return std::string("* associativity");
      if (!(a * (b + c) == a * b + a * c)) return std::string("distributivity");
      if (!(a * b == b * a)) return std::string("* commutativity");
      if (!((a - a).is_zero())) return std::string("additive inverse");
    }
    return std::string();
  });

  r.check("exact division inverts multiplication", "ring", [&] {
    std::mt19937_64 rng(r.opts.seed + 2);
    for (unsigned i = 0; i < 20; ++i) {
      mpoly a = random_poly(rng);
      mpoly d = random_poly(rng);
      if (d.is_zero()) d = mpoly(symbol::s()) + mpoly(1);
      if (!((a * d).exact_div(d) == a)) return std::string("round trip broke");
    }
    return std::string();
  });

  r.check("series division inverts series multiplication", "ring", [&] {
    std::mt19937_64 rng(r.opts.seed + 3);
    for (unsigned i = 0; i < 10; ++i) {
      xseries q0 = random_series(rng, 6);
      xseries den = random_series(rng, 6);
      if (den.is_zero() || !den.coeff(0).is_zero())
        den.set_coeff(0, mpoly(symbol::t()) + mpoly(2));
      xseries num = q0 * den;
      if (num.is_zero()) continue;
      xseries q = num.divide(den);
      if (!(q * den == num.truncate(q.order())))
        return std::string("q*den != num");
    }
    return std::string();
  });

  r.check("truncation commutes with arithmetic and series building", "ring",
          [&] {
            std::mt19937_64 rng(r.opts.seed + 4);
            if (!(genus::h_gf(12).truncate(6) == genus::h_gf(6)))
              return std::string("h series truncation mismatch");
            if (!(genus::td_theta_gf(12).truncate(6) == genus::td_theta_gf(6)))
              return std::string("Todd series truncation mismatch");
            for (unsigned i = 0; i < 10; ++i) {
              xseries a = random_series(rng, 8);
              xseries b = random_series(rng, 8);
              if (!((a * b).truncate(4) == a.truncate(4) * b.truncate(4)))
                return std::string("product truncation mismatch");
            }
            return std::string();
          });

  r.check("formal group law composes the exponential", "FG", [&] {
    unsigned order = r.opts.fast ? 6 : 8;
    xseries beta = genus::h_gf(order);
    biseries bu = biseries::lift_u(beta, order);
    biseries bv = biseries::lift_v(beta, order);
    biseries bsum = biseries::lift_sum(beta, order);
    mpoly a = mpoly(symbol::s()) + mpoly(symbol::t());
    mpoly b = mpoly(symbol::s()) * mpoly(symbol::t());
    biseries cross = bu * bv;
    biseries num = bu + bv + biseries::constant(a, order) * cross;
    biseries den = biseries::constant(mpoly(1), order) -
                   biseries::constant(b, order) * cross;
    if (!(num.divide(den) == bsum))
      return std::string("F(beta(u),beta(v)) != beta(u+v)");
    return std::string();
  });
}

void run_genus(runner& r) {
  r.check("f-series at s -> -b reproduces the Todd series", "Rel", [&] {
    unsigned order = r.opts.fast ? 8 : 12;
    xseries lhs = genus::f_gf(order).subst(symbol::s(),
                                           -mpoly(symbol::b()));
    if (!(lhs == genus::td_theta_gf(order)))
      return std::string("series differ");
    return std::string();
  });

  r.check("h-series coefficients equal h-polynomials", "equal", [&] {
    xseries h = genus::h_gf(12);
    for (unsigned n = 0; n <= r.cap(10); ++n)
      if (!(genus::egf_coeff(h, n) == perm::h_poly(n)))
        return "coefficient differs at n=" + std::to_string(n);
    return std::string();
  });

  r.check("chi_y series is the h-series at (s,t) = (y,-1)", "equaly", [&] {
    xseries h = genus::h_gf(12);
    xseries chi = genus::chi_y_gf(12);
    for (unsigned n = 0; n <= r.cap(10); ++n) {
      mpoly specialized = genus::egf_coeff(h, n)
                              .subst(symbol::s(), mpoly(symbol::y()))
                              .subst(symbol::t(), mpoly(-1));
      if (!(specialized == genus::egf_coeff(chi, n)))
        return "mismatch at n=" + std::to_string(n);
    }
    return std::string();
  });

  r.check("chi^p values assemble the chi_y coefficients", "chip", [&] {
    xseries chi = genus::chi_y_gf(12);
    for (unsigned n = 0; n <= r.cap(8); ++n) {
      mpoly assembled;
      for (unsigned p = 0; p <= n; ++p)
        assembled += mpoly(monomial(symbol::y(), p),
                           rational(genus::chi_p(n, p)));
      if (!(assembled == genus::egf_coeff(chi, n)))
        return "mismatch at n=" + std::to_string(n);
    }
    return std::string();
  });

  r.check("genus evaluation is a ring homomorphism", "equal", [&] {
    std::mt19937_64 rng(r.opts.seed + 5);
    auto tdst = genus::todd_two_parameter();
    auto chi = genus::chi_y();
    for (unsigned i = 0; i < 10; ++i) {
      theta_poly a = random_theta_poly(rng);
      theta_poly b = random_theta_poly(rng);
      for (const auto& g : {tdst, chi})
        if (!(genus::evaluate(g, a * b) ==
              genus::evaluate(g, a) * genus::evaluate(g, b)))
          return "multiplicativity fails for " + g.name;
    }
    return std::string();
  });
}

void run_hodge(runner& r) {
  r.check("middle-row correction: closed form vs off-middle sum", "sum", [&] {
    for (unsigned n = 0; n <= r.cap(12); ++n)
      for (unsigned p = 0; p <= n; ++p)
        if (hodge::s_correction_closed(n, p) !=
            hodge::s_correction_oracle(n, p))
          return mismatch("(" + std::to_string(n) + "," + std::to_string(p) +
                              ")",
                          str(hodge::s_correction_closed(n, p)),
                          str(hodge::s_correction_oracle(n, p)));
    return std::string();
  });

  r.check("middle-row correction symmetry p <-> n-p", "sum", [&] {
    for (unsigned n = 0; n <= r.cap(12); ++n)
      for (unsigned p = 0; p <= n; ++p)
        if (hodge::s_correction_closed(n, p) !=
            hodge::s_correction_closed(n, n - p))
          return "asymmetric at (" + std::to_string(n) + "," +
                 std::to_string(p) + ")";
    return std::string();
  });

  r.check("middle-row Hodge numbers are nonnegative", "hpn", [&] {
    for (unsigned n = 0; n <= r.cap(12); ++n)
      for (unsigned p = 0; p <= n; ++p)
        if (hodge::hodge_number(n, p, n - p) < 0)
          return "negative at (" + std::to_string(n) + "," +
                 std::to_string(p) + ")";
    return std::string();
  });

  r.check("alternating column sums of the diamond give chi^p", "chip", [&] {
    for (unsigned n = 0; n <= r.cap(10); ++n)
      for (unsigned p = 0; p <= n; ++p) {
        integer acc = 0;
        for (unsigned q = 0; q <= n; ++q) {
          integer h = hodge::hodge_number(n, p, q);
          acc += (q % 2 == 0) ? h : integer(-h);
        }
        if (acc != genus::chi_p(n, p))
          return mismatch("(" + std::to_string(n) + "," + std::to_string(p) +
                              ")",
                          str(acc), str(genus::chi_p(n, p)));
      }
    return std::string();
  });

  r.check("diamond symmetries, Betti sums, Euler characteristic", "hpn", [&] {
    for (unsigned n = 0; n <= r.cap(10); ++n) {
      auto d = hodge::diamond(n);
      for (unsigned p = 0; p <= n; ++p)
        for (unsigned q = 0; q <= n; ++q) {
          if (d.h[p][q] != d.h[n - p][n - q])
            return "Serre duality fails at n=" + std::to_string(n);
          if (d.h[p][q] != d.h[q][p])
            return "Hodge symmetry fails at n=" + std::to_string(n);
        }
      integer alt = 0;
      for (unsigned m = 0; m <= 2 * n; ++m)
        alt += (m % 2 == 0) ? d.betti[m] : integer(-d.betti[m]);
      if (alt != hodge::euler_char_theta(n))
        return "Euler characteristic mismatch at n=" + std::to_string(n);
    }
    return std::string();
  });

  r.check("signature: Bernoulli form = alternating Eulerian = chi_y at y=1",
          "tau", [&] {
            for (unsigned n = 0; n <= r.cap(10); n += 2) {
              integer tau = hodge::signature_theta(n);
              integer chi_at_one = 0;
              for (unsigned p = 0; p <= n; ++p)
                chi_at_one += genus::chi_p(n, p);
              if (tau != chi_at_one)
                return mismatch("n=" + std::to_string(n), str(tau),
                                str(chi_at_one));
            }
            return std::string();
          });

  r.check("duality pairings between the toric variety and theta divisor",
          "relat1", [&] {
            for (unsigned n = 0; n <= r.cap(10); ++n)
              if (!hodge::duality(n).all_equal)
                return "pairing fails at n=" + std::to_string(n);
            return std::string();
          });
}

void run_cobordism(runner& r) {
  r.check("intersection classes are homogeneous of grade n-k", "123", [&] {
    for (unsigned n = 0; n <= r.cap(8); ++n)
      for (unsigned k = 0; k <= n; ++k)
        if (!cob::intersection_class(n, k).is_homogeneous_of_grade(n - k))
          return "inhomogeneous at (" + std::to_string(n) + "," +
                 std::to_string(k) + ")";
    return std::string();
  });

  r.check("Todd genus of intersections gives signed face counts", "rel", [&] {
    auto td = genus::todd();
    for (unsigned n = 0; n <= r.cap(8); ++n)
      for (unsigned k = 0; k <= n; ++k) {
        mpoly value = genus::evaluate(td, cob::intersection_class(n, k));
        integer expected =
            comb::factorial(k + 1) * comb::stirling2(n + 1, k + 1);
        if ((n - k) % 2 == 1) expected = -expected;
        if (!(value == mpoly(expected)))
          return mismatch("(" + std::to_string(n) + "," + std::to_string(k) +
                              ")",
                          value.str(), str(expected));
      }
    return std::string();
  });

  r.check("two-parameter Todd genus of theta classes gives h-polynomials",
          "equal", [&] {
            auto tdst = genus::todd_two_parameter();
            for (unsigned n = 0; n <= r.cap(8); ++n) {
              mpoly value =
                  genus::evaluate(tdst, cob::intersection_class(n, 0));
              if (!(value == perm::h_poly(n)))
                return "mismatch at n=" + std::to_string(n);
            }
            return std::string();
          });

  r.check("curve genus via the Todd path matches the closed form", "rel", [&] {
    for (unsigned n = 1; n <= r.cap(8); ++n) {
      integer g = cob::curve_genus(n);
      integer expected =
          1 + require_integral(ratio(integer(n) * comb::factorial(n + 1),
                                     integer(2)),
                               "closed-form curve genus");
      if (g != expected)
        return mismatch("n=" + std::to_string(n), str(g), str(expected));
    }
    return std::string();
  });

  r.check("permutohedral classes match the published values", "xpi3", [&] {
    for (unsigned n = 1; n <= std::min(r.cap(3), 3u); ++n) {
      auto rep = cob::class_independence_check(n, 2, r.opts.seed);
      if (!rep.all_equal)
        return "point dependence at n=" + std::to_string(n);
      if (!(rep.values[0] == expected_permutohedral_class(n)))
        return mismatch("n=" + std::to_string(n), rep.values[0].str(),
                        expected_permutohedral_class(n).str());
    }
    return std::string();
  });

  r.check("genus values of the permutohedral class", "duality", [&] {
    unsigned top = r.opts.fast ? 3 : r.cap(4);
    auto td = genus::todd();
    auto tdst = genus::todd_two_parameter();
    auto chi = genus::euler_characteristic();
    for (unsigned n = 1; n <= top; ++n) {
      theta_poly cls =
          cob::permutohedral_class(n, cob::random_point(n, r.opts.seed));
      if (!(genus::evaluate(td, cls) == mpoly(1)))
        return "Todd genus is not 1 at n=" + std::to_string(n);
      mpoly expected = perm::h_poly(n);
      if (n % 2 == 1) expected = -expected;
      if (!(genus::evaluate(tdst, cls) == expected))
        return "two-parameter Todd mismatch at n=" + std::to_string(n);
      if (!(genus::evaluate(chi, cls) == mpoly(comb::factorial(n + 1))))
        return "Euler characteristic mismatch at n=" + std::to_string(n);
    }
    return std::string();
  });
}

void run_tomei(runner& r) {
  r.check("Tomei/toric/theta Betti triples and signature chain", "chitX", [&] {
    for (unsigned n = 0; n <= r.cap(10); ++n)
      if (!tomei::triality(n).all_equal)
        return "triality fails at n=" + std::to_string(n);
    return std::string();
  });
}

}  // namespace

std::vector<check_result> run(const options& opts, std::ostream* progress) {
  runner r;
  r.opts = opts;
  r.progress = progress;
  run_combinatorics(r);
  run_permutohedron(r);
  run_polyring(r);
  run_genus(r);
  run_hodge(r);
  run_cobordism(r);
  run_tomei(r);
  return std::move(r.results);
}

bool all_passed(const std::vector<check_result>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

}  // namespace theta::verify
