#include <doctest.h>

#include "theta/combinatorics.hpp"
#include "theta/error.hpp"
#include "theta/genus.hpp"
#include "theta/permutohedron.hpp"

using namespace theta;
using namespace theta::genus;
using theta::ring::monomial;
using theta::ring::mpoly;
using theta::ring::symbol;
using theta::ring::theta_poly;
using theta::ring::xseries;

namespace {
const mpoly S{symbol::s()};
const mpoly T{symbol::t()};
const mpoly B{symbol::b()};
const mpoly Y{symbol::y()};
}  // namespace

TEST_SUITE("genus") {

TEST_CASE("Todd series starts x - (b+t) x^2/2! ...") {
  xseries td = td_theta_gf(6);
  CHECK(td.coeff(0).is_zero());
  CHECK(td.coeff(1) == mpoly(1));
  // (n+1)! * coefficient = value on the n-divisor
  CHECK(egf_coeff(td, 0) == mpoly(1));
  CHECK(egf_coeff(td, 1) == 2 * T - B);
  CHECK(egf_coeff(td, 2) == B * B - 6 * B * T + 6 * T * T);
}

TEST_CASE("f-series coefficients are the face polynomials") {
  xseries f = f_gf(8);
  for (unsigned n = 0; n <= 6; ++n)
    CHECK(egf_coeff(f, n) == perm::f_poly(n));
}

TEST_CASE("h-series coefficients are the h-polynomials") {
  xseries h = h_gf(8);
  for (unsigned n = 0; n <= 6; ++n)
    CHECK(egf_coeff(h, n) == perm::h_poly(n));
}

TEST_CASE("substituting s -> -b into the f-series gives the Todd series") {
  CHECK(f_gf(10).subst(symbol::s(), -B) == td_theta_gf(10));
}

TEST_CASE("chi_y series matches the signed Eulerian polynomials") {
  xseries chi = chi_y_gf(8);
  // chi_y(theta^2): A_3 = (1,4,1) with signs (-1)^(2-p)
  CHECK(egf_coeff(chi, 2) == Y * Y - 4 * Y + 1);
  CHECK(egf_coeff(chi, 1) == Y - 1);
  for (unsigned n = 0; n <= 6; ++n) {
    mpoly expected;
    for (unsigned p = 0; p <= n; ++p)
      expected += mpoly(monomial(symbol::y(), p), rational(chi_p(n, p)));
    CHECK(egf_coeff(chi, n) == expected);
  }
}

TEST_CASE("chi^p values are signed Eulerian numbers") {
  CHECK(chi_p(2, 0) == 1);
  CHECK(chi_p(2, 1) == -4);
  CHECK(chi_p(3, 1) == 11);
  CHECK(chi_p(3, 0) == -1);
  CHECK(chi_p(4, 2) == 66);
  CHECK(chi_p(0, 0) == 1);
  CHECK_THROWS_AS((void)chi_p(2, 3), precondition_error);
}

TEST_CASE("egf_coeff demands enough retained orders") {
  CHECK_THROWS_AS((void)egf_coeff(h_gf(4), 6), precondition_error);
}

TEST_CASE("genus factories evaluate theta generators as documented") {
  theta_poly t1 = theta_poly::generator(1);
  theta_poly t2 = theta_poly::generator(2);
  theta_poly t3 = theta_poly::generator(3);

  auto td = todd();
  CHECK(evaluate(td, t1) == mpoly(-1));
  CHECK(evaluate(td, t2) == mpoly(1));
  CHECK(evaluate(td, t1 * t2) == mpoly(-1));

  auto tdst = todd_two_parameter();
  CHECK(evaluate(tdst, t1) == S + T);
  CHECK(evaluate(tdst, t2) == S * S + 4 * S * T + T * T);
  CHECK(evaluate(tdst, theta_poly(ratio(3, 1))) == mpoly(3));

  auto chi = chi_y();
  CHECK(evaluate(chi, t1) == Y - 1);
  CHECK(evaluate(chi, t2) == Y * Y - 4 * Y + 1);

  auto e = euler_characteristic();
  CHECK(evaluate(e, t1) == mpoly(-2));
  CHECK(evaluate(e, t2) == mpoly(6));
  CHECK(evaluate(e, t3) == mpoly(-24));
}

TEST_CASE("evaluation is linear and multiplicative") {
  theta_poly t1 = theta_poly::generator(1);
  theta_poly t2 = theta_poly::generator(2);
  auto tdst = todd_two_parameter();
  theta_poly a = ratio(1, 2) * t1 * t1 - t2;
  theta_poly b = t1 + ratio(2, 3) * t2;
  CHECK(evaluate(tdst, a + b) ==
        evaluate(tdst, a) + evaluate(tdst, b));
  CHECK(evaluate(tdst, a * b) ==
        evaluate(tdst, a) * evaluate(tdst, b));
}

TEST_CASE("published genus value: two-parameter Todd of the 3-class") {
  // Td_{s,t}(1/2 θ1^3 - 2/3 θ1 θ2 - 5/6 θ3) = -(s^3 + 11 s^2 t + 11 s t^2 + t^3)
  theta_poly t1 = theta_poly::generator(1);
  theta_poly t2 = theta_poly::generator(2);
  theta_poly cls = ratio(1, 2) * t1.pow(3) - ratio(2, 3) * (t1 * t2) -
                   ratio(5, 6) * theta_poly::generator(3);
  CHECK(evaluate(todd_two_parameter(), cls) == -perm::h_poly(3));
  CHECK(evaluate(todd(), cls) == mpoly(1));
  CHECK(evaluate(euler_characteristic(), cls) == mpoly(24));
}

}  // TEST_SUITE
