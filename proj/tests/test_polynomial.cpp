#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "nistab/errors.hpp"
#include "nistab/polynomial.hpp"

using namespace nistab;

TEST_CASE("construction stores ascending coefficients and trims high zeros") {
  Polynomial p({1.0, 2.0, 3.0});
  CHECK(p.degree() == 2);
  CHECK(p.leading() == 3.0);
  CHECK(p.coeffs() == std::vector<double>{1.0, 2.0, 3.0});

  CHECK(Polynomial({1.0, 2.0, 0.0}) == Polynomial({1.0, 2.0}));
  CHECK(Polynomial({0.0, 0.0}).is_zero());
  CHECK(Polynomial::zero().degree() == -1);
  CHECK(Polynomial::constant(5.0).degree() == 0);
}

TEST_CASE("evaluation matches Horner expansion") {
  Polynomial p({1.0, -2.0, 0.0, 4.0});  // 1 - 2s + 4s^3
  CHECK(p.eval(2.0) == doctest::Approx(1 - 4 + 32).epsilon(1e-15));
  const Complex v = p.eval(Complex(0.0, 1.0));
  CHECK(std::abs(v - (Complex(1.0, -2.0) + Complex(0.0, -4.0))) < 1e-15);
  CHECK(Polynomial::zero().eval(3.0) == 0.0);
}

TEST_CASE("arithmetic agrees with expanded products") {
  Polynomial a({1.0, 1.0});  // s + 1
  Polynomial b({2.0, 1.0});  // s + 2
  CHECK(a * b == Polynomial({2.0, 3.0, 1.0}));
  CHECK(a + b == Polynomial({3.0, 2.0}));
  CHECK(a - a == Polynomial::zero());
  CHECK(a * 3.0 == Polynomial({3.0, 3.0}));
  CHECK(-a == Polynomial({-1.0, -1.0}));
  CHECK((a * Polynomial::zero()).is_zero());
}

TEST_CASE("derivative follows the power rule") {
  Polynomial p({5.0, 1.0, 3.0, 2.0});
  CHECK(p.derivative() == Polynomial({1.0, 6.0, 6.0}));
  CHECK(Polynomial::constant(7.0).derivative().is_zero());
  CHECK(Polynomial::zero().derivative().is_zero());
}

TEST_CASE("roots of factored polynomials match the factors") {
  // (s + 1)(s - 2)(s + 3) = s^3 + 2s^2 - 5s - 6
  Polynomial p({-6.0, -5.0, 2.0, 1.0});
  auto rts = roots(p);
  REQUIRE(rts.size() == 3);
  std::vector<double> re;
  for (Complex r : rts) {
    CHECK(std::abs(r.imag()) < 1e-9);
    re.push_back(r.real());
  }
  std::sort(re.begin(), re.end());
  CHECK(re[0] == doctest::Approx(-3.0).epsilon(1e-10));
  CHECK(re[1] == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(re[2] == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("roots of s^2 + 1 sit on the imaginary axis") {
  auto rts = roots(Polynomial({1.0, 0.0, 1.0}));
  REQUIRE(rts.size() == 2);
  for (Complex r : rts) {
    CHECK(std::abs(r.real()) < 1e-12);
    CHECK(std::abs(std::abs(r.imag()) - 1.0) < 1e-12);
  }
}

TEST_CASE("roots throws on the zero polynomial and is empty for constants") {
  CHECK_THROWS_AS(roots(Polynomial::zero()), Error);
  CHECK(roots(Polynomial::constant(4.0)).empty());
}

TEST_CASE("random polynomials evaluate to zero at every reported root") {
  std::mt19937 rng(20240901);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int deg = 1 + static_cast<int>(rng() % 6);
    std::vector<double> c(deg + 1);
    for (double& v : c) v = coef(rng);
    if (std::abs(c.back()) < 0.1) c.back() = 1.0;
    Polynomial p(c);
    double scale = 0;
    for (double v : c) scale = std::max(scale, std::abs(v));
    for (Complex r : roots(p)) {
      const double grow = std::pow(std::max(1.0, std::abs(r)), p.degree());
      CHECK(std::abs(p.eval(r)) < 1e-8 * scale * grow);
    }
  }
}

TEST_CASE("cluster_roots merges repeated roots and keeps separated ones apart") {
  // Double roots scatter like sqrt(eps) under the companion solver, inside
  // the default radius.
  Polynomial dbl({1.0, 2.0, 1.0});  // (s + 1)^2
  auto cld = cluster_roots(dbl, roots(dbl));
  REQUIRE(cld.size() == 1);
  CHECK(cld[0].multiplicity == 2);

  // Triple roots scatter like eps^(1/3), beyond the default radius; callers
  // probing higher multiplicities pass a coarser one.
  Polynomial triple({1.0, 3.0, 3.0, 1.0});  // (s + 1)^3
  auto cl = cluster_roots(triple, roots(triple), 1e-4);
  REQUIRE(cl.size() == 1);
  CHECK(cl[0].multiplicity == 3);
  CHECK(std::abs(cl[0].value - Complex(-1.0, 0.0)) < 1e-3);

  Polynomial sep({2.0, 3.0, 1.0});  // roots -1, -2
  auto cl2 = cluster_roots(sep, roots(sep));
  REQUIRE(cl2.size() == 2);
  CHECK(cl2[0].multiplicity == 1);
  CHECK(cl2[1].multiplicity == 1);
  CHECK_FALSE(cl2[0].ill_conditioned);
  CHECK_FALSE(cl2[1].ill_conditioned);
}

TEST_CASE("cluster condition number flags nearly repeated roots") {
  // (s + 1)(s + 1 + 1e-9): the pair clusters at the default tolerance and is
  // reported ill conditioned relative to a well separated pair.
  Polynomial near = Polynomial({1.0, 1.0}) * Polynomial({1.0 + 1e-9, 1.0});
  auto cl = cluster_roots(near, roots(near));
  bool flagged = false;
  for (const auto& c : cl)
    if (c.multiplicity > 1 || c.ill_conditioned) flagged = true;
  CHECK(flagged);
}
