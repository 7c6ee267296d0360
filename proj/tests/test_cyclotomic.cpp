#include <doctest.h>

#include <cmath>
#include <random>

#include "siegel/cyclotomic.hpp"
#include "siegel/error.hpp"
#include "siegel/matrix_text.hpp"

using namespace siegel;

namespace {

std::vector<Rational> raw(int n, std::initializer_list<std::pair<int, int>> terms) {
  std::vector<Rational> v(static_cast<size_t>(n));
  for (auto [k, c] : terms) v[static_cast<size_t>(k)] += c;
  return v;
}

CycNum random_element(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4), exp(0, n - 1);
  CycNum x(n);
  for (int t = 0; t < 3; ++t)
    x += CycNum::root_of_unity(n, exp(rng)).scaled(Rational(num(rng), den(rng)));
  return x;
}

}  // namespace

TEST_CASE("reduction modulo the cyclotomic polynomial") {
  CHECK(cyc_reduce(4, raw(4, {{2, 1}})) == CycNum(4, -1));
  CHECK(cyc_reduce(4, raw(4, {{2, 1}})).coeffs() == std::vector<Rational>{-1, 0});
  CHECK(cyc_reduce(3, raw(3, {{1, 1}, {2, 1}})) == CycNum(3, -1));
  std::vector<Rational> five(6);
  five[5] = 1;
  CHECK(cyc_reduce(5, five) == CycNum(5, 1));
  CHECK_THROWS_AS(CycNum(0), Error);
  try {
    cyc_reduce(0, {});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidConductor);
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(5) == std::vector<long long>{1, 1, 1, 1, 1});
  for (int n = 1; n <= 30; ++n) CHECK(static_cast<int>(cyclotomic_polynomial(n).size()) == euler_phi(n) + 1);
}

TEST_CASE("conjugation") {
  CHECK(CycNum::root_of_unity(5, 1).conj() == CycNum::root_of_unity(5, 4));
  CHECK(CycNum(7, -1).conj() == CycNum(7, -1));
  const auto z3 = CycNum::root_of_unity(3, 1);
  CHECK(z3.conj() + z3 == CycNum(3, -1));
  const auto i = CycNum::imaginary_unit(4);
  CHECK(i * i == CycNum(4, -1));
  CHECK(i.conj() == -i);
}

TEST_CASE("conjugation is a field automorphism") {
  std::mt19937 rng(7);
  for (int n : {3, 4, 5, 8, 12, 15, 20}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto x = random_element(rng, n), y = random_element(rng, n);
      CHECK((x * y).conj() == x.conj() * y.conj());
      CHECK((x + y).conj() == x.conj() + y.conj());
      CHECK(x.conj().conj() == x);
      CHECK((x + x.conj()).is_real());
      if (!x.is_zero()) CHECK(x * x.inverse() == CycNum(n, 1));
    }
  }
}

TEST_CASE("float embedding agrees with exact arithmetic") {
  std::mt19937 rng(11);
  for (int n : {3, 4, 5, 12, 20}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto x = random_element(rng, n), y = random_element(rng, n);
      for (int unit : {1, n - 1}) {
        CHECK(std::abs((x * y).embed(unit) - x.embed(unit) * y.embed(unit)) < 1e-9);
        CHECK(std::abs((x + y).embed(unit) - x.embed(unit) - y.embed(unit)) < 1e-9);
      }
    }
  }
}

TEST_CASE("real and imaginary parts") {
  const auto z5 = CycNum::root_of_unity(5, 1);
  const auto re = real_part(z5), im = imag_part(z5);
  CHECK(re.conductor() == 20);
  CHECK(re.is_real());
  CHECK(im.is_real());
  CHECK(re + CycNum::imaginary_unit(20) * im == z5.lift(20));
  CHECK(std::abs(re.embed().real() - std::cos(2 * M_PI / 5)) < 1e-12);
  CHECK(sign(re) == 1);
  CHECK(sign(real_part(CycNum::root_of_unity(5, 2))) == -1);
  CHECK(sign(CycNum(4)) == 0);
}

TEST_CASE("mixed conductors meet in the lcm field") {
  const auto a = CycNum::root_of_unity(3, 1), b = CycNum::root_of_unity(4, 1);
  CHECK((a * b).conductor() == 12);
  CHECK(a * b == CycNum::root_of_unity(12, 7));
  CHECK(CycNum::root_of_unity(6, 2) == CycNum::root_of_unity(3, 1));
}

TEST_CASE("scalar text") {
  CHECK(parse_scalar("z4^3") == CycNum::root_of_unity(4, 3));
  CHECK(parse_scalar("-1") == CycNum(1, -1));
  CHECK(parse_scalar("1/2*z12^2-z12") ==
        CycNum::root_of_unity(12, 2).scaled(Rational(1, 2)) - CycNum::root_of_unity(12, 1));
  CHECK(parse_scalar("i") == CycNum::imaginary_unit(4));
  CHECK(to_string(CycNum::root_of_unity(4, 3)) == "z4^3");
  CHECK(to_string(CycNum::root_of_unity(12, 4)) == "z3");
  CHECK(to_string(CycNum(5, Rational(-3, 2))) == "-3/2");
  CHECK_THROWS_AS(parse_scalar("z4^"), Error);
}

TEST_CASE("matrices") {
  const auto m = parse_matrix("[[0, 1], [z4, 0]]");
  CHECK(m.conductor() == 4);
  CHECK(m.adjoint() * m == CycMatrix::identity(2, 4));
  CHECK(format_matrix(parse_matrix("diag(z3^2,z3^2,z3)")) == "diag(z3^2,z3^2,z3)");
  CHECK(parse_matrix(format_matrix(m)) == m);
  CHECK(m.trace().is_zero());
}
