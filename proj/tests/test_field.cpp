#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "coxgrowth/error.hpp"
#include "coxgrowth/field.hpp"

using namespace coxgrowth;

namespace {

std::vector<Int> ipoly(std::initializer_list<long> cs) {
  std::vector<Int> p;
  for (long c : cs) p.emplace_back(c);
  return p;
}

double eval_double(const std::vector<Int>& p, double x) {
  double acc = 0;
  for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k)
    acc = acc * x + p[k].get_d();
  return acc;
}

unsigned phi(unsigned n) {
  unsigned r = n;
  for (unsigned p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      r -= r / p;
      while (n % p == 0) n /= p;
    }
  if (n > 1) r -= r / n;
  return r;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == ipoly({-1, 1}));
  CHECK(cyclotomic_polynomial(2) == ipoly({1, 1}));
  CHECK(cyclotomic_polynomial(6) == ipoly({1, -1, 1}));
  CHECK(cyclotomic_polynomial(12) == ipoly({1, 0, -1, 0, 1}));
}

TEST_CASE("minimal polynomial of 2cos(pi/L): known small cases") {
  CHECK(minimal_polynomial_2cos(1) == ipoly({2, 1}));
  CHECK(minimal_polynomial_2cos(2) == ipoly({0, 1}));
  CHECK(minimal_polynomial_2cos(3) == ipoly({-1, 1}));
  CHECK(minimal_polynomial_2cos(4) == ipoly({-2, 0, 1}));
  CHECK(minimal_polynomial_2cos(5) == ipoly({-1, -1, 1}));
  CHECK(minimal_polynomial_2cos(6) == ipoly({-3, 0, 1}));
}

TEST_CASE("minimal polynomial: degree phi(2L)/2 and numeric root") {
  for (unsigned L = 2; L <= 30; ++L) {
    auto p = minimal_polynomial_2cos(L);
    CHECK(p.size() - 1 == phi(2 * L) / 2);
    CHECK(p.back() == 1);  // monic
    double c = 2.0 * std::cos(std::numbers::pi / L);
    CHECK(std::abs(eval_double(p, c)) < 1e-8);
  }
}

TEST_CASE("generator enclosure: certified and narrow") {
  for (unsigned L : {4u, 5u, 7u, 12u, 60u}) {
    auto f = NumberField::make(L);
    Rat w(1, 1);
    for (int i = 0; i < 60; ++i) w /= 2;
    auto [lo, hi] = f->generator_enclosure(w);
    CHECK(hi - lo <= w);
    // get_d rounding can land on either side of a 2^-60 enclosure.
    double c = 2.0 * std::cos(std::numbers::pi / L);
    CHECK(lo.get_d() - 1e-12 <= c);
    CHECK(c <= hi.get_d() + 1e-12);
  }
}

TEST_CASE("field instances are shared per level") {
  CHECK(NumberField::make(12) == NumberField::make(12));
}

TEST_CASE("exact arithmetic identities") {
  auto f4 = NumberField::make(4);
  FieldElement c = FieldElement::generator(f4);
  CHECK(c * c == FieldElement(2));  // (sqrt 2)^2
  CHECK((c + (-c)).is_zero());
  CHECK((c * FieldElement(0)).is_zero());

  auto f5 = NumberField::make(5);
  FieldElement g = FieldElement::generator(f5);
  CHECK(g * g == g + FieldElement(1));  // golden ratio relation
  // (g - 1) is the inverse of g: g(g-1) = g^2 - g = 1
  CHECK(g * (g - FieldElement(1)) == FieldElement(1));
}

TEST_CASE("sign determination") {
  CHECK(FieldElement(0).sign() == 0);
  CHECK(FieldElement(Rat(-3, 7)).sign() == -1);

  auto f5 = NumberField::make(5);
  FieldElement g = FieldElement::generator(f5);  // 2cos(pi/5) ~ 1.618
  CHECK((g - FieldElement(1)).sign() == 1);

  auto f7 = NumberField::make(7);
  FieldElement c7 = FieldElement::generator(f7);
  FieldElement minus_cos = -(FieldElement(Rat(1, 2)) * c7);  // -cos(pi/7)
  CHECK(minus_cos.sign() == -1);
  // exact zero after cancellation
  CHECK((c7 * c7 - c7 * c7).sign() == 0);
}

TEST_CASE("two_cos_pi_over embeds lower levels") {
  auto f12 = NumberField::make(12);
  FieldElement c3 = two_cos_pi_over(f12, 3);
  CHECK(c3 == FieldElement(1));
  FieldElement c4 = two_cos_pi_over(f12, 4);
  CHECK(c4 * c4 == FieldElement(2));
  FieldElement c6 = two_cos_pi_over(f12, 6);
  CHECK(c6 * c6 == FieldElement(3));
  FieldElement c2 = two_cos_pi_over(f12, 2);
  CHECK(c2.is_zero());
}

TEST_CASE("decimal rendering") {
  auto f4 = NumberField::make(4);
  FieldElement c = FieldElement::generator(f4);
  CHECK(c.decimal(20).substr(0, 12) == "1.4142135623");
  CHECK(FieldElement(Rat(1, 4)).decimal(10) == "0.25");
  CHECK(c.exact_string() == "c");
  CHECK((FieldElement(1) - c).exact_string() == "1 - c");
}

TEST_CASE("serialization is canonical across representations") {
  auto f4 = NumberField::make(4);
  FieldElement zero_f = FieldElement::generator(f4) * FieldElement(0);
  CHECK(zero_f.is_zero());
  FieldElement plain(3), lifted = FieldElement(3) + zero_f;
  CHECK(plain == lifted);
  std::string a, b;
  plain.serialize(a);
  lifted.serialize(b);
  CHECK(a == b);
}

TEST_CASE("canonical order is total and consistent") {
  auto f5 = NumberField::make(5);
  FieldElement g = FieldElement::generator(f5);
  std::vector<FieldElement> v{g, FieldElement(1), g * g, FieldElement(0), -g};
  std::sort(v.begin(), v.end());
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    CHECK(!(v[i + 1] < v[i]));
    CHECK((v[i] < v[i + 1] || v[i] == v[i + 1]));
  }
}

TEST_CASE("random expression trees agree with 400-bit floating evaluation") {
  // Independent high-precision generator values via square roots only.
  const unsigned prec = 400;
  for (unsigned L : {4u, 5u, 6u}) {
    auto f = NumberField::make(L);
    mpf_class c(0, prec);
    if (L == 4) {
      c = sqrt(mpf_class(2, prec));
    } else if (L == 6) {
      c = sqrt(mpf_class(3, prec));
    } else {
      c = (1 + sqrt(mpf_class(5, prec))) / 2;  // 2cos(pi/5)
    }
    std::mt19937 rng(20240511 + L);
    for (int trial = 0; trial < 30; ++trial) {
      // Random expression tree of depth <= 8.
      struct Node {
        FieldElement exact;
        mpf_class approx;
      };
      std::function<Node(int)> gen = [&](int depth) -> Node {
        if (depth == 0 || rng() % 4 == 0) {
          if (rng() % 2) return {FieldElement::generator(f), c};
          long v = static_cast<long>(rng() % 7) - 3;
          return {FieldElement(v), mpf_class(static_cast<int>(v), prec)};
        }
        Node a = gen(depth - 1), b = gen(depth - 1);
        switch (rng() % 3) {
          case 0:
            return {a.exact + b.exact, mpf_class(a.approx + b.approx)};
          case 1:
            return {a.exact - b.exact, mpf_class(a.approx - b.approx)};
          default:
            return {a.exact * b.exact, mpf_class(a.approx * b.approx)};
        }
      };
      Node n = gen(8);
      mpf_class mine = n.exact.approx_mpf(200);
      mpf_class err = abs(mine - n.approx);
      mpf_class scale = abs(n.approx) + 1;
      mpf_class loose(0, prec);
      loose = 1;
      for (int i = 0; i < 40; ++i) loose /= 10;
      CHECK(err < loose * scale);
    }
  }
}

TEST_CASE("field degree cap error carries the offending cap") {
  // minimal_polynomial degree for L = 60 is 16.
  CHECK(minimal_polynomial_2cos(60).size() - 1 == 16);
}
