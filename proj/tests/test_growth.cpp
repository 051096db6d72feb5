#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <complex>
#include <random>

#include "coxgrowth/error.hpp"
#include "coxgrowth/growth.hpp"
#include "coxgrowth/oracle.hpp"
#include "support.hpp"

using namespace coxgrowth;

namespace {

std::vector<Int> icounts(std::initializer_list<long> cs) {
  std::vector<Int> v;
  for (long c : cs) v.emplace_back(c);
  return v;
}

Automaton geo_of(const std::string& name) {
  return build_geo(small_roots(testsupport::fixture(name)));
}

Automaton shortlex_of(const std::string& name) {
  auto d = testsupport::fixture(name);
  return build_shortlex(small_roots(d), testsupport::standard_priority(d));
}

}  // namespace

TEST_CASE("count_words: free product and dihedral") {
  CHECK(count_words(geo_of("universal3"), 4) == icounts({1, 3, 6, 12, 24}));
  CHECK(count_words(shortlex_of("universal3"), 4) ==
        icounts({1, 3, 6, 12, 24}));
  CHECK(count_words(shortlex_of("dihedral_inf"), 3) == icounts({1, 2, 2, 2}));
}

TEST_CASE("count_words: golden fixture against the oracle") {
  auto d = testsupport::fixture("golden");
  auto t = bfs_group(d, 6);
  CHECK(count_words(geo_of("golden"), 6) == t.g);
  CHECK(count_words(shortlex_of("golden"), 6) == t.w);
  // the element count collapses one pair at length 2: w_2 = g_2 - 1
  CHECK(t.w[2] == t.g[2] - 1);
}

TEST_CASE("transfer matrix shapes and counting identity") {
  Eigen::MatrixXi u = transfer_matrix(geo_of("universal3"));
  REQUIRE(u.rows() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(u(i, j) == (i == j ? 0 : 1));

  Eigen::MatrixXi dih = transfer_matrix(geo_of("dihedral_inf"));
  CHECK(dih(0, 0) == 0);
  CHECK(dih(0, 1) == 1);
  CHECK(dih(1, 0) == 1);
  CHECK(dih(1, 1) == 0);

  // v_k = r M^{k-1} 1 with r the start-successor indicator row
  for (const auto& name : testsupport::all_fixture_names()) {
    auto a = geo_of(name);
    auto counts = count_words(a, 6);
    Eigen::MatrixXi M = transfer_matrix(a);
    std::vector<Int> x(M.rows(), Int(0));
    for (int i = 0; i < a.alphabet; ++i)
      if (a.trans(0, i) > 0) x[a.trans(0, i) - 1] += 1;
    for (int k = 1; k <= 6; ++k) {
      Int total(0);
      for (const Int& c : x) total += c;
      CHECK(total == counts[k]);
      std::vector<Int> y(M.rows(), Int(0));
      for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j)
          if (M(i, j)) y[j] += Int(M(i, j)) * x[i];
      x = std::move(y);
    }
  }
}

TEST_CASE("spectral radius enclosures") {
  Rat tol(1, 1000000000);
  Eigen::MatrixXi perm(2, 2);
  perm << 0, 1, 1, 0;
  auto r = spectral_radius_enclosure(perm, tol);
  CHECK(r.tight);
  CHECK(r.contains(Rat(1)));
  CHECK(r.width() <= tol);

  Eigen::MatrixXi u(3, 3);
  u << 0, 1, 1, 1, 0, 1, 1, 1, 0;
  auto r2 = spectral_radius_enclosure(u, tol);
  CHECK(r2.contains(Rat(2)));
  CHECK(r2.width() <= tol);

  Eigen::MatrixXi fib(2, 2);
  fib << 1, 1, 1, 0;
  auto r3 = spectral_radius_enclosure(fib, tol);
  CHECK(r3.width() <= tol);
  double phi = (1 + std::sqrt(5.0)) / 2;
  CHECK(std::abs(r3.midpoint().get_d() - phi) < 1e-9);

  Eigen::MatrixXi zero = Eigen::MatrixXi::Zero(2, 2);
  CHECK_THROWS_AS(spectral_radius_enclosure(zero, tol), InputError);
}

TEST_CASE("enclosures at different tolerances are nested") {
  Eigen::MatrixXi fib(2, 2);
  fib << 1, 1, 1, 0;
  auto loose = spectral_radius_enclosure(fib, Rat(1, 100));
  auto tight = spectral_radius_enclosure(fib, Rat(1, 1000000000));
  CHECK(loose.lo <= tight.lo);
  CHECK(tight.hi <= loose.hi);
}

TEST_CASE("growth_rate_enclosure handles reducible matrices") {
  Eigen::MatrixXi m = Eigen::MatrixXi::Zero(3, 3);
  m(0, 1) = 1;  // acyclic tail
  m(1, 2) = 1;
  m(2, 2) = 2;  // one loop of weight 2
  auto r = growth_rate_enclosure(m, Rat(1, 1000000));
  CHECK(r.contains(Rat(2)));

  Eigen::MatrixXi n = Eigen::MatrixXi::Zero(2, 2);
  n(0, 1) = 1;
  CHECK(growth_rate_enclosure(n, Rat(1, 1000)).hi == 0);
}

TEST_CASE("perron certificates") {
  auto c = perron_certificate(geo_of("universal3"));
  CHECK(c.certified);
  CHECK(c.period == 1);

  auto d = perron_certificate(geo_of("dihedral_inf"));
  CHECK(!d.certified);
  CHECK(d.irreducible);
  CHECK(d.period == 2);

  auto f = perron_certificate(shortlex_of("finite_a2"));
  CHECK(!f.certified);
  CHECK(!f.irreducible);
}

TEST_CASE("characteristic polynomial") {
  Eigen::MatrixXi fib(2, 2);
  fib << 1, 1, 1, 0;
  CHECK(characteristic_polynomial(fib) ==
        std::vector<Int>{Int(-1), Int(-1), Int(1)});
  Eigen::MatrixXi perm(2, 2);
  perm << 0, 1, 1, 0;
  CHECK(characteristic_polynomial(perm) ==
        std::vector<Int>{Int(-1), Int(0), Int(1)});
  Eigen::MatrixXi id3 = Eigen::MatrixXi::Identity(3, 3);
  CHECK(characteristic_polynomial(id3) ==
        std::vector<Int>{Int(-1), Int(3), Int(-3), Int(1)});
  CHECK_THROWS_AS(characteristic_polynomial(id3, 2), CapError);

  // cross-check against numeric eigenvalues on a fixture
  Eigen::MatrixXi M = transfer_matrix(geo_of("chord4"));
  auto p = characteristic_polynomial(M);
  Eigen::EigenSolver<Eigen::MatrixXd> es(M.cast<double>());
  for (int i = 0; i < M.rows(); ++i) {
    std::complex<double> z = es.eigenvalues()(i), acc(0, 0);
    for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k)
      acc = acc * z + std::complex<double>(p[k].get_d(), 0);
    CHECK(std::abs(acc) < 1e-6);
  }
}

TEST_CASE("corroborate_perron") {
  Interval phi{Rat(16180339, 10000000), Rat(16180340, 10000000), true};
  auto r = corroborate_perron({Int(-1), Int(-1), Int(1)}, phi);
  CHECK(r.converged);
  CHECK(r.corroborated);
  CHECK(std::abs(r.margin - 1.0) < 1e-5);
  CHECK(std::abs(r.second_modulus - 0.6180339887) < 1e-6);

  Interval one{Rat(1), Rat(1), true};
  auto s = corroborate_perron({Int(-1), Int(0), Int(1)}, one);  // x^2 - 1
  CHECK(s.converged);
  CHECK(!s.corroborated);
  CHECK(std::abs(s.margin) < 1e-9);
}

TEST_CASE("rational series") {
  auto dih = rational_series(shortlex_of("dihedral_inf"));
  REQUIRE(dih.has_value());
  CHECK(dih->p == std::vector<Int>{Int(1), Int(1)});    // 1 + z
  CHECK(dih->q == std::vector<Int>{Int(1), Int(-1)});   // 1 - z

  auto uni = rational_series(geo_of("universal3"));
  REQUIRE(uni.has_value());
  CHECK(uni->p == std::vector<Int>{Int(1), Int(1)});    // 1 + z
  CHECK(uni->q == std::vector<Int>{Int(1), Int(-2)});   // 1 - 2z

  // coefficientwise agreement well beyond the internal verification
  for (const auto& name : testsupport::all_fixture_names()) {
    auto a = geo_of(name);
    auto rs = rational_series(a);
    REQUIRE(rs.has_value());
    int K = 25;
    auto v = count_words(a, K);
    // multiply v by q and compare with p (p has trailing zeros implied)
    for (int k = 0; k <= K; ++k) {
      Int acc(0);
      for (std::size_t j = 0; j < rs->q.size() && static_cast<int>(j) <= k; ++j)
        acc += rs->q[j] * v[k - j];
      Int expect = k < static_cast<int>(rs->p.size()) ? rs->p[k] : Int(0);
      CHECK(acc == expect);
    }
  }
}

TEST_CASE("delta report") {
  auto w = count_words(shortlex_of("golden"), 30);
  auto g = count_words(geo_of("golden"), 30);
  Rat tol(1, 1000000000);
  auto omega = growth_rate_enclosure(transfer_matrix(shortlex_of("golden")), tol);
  auto gamma = growth_rate_enclosure(transfer_matrix(geo_of("golden")), tol);
  auto rep = delta_report(w, g, omega, gamma, false, 30);
  CHECK(rep.strict_domination);
  CHECK(rep.domination_applicable);
  CHECK(std::abs(rep.ratios[25] - 1.0) < 0.05);
  CHECK(std::abs(rep.ratios[25] - 1.0) < std::abs(rep.ratios[5] - 1.0));

  // free product: ratios identically 1
  auto wu = count_words(shortlex_of("universal3"), 10);
  auto gu = count_words(geo_of("universal3"), 10);
  auto two = growth_rate_enclosure(transfer_matrix(geo_of("universal3")), tol);
  auto rep2 = delta_report(wu, gu, two, two, true, 10);
  CHECK(!rep2.domination_applicable);
  for (double r : rep2.ratios) CHECK(r == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rep2.trend == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("counting bounds on infinite groups") {
  std::mt19937 rng(101);
  for (int t = 0; t < 8; ++t) {
    auto d = testsupport::random_spanned(rng);
    auto s = small_roots(d);
    auto w = count_words(build_shortlex(s, testsupport::standard_priority(d)), 8);
    auto g = count_words(build_geo(s), 8);
    Int bound(d.rank);
    for (int k = 1; k <= 8; ++k) {
      CHECK(w[k] >= 1);
      CHECK(w[k] <= g[k]);
      CHECK(g[k] <= bound);
      bound *= d.rank - 1;
    }
  }
}
