#include "coxgrowth/growth.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>

#include "coxgrowth/error.hpp"

namespace coxgrowth {

std::vector<Int> count_words(const Automaton& a, int K) {
  if (K < 0) throw InputError("count_words: negative horizon");
  std::vector<Int> counts;
  counts.reserve(K + 1);
  std::vector<Int> x(a.size(), Int(0));
  x[0] = 1;
  for (int k = 0;; ++k) {
    Int total(0);
    for (const Int& c : x) total += c;
    counts.push_back(total);
    if (k == K) break;
    std::vector<Int> y(a.size(), Int(0));
    for (int st = 0; st < a.size(); ++st) {
      if (x[st] == 0) continue;
      for (int i = 0; i < a.alphabet; ++i) {
        int to = a.trans(st, i);
        if (to != Automaton::kFail) y[to] += x[st];
      }
    }
    x = std::move(y);
  }
  return counts;
}

Eigen::MatrixXi transfer_matrix(const Automaton& a) {
  const int n = a.size() - 1;
  Eigen::MatrixXi M = Eigen::MatrixXi::Zero(n, n);
  for (int st = 1; st < a.size(); ++st)
    for (int i = 0; i < a.alphabet; ++i) {
      int to = a.trans(st, i);
      if (to > 0) ++M(st - 1, to - 1);
    }
  return M;
}

namespace {

// One exact step y = (M + I) x over big integers.
std::vector<Int> shifted_step(const Eigen::MatrixXi& M,
                              const std::vector<Int>& x) {
  const int n = static_cast<int>(M.rows());
  std::vector<Int> y(n, Int(0));
  for (int i = 0; i < n; ++i) {
    Int acc = x[i];  // identity shift
    for (int j = 0; j < n; ++j)
      if (M(i, j) != 0) acc += M(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

// Keep iterate magnitudes bounded; any positive vector yields valid
// Collatz-Wielandt bounds, so truncation is sound.
void renormalize(std::vector<Int>& x, unsigned max_bits) {
  std::size_t top = 0;
  for (const Int& v : x) top = std::max(top, mpz_sizeinbase(v.get_mpz_t(), 2));
  if (top <= max_bits) return;
  unsigned shift = static_cast<unsigned>(top - max_bits / 2);
  for (Int& v : x) {
    v >>= shift;
    if (v < 1) v = 1;
  }
}

}  // namespace

Interval spectral_radius_enclosure(const Eigen::MatrixXi& M, const Rat& tol,
                                   long iteration_cap) {
  const int n = static_cast<int>(M.rows());
  if (n == 0 || M.isZero())
    throw InputError("spectral_radius_enclosure: zero matrix");
  if (tol <= 0) throw InputError("tolerance must be positive");

  // Warm start: double power iteration on M + I.
  Eigen::MatrixXd A = M.cast<double>();
  A += Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd xd = Eigen::VectorXd::Ones(n);
  for (int it = 0; it < 4000; ++it) {
    Eigen::VectorXd yd = A * xd;
    yd /= yd.maxCoeff();
    if ((yd - xd).cwiseAbs().maxCoeff() < 1e-15) {
      xd = yd;
      break;
    }
    xd = yd;
  }

  std::vector<Int> x(n);
  for (int i = 0; i < n; ++i) {
    double v = std::max(xd(i), 1e-15) * 9007199254740992.0;  // 2^53
    x[i] = Int(v);
    if (x[i] < 1) x[i] = 1;
  }

  Interval best{Rat(0), Rat(0), true};
  bool have = false;
  for (long it = 0; it < iteration_cap; ++it) {
    std::vector<Int> y = shifted_step(M, x);
    Rat lo, hi;
    for (int i = 0; i < n; ++i) {
      Rat q(y[i], x[i]);
      q.canonicalize();
      if (i == 0 || q < lo) lo = q;
      if (i == 0 || q > hi) hi = q;
    }
    lo -= 1;  // undo the identity shift
    hi -= 1;
    if (!have) {
      best.lo = lo;
      best.hi = hi;
      have = true;
    } else {
      // Nested by construction: every pass yields valid bounds.
      if (lo > best.lo) best.lo = lo;
      if (hi < best.hi) best.hi = hi;
    }
    if (best.hi - best.lo <= tol) return best;
    x = std::move(y);
    renormalize(x, 1024);
  }
  best.tight = false;
  return best;
}

Interval growth_rate_enclosure(const Eigen::MatrixXi& M, const Rat& tol,
                               long iteration_cap) {
  const int n = static_cast<int>(M.rows());
  if (n == 0) return {Rat(0), Rat(0), true};
  CoreGraph g;
  g.nodes = n;
  g.adj.resize(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (M(i, j) != 0) g.adj[i].push_back(j);
  SccResult scc = strongly_connected(g);

  Interval out{Rat(0), Rat(0), true};
  for (int c = 0; c < scc.count; ++c) {
    std::vector<int> nodes;
    for (int v = 0; v < n; ++v)
      if (scc.component[v] == c) nodes.push_back(v);
    Eigen::MatrixXi sub(nodes.size(), nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
      for (std::size_t j = 0; j < nodes.size(); ++j)
        sub(i, j) = M(nodes[i], nodes[j]);
    if (sub.isZero()) continue;  // trivial component, radius 0
    Interval r = spectral_radius_enclosure(sub, tol, iteration_cap);
    out.lo = std::max(out.lo, r.lo);
    out.hi = std::max(out.hi, r.hi);
    out.tight = out.tight && r.tight;
  }
  return out;
}

PerronCertificate perron_certificate(const Automaton& a) {
  PerronCertificate cert;
  CoreGraph g = accept_core(a);
  if (g.nodes == 0) {
    cert.reason = "empty accept core";
    return cert;
  }
  SccResult scc = strongly_connected(g);
  bool has_arc = false;
  for (const auto& row : g.adj) has_arc = has_arc || !row.empty();
  cert.irreducible = scc.strongly_connected() && has_arc;
  if (!cert.irreducible) {
    cert.reason = scc.strongly_connected()
                      ? "accept core has no cycles"
                      : "accept core not strongly connected (" +
                            std::to_string(scc.count) + " components)";
    return cert;
  }
  cert.period = period(g);
  cert.primitive = cert.period == 1;
  cert.certified = cert.primitive;
  if (!cert.certified)
    cert.reason = "period " + std::to_string(cert.period);
  return cert;
}

std::vector<Int> characteristic_polynomial(const Eigen::MatrixXi& M,
                                           int dimension_cap) {
  const int n = static_cast<int>(M.rows());
  if (n > dimension_cap)
    throw CapError("characteristic polynomial dimension " + std::to_string(n) +
                   " exceeds cap " + std::to_string(dimension_cap));
  // Faddeev-LeVerrier: M_1 = M, c_k = -tr(M_k)/k, M_{k+1} = M(M_k + c_k I).
  // All intermediates are integers.
  std::vector<Int> A(n * n), Mk(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A[i * n + j] = Mk[i * n + j] = Int(M(i, j));
  std::vector<Int> coeff(n + 1, Int(0));
  coeff[n] = 1;
  for (int k = 1; k <= n; ++k) {
    Int trace(0);
    for (int i = 0; i < n; ++i) trace += Mk[i * n + i];
    Int c;
    mpz_divexact_ui(c.get_mpz_t(), trace.get_mpz_t(), k);
    c = -c;
    coeff[n - k] = c;
    if (k == n) break;
    for (int i = 0; i < n; ++i) Mk[i * n + i] += c;
    std::vector<Int> next(n * n, Int(0));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        if (A[i * n + l] == 0) continue;
        const Int& a = A[i * n + l];
        for (int j = 0; j < n; ++j)
          if (Mk[l * n + j] != 0) next[i * n + j] += a * Mk[l * n + j];
      }
    Mk = std::move(next);
  }
  return coeff;
}

CorroborationReport corroborate_perron(const std::vector<Int>& charpoly,
                                       const Interval& rho) {
  CorroborationReport rep;
  const int d = static_cast<int>(charpoly.size()) - 1;
  if (d < 1) return rep;
  // Companion matrix of the monic polynomial.
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) C(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) C(i, d - 1) = -charpoly[i].get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(C, false);
  if (solver.info() != Eigen::Success) return rep;
  rep.converged = true;

  const double mid = rho.midpoint().get_d();
  Eigen::VectorXcd roots = solver.eigenvalues();
  // The Perron candidate is the single root closest to the enclosure
  // midpoint; the margin compares against all remaining moduli.
  int perron = 0;
  for (int i = 1; i < d; ++i)
    if (std::abs(roots(i) - std::complex<double>(mid, 0)) <
        std::abs(roots(perron) - std::complex<double>(mid, 0)))
      perron = i;
  rep.dominant_modulus = std::abs(roots(perron));
  rep.second_modulus = 0.0;
  for (int i = 0; i < d; ++i)
    if (i != perron)
      rep.second_modulus = std::max(rep.second_modulus, std::abs(roots(i)));
  rep.margin = rho.lo.get_d() - rep.second_modulus;
  rep.corroborated = rep.margin > kCorroborationTolerance;
  return rep;
}

namespace {

// Primitive part with positive leading sign preserved externally.
void make_primitive(std::vector<Int>& p) {
  Int g(0);
  for (const Int& c : p)
    if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1)
    for (Int& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

std::vector<Rat> to_rat(const std::vector<Int>& p) {
  std::vector<Rat> r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = Rat(p[i]);
  return r;
}

void trim_rat(std::vector<Rat>& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

std::vector<Rat> rat_poly_rem(std::vector<Rat> a, const std::vector<Rat>& b) {
  trim_rat(a);
  const int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db && !(a.size() == 1 && a[0] == 0)) {
    int da = static_cast<int>(a.size()) - 1;
    Rat c = a[da] / b[db];
    for (int j = 0; j <= db; ++j) a[da - db + j] -= c * b[j];
    a[da] = 0;  // exact cancellation of the leading term
    trim_rat(a);
  }
  return a;
}

std::vector<Rat> rat_poly_gcd(std::vector<Rat> a, std::vector<Rat> b) {
  trim_rat(a);
  trim_rat(b);
  while (!(b.size() == 1 && b[0] == 0)) {
    std::vector<Rat> r = rat_poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<Rat> rat_poly_div_exact(std::vector<Rat> a,
                                    const std::vector<Rat>& b) {
  trim_rat(a);
  const int db = static_cast<int>(b.size()) - 1;
  const int da = static_cast<int>(a.size()) - 1;
  std::vector<Rat> q(std::max(da - db + 1, 1), Rat(0));
  for (int k = da - db; k >= 0; --k) {
    Rat c = a[k + db] / b[db];
    q[k] = c;
    for (int j = 0; j <= db; ++j) a[k + j] -= c * b[j];
  }
  return q;
}

std::vector<Int> rat_to_primitive_int(const std::vector<Rat>& p) {
  Int den(1);
  for (const Rat& c : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
                                 c.get_den().get_mpz_t());
  std::vector<Int> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    Rat scaled = p[i] * Rat(den);
    out[i] = scaled.get_num();
  }
  make_primitive(out);
  return out;
}

}  // namespace

std::optional<RationalSeries> rational_series(const Automaton& a,
                                              int dimension_cap) {
  const int dim = a.size() - 1;
  if (dim > dimension_cap) return std::nullopt;
  Eigen::MatrixXi M = transfer_matrix(a);
  std::vector<Int> cp = characteristic_polynomial(M, dimension_cap);
  const int d = static_cast<int>(cp.size()) - 1;
  // Q(z) = z^d p(1/z) = det(I - zM).
  std::vector<Int> q(d + 1);
  for (int k = 0; k <= d; ++k) q[k] = cp[d - k];

  const int horizon = 2 * d + 6;
  std::vector<Int> v = count_words(a, horizon);
  std::vector<Int> conv(horizon + 1, Int(0));
  for (int k = 0; k <= horizon; ++k)
    for (int j = 0; j <= std::min(k, d); ++j) conv[k] += q[j] * v[k - j];
  for (int k = d + 1; k <= horizon; ++k)
    if (conv[k] != 0)
      throw InternalError("rational_series: counting identity violated");
  std::vector<Int> p(conv.begin(), conv.begin() + d + 1);
  while (p.size() > 1 && p.back() == 0) p.pop_back();

  // Cancel common factors over Q, then return primitive integer parts.
  std::vector<Rat> pr = to_rat(p), qr = to_rat(q);
  std::vector<Rat> g = rat_poly_gcd(pr, qr);
  if (g.size() > 1) {
    pr = rat_poly_div_exact(pr, g);
    qr = rat_poly_div_exact(qr, g);
  }
  RationalSeries out{rat_to_primitive_int(pr), rat_to_primitive_int(qr)};
  // Normalize sign so Q(0) > 0.
  if (out.q[0] < 0) {
    for (Int& c : out.q) c = -c;
    for (Int& c : out.p) c = -c;
  }
  return out;
}

DeltaReport delta_report(const std::vector<Int>& w, const std::vector<Int>& g,
                         const Interval& omega, const Interval& gamma,
                         bool free_product, int K) {
  if (w.size() <= static_cast<std::size_t>(K) ||
      g.size() <= static_cast<std::size_t>(K))
    throw InputError("delta_report: counts shorter than the horizon");
  DeltaReport rep;
  double om = omega.midpoint().get_d();
  double ga = gamma.midpoint().get_d();
  rep.delta_hat = om > 0 ? ga / om : 0.0;
  // Normalized per-step ratio (g_k/w_k)^{1/k} / delta-hat: converges to 1
  // when both languages have genuine exponential growth. Undefined entries
  // (finite groups, vanishing counts) are reported as NaN.
  rep.ratios.resize(K + 1, 1.0);
  rep.trend = 0.0;
  for (int k = 1; k <= K; ++k) {
    double wk = w[k].get_d(), gk = g[k].get_d();
    if (wk > 0 && gk > 0 && rep.delta_hat > 0) {
      rep.ratios[k] = std::pow(gk / wk, 1.0 / k) / rep.delta_hat;
      rep.trend = std::abs(rep.ratios[k] - 1.0);
    } else {
      rep.ratios[k] = std::numeric_limits<double>::quiet_NaN();
    }
  }
  rep.domination_applicable = !free_product;
  rep.strict_domination = gamma.lo > omega.hi;
  return rep;
}

}  // namespace coxgrowth
