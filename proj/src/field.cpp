#include "coxgrowth/field.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>

#include "coxgrowth/error.hpp"

namespace coxgrowth {

namespace {

void trim(std::vector<Int>& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials, quotient only; b must divide a.
std::vector<Int> poly_div_exact(std::vector<Int> a, const std::vector<Int>& b) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  const int da = static_cast<int>(a.size()) - 1;
  if (da < db) return {Int(0)};
  std::vector<Int> q(da - db + 1, Int(0));
  for (int k = da - db; k >= 0; --k) {
    Int c;
    mpz_divexact(c.get_mpz_t(), a[k + db].get_mpz_t(), b[db].get_mpz_t());
    q[k] = c;
    for (int j = 0; j <= db; ++j) a[k + j] -= c * b[j];
  }
  return q;
}

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Reduce an integer polynomial modulo a monic integer polynomial.
void poly_mod_monic(std::vector<Int>& p, const std::vector<Int>& m) {
  const int dm = static_cast<int>(m.size()) - 1;
  for (int k = static_cast<int>(p.size()) - 1; k >= dm; --k) {
    if (p[k] == 0) continue;
    Int c = p[k];
    for (int j = 0; j <= dm; ++j) p[k - dm + j] -= c * m[j];
  }
  p.resize(std::max<std::size_t>(1, dm));
  if (static_cast<int>(p.size()) < std::max(1, dm)) p.resize(std::max(1, dm), Int(0));
}

// Exact evaluation at a rational point, returned as (num, den_power)
// pair folded into a Rat.
Rat poly_eval(const std::vector<Int>& p, const Rat& x) {
  Rat acc(0);
  for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k) {
    acc = acc * x + Rat(p[k]);
  }
  return acc;
}

struct RatInterval {
  Rat lo, hi;
};

RatInterval imul(const RatInterval& a, const RatInterval& b) {
  Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min(std::min(p1, p2), std::min(p3, p4)),
          std::max(std::max(p1, p2), std::max(p3, p4))};
}

RatInterval interval_horner(const std::vector<Int>& p, const RatInterval& x) {
  RatInterval acc{Rat(0), Rat(0)};
  for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k) {
    acc = imul(acc, x);
    Rat c(p[k]);
    acc.lo += c;
    acc.hi += c;
  }
  return acc;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(unsigned n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, built in divisor order.
  static std::mutex mu;
  static std::map<unsigned, std::vector<Int>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<unsigned> pending{n};
  while (!pending.empty()) {
    unsigned m = pending.back();
    if (cache.count(m)) {
      pending.pop_back();
      continue;
    }
    bool ready = true;
    for (unsigned d = 1; d < m; ++d) {
      if (m % d == 0 && !cache.count(d)) {
        pending.push_back(d);
        ready = false;
      }
    }
    if (!ready) continue;
    std::vector<Int> num(m + 1, Int(0));
    num[0] = -1;
    num[m] = 1;
    std::vector<Int> den{Int(1)};
    for (unsigned d = 1; d < m; ++d)
      if (m % d == 0) den = poly_mul(den, cache[d]);
    cache[m] = poly_div_exact(std::move(num), den);
    pending.pop_back();
  }
  return cache[n];
}

std::vector<Int> minimal_polynomial_2cos(unsigned L) {
  if (L == 0) throw InputError("minimal_polynomial_2cos: L must be positive");
  if (L == 1) return {Int(2), Int(1)};  // 2cos(pi) = -2
  std::vector<Int> phi = cyclotomic_polynomial(2 * L);
  const int deg = static_cast<int>(phi.size()) - 1;
  const int d = deg / 2;  // phi(2L) is even for L >= 2
  // phi is palindromic; rewrite phi(z)/z^d in the basis z^j + z^-j,
  // using t_0 = 2, t_1 = x, t_j = x t_{j-1} - t_{j-2}.
  std::vector<Int> q(d + 1, Int(0));
  q[0] = phi[d];
  std::vector<Int> t_prev{Int(2)};       // t_0
  std::vector<Int> t_cur{Int(0), Int(1)};  // t_1
  for (int j = 1; j <= d; ++j) {
    for (std::size_t k = 0; k < t_cur.size(); ++k) q[k] += phi[d + j] * t_cur[k];
    if (j < d) {
      std::vector<Int> t_next(t_cur.size() + 1, Int(0));
      for (std::size_t k = 0; k < t_cur.size(); ++k) t_next[k + 1] = t_cur[k];
      for (std::size_t k = 0; k < t_prev.size(); ++k) t_next[k] -= t_prev[k];
      t_prev = std::move(t_cur);
      t_cur = std::move(t_next);
    }
  }
  return q;
}

NumberField::NumberField(unsigned L)
    : level_(L), min_poly_(minimal_polynomial_2cos(L)) {
  approx_ = 2.0 * std::cos(std::numbers::pi / L);
  if (degree() == 1) {
    // Rational generator: -p0/p1 exactly.
    Rat c(-min_poly_[0], min_poly_[1]);
    c.canonicalize();
    lo_ = hi_ = c;
    return;
  }
  // Initial isolating interval around the largest root 2cos(pi/L).
  // Candidate conjugates are 2cos(k pi/L); k <= L suffices since the
  // values for k and 2L - k coincide.
  double gap = 4.0;
  for (unsigned k = 2; k <= L; ++k) {
    double other = 2.0 * std::cos(k * std::numbers::pi / L);
    gap = std::min(gap, std::abs(approx_ - other));
  }
  double eps = gap / 4.0;
  for (;;) {
    lo_ = Rat(approx_ - eps);
    hi_ = Rat(approx_ + eps);
    Rat plo = poly_eval(min_poly_, lo_);
    Rat phi = poly_eval(min_poly_, hi_);
    if (sgn(plo) < 0 && sgn(phi) > 0) break;
    eps *= 2.0;
    if (eps > 4.0)
      throw InternalError("NumberField: failed to isolate the generator");
  }
}

std::shared_ptr<const NumberField> NumberField::make(unsigned L) {
  static std::mutex mu;
  static std::map<unsigned, std::shared_ptr<const NumberField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[L];
  if (!slot) slot = std::shared_ptr<const NumberField>(new NumberField(L));
  return slot;
}

std::pair<Rat, Rat> NumberField::generator_enclosure(const Rat& max_width) const {
  std::lock_guard<std::mutex> lock(mutex_);
  while (hi_ - lo_ > max_width) {
    Rat mid = (lo_ + hi_) / 2;
    if (sgn(poly_eval(min_poly_, mid)) < 0)
      lo_ = mid;
    else
      hi_ = mid;
  }
  return {lo_, hi_};
}

FieldElement::FieldElement(const Rat& v)
    : num_(1, v.get_num()), den_(v.get_den()) {
  normalize();
}

FieldElement FieldElement::generator(std::shared_ptr<const NumberField> field) {
  return from_integer_polynomial(std::move(field), {Int(0), Int(1)});
}

FieldElement FieldElement::from_integer_polynomial(
    std::shared_ptr<const NumberField> field, std::vector<Int> coeffs) {
  FieldElement e;
  poly_mod_monic(coeffs, field->minimal_polynomial());
  coeffs.resize(field->degree(), Int(0));
  e.field_ = std::move(field);
  e.num_ = std::move(coeffs);
  e.den_ = 1;
  e.normalize();
  return e;
}

bool FieldElement::is_zero() const {
  for (const Int& c : num_)
    if (c != 0) return false;
  return true;
}

bool FieldElement::is_rational() const {
  for (std::size_t k = 1; k < num_.size(); ++k)
    if (num_[k] != 0) return false;
  return true;
}

Rat FieldElement::rational_value() const {
  if (!is_rational())
    throw InternalError("rational_value on a non-rational field element");
  Rat v(num_[0], den_);
  v.canonicalize();
  return v;
}

void FieldElement::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (Int& c : num_) c = -c;
  }
  Int g = den_;
  for (const Int& c : num_) {
    if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (g > 1) {
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    for (Int& c : num_)
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

void FieldElement::align(FieldElement& a, FieldElement& b) {
  if (a.field_ == b.field_) return;
  if (a.field_ && b.field_)
    throw InternalError("field elements from different number fields");
  FieldElement& rational = a.field_ ? b : a;
  const FieldElement& other = a.field_ ? a : b;
  rational.field_ = other.field_;
  rational.num_.resize(other.num_.size(), Int(0));
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (Int& c : r.num_) c = -c;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  FieldElement rhs = o;
  align(*this, rhs);
  if (den_ == rhs.den_) {
    for (std::size_t k = 0; k < num_.size(); ++k) num_[k] += rhs.num_[k];
  } else {
    for (std::size_t k = 0; k < num_.size(); ++k)
      num_[k] = num_[k] * rhs.den_ + rhs.num_[k] * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  return *this += -o;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  FieldElement rhs = o;
  align(*this, rhs);
  if (!field_) {
    num_[0] *= rhs.num_[0];
    den_ *= rhs.den_;
    normalize();
    return *this;
  }
  std::vector<Int> prod(num_.size() + rhs.num_.size() - 1, Int(0));
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.num_.size(); ++j)
      if (rhs.num_[j] != 0) prod[i + j] += num_[i] * rhs.num_[j];
  }
  poly_mod_monic(prod, field_->minimal_polynomial());
  prod.resize(field_->degree(), Int(0));
  num_ = std::move(prod);
  den_ *= rhs.den_;
  normalize();
  return *this;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.field_ == b.field_) return a.den_ == b.den_ && a.num_ == b.num_;
  FieldElement x = a, y = b;
  FieldElement::align(x, y);
  return x.den_ == y.den_ && x.num_ == y.num_;
}

bool operator<(const FieldElement& a, const FieldElement& b) {
  FieldElement x = a, y = b;
  FieldElement::align(x, y);
  for (int k = static_cast<int>(x.num_.size()) - 1; k >= 0; --k) {
    Int l = x.num_[k] * y.den_;
    Int r = y.num_[k] * x.den_;
    if (l != r) return l < r;
  }
  return false;
}

int FieldElement::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return sgn(num_[0]);
  Rat width(1, 16);
  for (;;) {
    auto [lo, hi] = field_->generator_enclosure(width);
    RatInterval v = interval_horner(num_, {lo, hi});
    if (sgn(v.lo) > 0) return 1;
    if (sgn(v.hi) < 0) return -1;
    width /= 16;
  }
}

double FieldElement::approx() const {
  double x = field_ ? field_->generator_approx() : 0.0;
  double acc = 0.0;
  for (int k = static_cast<int>(num_.size()) - 1; k >= 0; --k)
    acc = acc * x + num_[k].get_d();
  return acc / den_.get_d();
}

mpf_class FieldElement::approx_mpf(unsigned prec_bits) const {
  if (is_rational()) {
    mpf_class r(0, prec_bits + 32);
    r = rational_value();
    return r;
  }
  // Refine until the interval image has small width, then take the
  // midpoint. Width scales with coefficient size; iterate to be safe.
  Rat width(1, 16);
  Rat target = Rat(1);
  for (unsigned b = 0; b < prec_bits + 8; ++b) target /= 2;
  for (;;) {
    auto [lo, hi] = field_->generator_enclosure(width);
    RatInterval v = interval_horner(num_, {lo, hi});
    Rat span = (v.hi - v.lo) / Rat(den_);
    Rat scale = std::max(abs(v.lo), abs(v.hi)) / Rat(den_);
    if (scale < 1) scale = 1;
    if (span <= target * scale) {
      mpf_class r(0, prec_bits + 32);
      r = Rat((v.lo + v.hi) / 2 / Rat(den_));
      return r;
    }
    width /= 16;
  }
}

std::string FieldElement::decimal(int significant_digits) const {
  unsigned bits = static_cast<unsigned>(significant_digits * 4 + 32);
  mpf_class v = approx_mpf(bits);
  char buf[512];
  gmp_snprintf(buf, sizeof(buf), "%.*Fg", significant_digits, v.get_mpf_t());
  return buf;
}

std::string FieldElement::exact_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (num_[k] == 0) continue;
    Int a = num_[k];
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (k == 0 || a != 1) os << a.get_str();
    if (k >= 1) {
      if (a != 1) os << "*";
      os << "c";
      if (k >= 2) os << "^" << k;
    }
  }
  if (first) os << "0";
  std::string body = os.str();
  if (den_ == 1) return body;
  return "(" + body + ")/" + den_.get_str();
}

void FieldElement::serialize(std::string& out) const {
  // Canonical: trailing zero coefficients are dropped, so a rational
  // constant encodes identically whether or not it was lifted into a
  // field. A leading count byte keeps concatenations self-delimiting.
  auto put = [&out](const Int& v) {
    int s = sgn(v);
    std::size_t bytes = s == 0 ? 0 : (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
    out.push_back(static_cast<char>(s == 0 ? 0 : (s > 0 ? 1 : 2)));
    out.push_back(static_cast<char>(bytes & 0xff));
    if (bytes > 255) out.append(reinterpret_cast<const char*>(&bytes), sizeof(bytes));
    std::size_t old = out.size();
    out.resize(old + bytes);
    if (bytes) {
      std::size_t written = 0;
      mpz_export(out.data() + old, &written, 1, 1, 0, 0, v.get_mpz_t());
    }
  };
  std::size_t count = num_.size();
  while (count > 1 && num_[count - 1] == 0) --count;
  out.push_back(static_cast<char>(count & 0xff));
  put(den_);
  for (std::size_t k = 0; k < count; ++k) put(num_[k]);
}

FieldElement two_cos_pi_over(const std::shared_ptr<const NumberField>& field,
                             unsigned m) {
  if (m == 1) return FieldElement(-2);
  if (m == 2) return FieldElement(0);
  const unsigned L = field->level();
  if (L % m != 0)
    throw InternalError("two_cos_pi_over: label does not divide field level");
  // c_m = t_{L/m}(c_L) with t_j the z^j + z^-j basis polynomials.
  const unsigned j = L / m;
  std::vector<Int> t_prev{Int(2)};
  std::vector<Int> t_cur{Int(0), Int(1)};
  if (j == 0) throw InternalError("two_cos_pi_over: zero index");
  for (unsigned k = 1; k < j; ++k) {
    std::vector<Int> t_next(t_cur.size() + 1, Int(0));
    for (std::size_t i = 0; i < t_cur.size(); ++i) t_next[i + 1] = t_cur[i];
    for (std::size_t i = 0; i < t_prev.size(); ++i) t_next[i] -= t_prev[i];
    t_prev = std::move(t_cur);
    t_cur = std::move(t_next);
  }
  return FieldElement::from_integer_polynomial(field, std::move(t_cur));
}

}  // namespace coxgrowth
