#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace coxgrowth {

using Int = mpz_class;
using Rat = mpq_class;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Minimal polynomial of 2cos(pi/L) over Q, monic with integer
/// coefficients (ascending order). Obtained from the cyclotomic
/// polynomial Phi_{2L} via the substitution x = z + 1/z; degree is
/// phi(2L)/2 for L >= 2 and 1 for L = 1.
std::vector<Int> minimal_polynomial_2cos(unsigned L);

/// Cyclotomic polynomial Phi_n, integer coefficients ascending.
std::vector<Int> cyclotomic_polynomial(unsigned n);

/// The real algebraic field Q(c_L), c_L = 2cos(pi/L). Instances are
/// shared and cached per L; elements of the same level always point to
/// the same field object. Holds a certified rational enclosure of c_L,
/// refined on demand (thread-safe).
class NumberField {
 public:
  static std::shared_ptr<const NumberField> make(unsigned L);

  unsigned level() const { return level_; }
  int degree() const { return static_cast<int>(min_poly_.size()) - 1; }
  const std::vector<Int>& minimal_polynomial() const { return min_poly_; }

  /// Rational interval [lo, hi] certainly containing c_L, of width at
  /// most max_width, with the minimal polynomial negative at lo and
  /// positive at hi (the generator is the largest real root).
  std::pair<Rat, Rat> generator_enclosure(const Rat& max_width) const;

  double generator_approx() const { return approx_; }

 private:
  explicit NumberField(unsigned L);

  unsigned level_;
  std::vector<Int> min_poly_;
  double approx_;
  mutable std::mutex mutex_;
  mutable Rat lo_, hi_;  // bisection state; invariant p(lo_) < 0 < p(hi_)
};

/// Exact element of Q(c_L): polynomial in the generator with rational
/// coefficients, reduced modulo the minimal polynomial. Stored as an
/// integer coefficient vector over a common positive denominator, kept
/// content-normalized so equality is componentwise. A null field means
/// a plain rational constant; such values interoperate with any field.
class FieldElement {
 public:
  FieldElement() : num_(1, Int(0)), den_(1) {}
  FieldElement(int v) : num_(1, Int(v)), den_(1) {}            // NOLINT
  FieldElement(long v) : num_(1, Int(v)), den_(1) {}           // NOLINT
  explicit FieldElement(const Rat& v);
  explicit FieldElement(const Int& v) : num_(1, v), den_(1) {}

  /// The generator c_L itself.
  static FieldElement generator(std::shared_ptr<const NumberField> field);
  /// Element from an integer polynomial in the generator (ascending).
  static FieldElement from_integer_polynomial(
      std::shared_ptr<const NumberField> field, std::vector<Int> coeffs);

  const std::shared_ptr<const NumberField>& field() const { return field_; }
  bool is_zero() const;
  bool is_rational() const;       // all coefficients beyond degree 0 vanish
  Rat rational_value() const;     // requires is_rational()

  /// Exact sign: -1, 0 or +1. Determined by interval evaluation at a
  /// refined enclosure of the generator; exact zero falls out of the
  /// reduced normal form.
  int sign() const;

  double approx() const;
  mpf_class approx_mpf(unsigned prec_bits) const;
  /// Decimal rendering at the given number of significant digits.
  std::string decimal(int significant_digits = 30) const;
  /// Exact polynomial rendering, e.g. "(1 + c - c^2)/2".
  std::string exact_string() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) {
    a += b;
    return a;
  }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) {
    a -= b;
    return a;
  }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) {
    a *= b;
    return a;
  }

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) {
    return !(a == b);
  }
  /// Canonical (representation) order: lexicographic on the normalized
  /// cross-multiplied coefficients, highest degree first. Total and
  /// deterministic; used for stable sorting, not numeric comparison.
  friend bool operator<(const FieldElement& a, const FieldElement& b);

  /// Numeric comparison via exact sign of the difference.
  int compare(const FieldElement& o) const { return (*this - o).sign(); }

  const std::vector<Int>& numerators() const { return num_; }
  const Int& denominator() const { return den_; }

  /// Appends a compact byte encoding to out (injective on normalized
  /// values of a fixed field).
  void serialize(std::string& out) const;

 private:
  void normalize();
  static void align(FieldElement& a, FieldElement& b);

  std::shared_ptr<const NumberField> field_;  // null => rational constant
  std::vector<Int> num_;                      // size degree (or 1 if null)
  Int den_;                                   // > 0
};

/// c_m = 2cos(pi/m) as an element of the given field; m must divide the
/// field level (or m <= 2, which is rational).
FieldElement two_cos_pi_over(const std::shared_ptr<const NumberField>& field,
                             unsigned m);

}  // namespace coxgrowth

namespace Eigen {

template <>
struct NumTraits<coxgrowth::FieldElement>
    : GenericNumTraits<coxgrowth::FieldElement> {
  typedef coxgrowth::FieldElement Real;
  typedef coxgrowth::FieldElement NonInteger;
  typedef coxgrowth::FieldElement Nested;
  typedef coxgrowth::FieldElement Literal;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 512,
  };

  static inline Real epsilon() { return Real(); }
  static inline Real dummy_precision() { return Real(); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
