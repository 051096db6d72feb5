#include "coxgrowth/algebra.hpp"

#include "coxgrowth/error.hpp"

namespace coxgrowth {

std::shared_ptr<const NumberField> diagram_field(const CoxeterDiagram& d,
                                                 unsigned degree_cap) {
  unsigned L = d.finite_label_lcm();
  auto probe = minimal_polynomial_2cos(L);
  unsigned degree = static_cast<unsigned>(probe.size()) - 1;
  if (degree > degree_cap)
    throw CapError("field degree " + std::to_string(degree) +
                   " for Q(2cos(pi/" + std::to_string(L) +
                   ")) exceeds cap " + std::to_string(degree_cap));
  return NumberField::make(L);
}

FMatrix gram_matrix(const CoxeterDiagram& d,
                    const std::shared_ptr<const NumberField>& field) {
  const int n = d.rank;
  FMatrix B(n, n);
  const FieldElement half(Rat(1, 2));
  for (int i = 0; i < n; ++i) {
    B(i, i) = FieldElement(1);
    for (int j = i + 1; j < n; ++j) {
      int m = d.label(i, j);
      FieldElement entry;
      if (m == kInfiniteLabel) {
        entry = FieldElement(-1);
      } else if (m == 2) {
        entry = FieldElement(0);
      } else {
        // -cos(pi/m) = -c_m / 2
        entry = -(half * two_cos_pi_over(field, static_cast<unsigned>(m)));
      }
      B(i, j) = entry;
      B(j, i) = entry;
    }
  }
  return B;
}

FieldElement inner(const FMatrix& B, const FVector& u, const FVector& v) {
  const int n = static_cast<int>(B.rows());
  if (u.size() != n || v.size() != n)
    throw InputError("inner: dimension mismatch");
  FieldElement acc;
  for (int i = 0; i < n; ++i) {
    if (u(i).is_zero()) continue;
    FieldElement row;
    for (int j = 0; j < n; ++j) {
      if (v(j).is_zero()) continue;
      row += B(i, j) * v(j);
    }
    acc += u(i) * row;
  }
  return acc;
}

FVector apply_reflection(const FMatrix& B, int i, const FVector& v) {
  const int n = static_cast<int>(B.rows());
  if (i < 0 || i >= n) throw InputError("apply_reflection: index out of range");
  FVector alpha = simple_root(n, i);
  FieldElement coef = inner(B, v, alpha);
  FVector out = v;
  out(i) -= (FieldElement(2) * coef);
  return out;
}

FVector simple_root(int rank, int i) {
  FVector e(rank);
  for (int k = 0; k < rank; ++k) e(k) = FieldElement(0);
  e(i) = FieldElement(1);
  return e;
}

}  // namespace coxgrowth
