#pragma once

#include <memory>

#include "coxgrowth/config.hpp"
#include "coxgrowth/diagram.hpp"
#include "coxgrowth/field.hpp"

namespace coxgrowth {

using FMatrix = MatrixX<FieldElement>;
using FVector = VectorX<FieldElement>;

/// The number field Q(2cos(pi/L)) generated by the diagram's finite
/// labels, L = lcm of finite labels >= 3. Throws CapError beyond the
/// degree cap.
std::shared_ptr<const NumberField> diagram_field(const CoxeterDiagram& d,
                                                 unsigned degree_cap = 64);

/// Symmetric bilinear form of the geometric representation:
/// B(alpha_i, alpha_j) = -cos(pi / m_ij), exactly.
FMatrix gram_matrix(const CoxeterDiagram& d,
                    const std::shared_ptr<const NumberField>& field);

/// (u|v) = u^T B v.
FieldElement inner(const FMatrix& B, const FVector& u, const FVector& v);

/// sigma_i(v) = v - 2 (v|alpha_i) alpha_i. Only coordinate i changes.
FVector apply_reflection(const FMatrix& B, int i, const FVector& v);

/// i-th simple root in the simple-root basis.
FVector simple_root(int rank, int i);

}  // namespace coxgrowth
