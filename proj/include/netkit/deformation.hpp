#ifndef NETKIT_DEFORMATION_HPP
#define NETKIT_DEFORMATION_HPP

#include "netkit/cohomology.hpp"

#include <optional>

namespace netkit {

/// T_t = T + t * direction
struct DeformationDirection {
  TensorMap base;
  Matrix direction;
};

struct NijenhuisCandidate {
  TensorMap base;
  Vector element;
};

/// Coefficients of t and t^2 in the NET identity for T + t D, on all basis
/// pairs:
///   deform1: [Tu, Dv] + [Du, Tv] = T(rho(Du)v) + D(rho(Tu)v + [u,v]_h)
///   deform2: [Du, Dv] = D(rho(Du)v)
/// The probe route checkNET(T + tD), t in {1, 2}, is also evaluated; the
/// notes record whether both routes agree.
Report checkLinearDeformation(const DeformationDirection& d);

/// Whether (Id + t ad_x, Id + t rho(x)) maps T + t*source.direction to
/// T + t*target.direction:
///   deforiso1: (source - target)(u) = T rho(x) u - [x, Tu]
///   deforiso2: target(rho(x) u) = [x, source(u)]
///   nij1, nij3 as in checkNijenhuisElement.
Report checkEquivalence(const DeformationDirection& source, const DeformationDirection& target, const Vector& x);

/// nij1: [[x,e_i],[x,e_j]] = 0; nij3: rho([x,e_i]) rho(x) = 0;
/// nijenhuis: [x, T rho(x) e_u - [x, T e_u]] = 0.
Report checkNijenhuisElement(const NijenhuisCandidate& c);

/// D = d_T x, u -> T rho(x) u - [x, Tu]. Throws NotNijenhuis.
DeformationDirection trivialDeformationFromNijenhuis(const NijenhuisCandidate& c);

/// (Id + t ad_x)^{-1} T (Id + t rho(x)), or nothing when Id + t ad_x is
/// singular.
std::optional<Matrix> conjugatedTensor(const TensorMap& t, const Vector& x, const Rational& probe);

/// [Nu, Nv] = N([Nu, v] + [u, Nv] - N[u, v]) on all basis pairs.
Report checkNijenhuisOperator(const AlgebraSC& a, const Matrix& n);

} // namespace netkit

#endif
