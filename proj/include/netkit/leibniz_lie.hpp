#ifndef NETKIT_LEIBNIZ_LIE_HPP
#define NETKIT_LEIBNIZ_LIE_HPP

#include "netkit/tensor.hpp"

namespace netkit {

/// A Lie algebra (h, [-,-]_h) with an extra product x |> y, stored as a
/// structure table: triangle.at(i, j) = e_i |> e_j.
struct LeibnizLie {
  AlgebraSC lie;
  StructureTable triangle;

  std::size_t dim() const { return lie.dim(); }
  /// L_x = x |> -
  Matrix leftMultiplication(std::span<const Rational> x) const;
};

/// Both axiom families on all basis triples:
///   x|>(y|>z) = (x|>y)|>z + y|>(x|>z) + [x,y]_h|>z
///   x|>[y,z]_h = 0,  [x|>y, z]_h = 0
Report checkLeibnizLie(const LeibnizLie& l);

/// [x,y] = x|>y + [x,y]_h. Throws NotLeibnizLie.
AlgebraSC subadjacent(const LeibnizLie& l);

/// (h; L, 0) as a representation of the subadjacent Leibniz algebra.
LeibnizRep leftMultiplicationRep(const LeibnizLie& l);

/// u |> v = rho(Tu)v. Throws NotAnEmbeddingTensor.
LeibnizLie inducedLeibnizLie(const TensorMap& t);

/// pr : h -> (h^Lei)_Lie with rho(pr u)v = u |> v. Throws NotLeibnizLie, or
/// ActionIllDefined if some Leibniz-kernel basis vector acts nontrivially.
TensorMap quotientProjectionNET(const LeibnizLie& l);

/// L : h -> Der'(h) with the natural action of Der'(h) on h. Throws
/// NotLeibnizLie, or NotCoherentDerivation if some L_{e_i} is not a coherent
/// derivation.
TensorMap ellNET(const LeibnizLie& l);

/// Homomorphism checks for phi : (h, |>') -> (h, |>) reported separately,
/// since a Leibniz-Lie morphism may be read with either bracket.
Report checkTrianglePreserved(const LeibnizLie& source, const LeibnizLie& target, const Matrix& phi);
Report checkLieBracketPreserved(const LeibnizLie& source, const LeibnizLie& target, const Matrix& phi);

} // namespace netkit

#endif
