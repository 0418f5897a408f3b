#ifndef NETKIT_COHOMOLOGY_HPP
#define NETKIT_COHOMOLOGY_HPP

#include "netkit/graded.hpp"

namespace netkit {

inline constexpr std::size_t kDefaultMaxDegree = 4;

/// (g; rhoL, rhoR) over the descendent Leibniz algebra of T:
/// rhoL(u)y = [Tu, y]_g, rhoR(v)x = [x, Tv]_g - T(rho(x)v).
/// Throws NotAnEmbeddingTensor.
LeibnizRep inducedRep(const TensorMap& t);

/// Loday-Pirashvili coboundary of f in Hom((x)^k L, V), k >= 0:
///   sum_i (-1)^{i+1} rhoL(x_i) f(.., ^x_i, ..) + (-1)^{k+1} rhoR(x_{k+1}) f(x_1..x_k)
///   + sum_{i<j} (-1)^i f(.., ^x_i, .., [x_i, x_j], ..)
MultiMap lodayPirashviliCoboundary(const LeibnizRep& rep, const MultiMap& f,
                                   std::size_t arityCap = kDefaultArityCap);

/// d_T-side coboundary on Hom((x)^k h, g), written out in terms of T, rho and
/// the brackets. Arity 0 holds an element of g. Throws NotAnEmbeddingTensor.
MultiMap partialT(const TensorMap& t, const MultiMap& theta, std::size_t arityCap = kDefaultArityCap);
/// (d_T x)(u) = T rho(x) u - [x, Tu]_g, as a dim(g) x dim(h) matrix.
Matrix partialT(const TensorMap& t, const Vector& x);

/// dim c^k(T): 0, dim g, then dim g * dim h^{k-1}.
std::size_t cochainDim(const TensorMap& t, std::size_t k);

/// Matrix of c^k(T) -> c^{k+1}(T) in the monomial bases (lexicographic in
/// (i_1..i_{k-1}, j)). Throws NotAnEmbeddingTensor.
Matrix differentialMatrix(const TensorMap& t, std::size_t k, std::size_t arityCap = kDefaultArityCap);

struct NETComplex {
  TensorMap tensor;
  std::size_t maxDegree = kDefaultMaxDegree;
  /// differentials[k] : c^k -> c^{k+1}, k = 0..maxDegree
  std::vector<Matrix> differentials;
};

NETComplex buildComplex(const TensorMap& t, std::size_t maxDegree = kDefaultMaxDegree);

struct CohomologyReport {
  std::size_t degree = 0;
  std::size_t dimZ = 0;
  std::size_t dimB = 0;
  std::size_t dimH = 0;
  Subspace cocycleBasis;
  Subspace coboundaryBasis;
};

/// H^k(T) = Z^k / B^k for 1 <= k <= maxDegree, else DegreeOutOfRange.
CohomologyReport cohomology(const TensorMap& t, std::size_t k, std::size_t maxDegree = kDefaultMaxDegree);

/// Coordinates of a k-cochain: an arity-0 map for k = 1, arity k-1 otherwise.
Vector cochainCoordinates(const TensorMap& t, const MultiMap& f, std::size_t k);

/// Whether f - g lies in B^k(T). Throws NotACocycle unless both are
/// k-cocycles.
bool classEquals(const TensorMap& t, const MultiMap& f, const MultiMap& g, std::size_t k,
                 std::size_t maxDegree = kDefaultMaxDegree);

} // namespace netkit

#endif
