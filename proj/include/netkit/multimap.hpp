#ifndef NETKIT_MULTIMAP_HPP
#define NETKIT_MULTIMAP_HPP

#include "netkit/algebra.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace netkit {

/// Dense multilinear map f : (Q^n)^{(x) p} -> Q^m.
///
/// Coefficients are stored lexicographically in (i_1, ..., i_p, j): the
/// value f(e_{i_1}, ..., e_{i_p}) occupies the slice starting at
/// tupleIndex(i_1..i_p) * m. Arity 0 is allowed and holds a single vector;
/// it hosts the degree-one cochains (elements of g).
class MultiMap {
public:
  MultiMap() = default;
  MultiMap(std::size_t arity, std::size_t domainDim, std::size_t codomainDim);

  /// Arity 1 from a codomainDim x domainDim matrix.
  static MultiMap fromMatrix(const Matrix& m);
  /// Arity 2 from a structure table, domain = codomain.
  static MultiMap fromTable(const StructureTable& t);
  /// Arity 0 holding the vector v.
  static MultiMap constant(const Vector& v, std::size_t domainDim);
  /// Inverse of coefficients().
  static MultiMap fromCoefficients(std::size_t arity, std::size_t domainDim, std::size_t codomainDim,
                                   std::span<const Rational> coeffs);

  std::size_t arity() const { return arity_; }
  /// Degree in the graded Lie algebra: arity - 1.
  long degree() const { return static_cast<long>(arity_) - 1; }
  std::size_t domainDim() const { return domainDim_; }
  std::size_t codomainDim() const { return codomainDim_; }
  /// domainDim^arity
  std::size_t tupleCount() const { return tupleCount_; }

  std::size_t tupleIndex(std::span<const std::size_t> indices) const;
  std::vector<std::size_t> tuple(std::size_t index) const;

  std::span<const Rational> value(std::size_t tupleIdx) const {
    return {coeffs_.data() + tupleIdx * codomainDim_, codomainDim_};
  }
  std::span<Rational> value(std::size_t tupleIdx) {
    return {coeffs_.data() + tupleIdx * codomainDim_, codomainDim_};
  }
  std::span<const Rational> value(std::span<const std::size_t> indices) const { return value(tupleIndex(indices)); }

  /// Flat coefficient vector, the coordinates in the monomial basis.
  const Vector& coefficients() const { return coeffs_; }

  /// Multilinear extension to arbitrary arguments.
  Vector apply(std::span<const Vector> args) const;
  /// out += c * f(e_{idx_1}, ..., v at position slot, ..., e_{idx_p}); the
  /// entry idx[slot] is ignored and restored on return.
  void accumulateWithSlot(std::vector<std::size_t>& idx, std::size_t slot, std::span<const Rational> v,
                          const Rational& c, Vector& out) const;

  Matrix toMatrix() const;
  bool isZero() const { return netkit::isZero(coeffs_); }
  bool sameShape(const MultiMap& o) const {
    return arity_ == o.arity_ && domainDim_ == o.domainDim_ && codomainDim_ == o.codomainDim_;
  }

  MultiMap& operator+=(const MultiMap& o);
  MultiMap& operator-=(const MultiMap& o);
  friend MultiMap operator+(MultiMap a, const MultiMap& b) { return a += b; }
  friend MultiMap operator-(MultiMap a, const MultiMap& b) { return a -= b; }
  friend MultiMap operator*(const Rational& c, MultiMap f);
  friend bool operator==(const MultiMap& a, const MultiMap& b) = default;

private:
  std::size_t arity_ = 0;
  std::size_t domainDim_ = 0;
  std::size_t codomainDim_ = 0;
  std::size_t tupleCount_ = 1;
  Vector coeffs_;
};

/// A permutation of {0, ..., n-1}: images[k] = sigma(k+1) - 1, with its sign.
struct Shuffle {
  std::vector<std::size_t> images;
  int sign = 1;
};

/// All (i, k)-shuffles of {1..i+k}: increasing on the first i and on the last
/// k positions. Ordered lexicographically by the first block; sign is
/// (-1)^inversions. For i = 0 or k = 0 this is the identity alone.
std::vector<Shuffle> shuffles(std::size_t i, std::size_t k);

} // namespace netkit

#endif
