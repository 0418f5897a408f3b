#ifndef NETKIT_ALGEBRA_HPP
#define NETKIT_ALGEBRA_HPP

#include "netkit/linalg.hpp"
#include "netkit/report.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace netkit {

/// A bilinear product V x V -> V on a basis: entry (i, j) holds the
/// coordinates of e_i * e_j.
class StructureTable {
public:
  explicit StructureTable(std::size_t dim = 0) : dim_(dim), data_(dim * dim * dim) {}
  /// entries[i][j] is the coordinate vector of e_i * e_j. Missing rows or
  /// entries are not allowed here; fill defaults before calling.
  static StructureTable fromEntries(const std::vector<std::vector<Vector>>& entries);

  std::size_t dim() const { return dim_; }

  std::span<const Rational> at(std::size_t i, std::size_t j) const {
    return {data_.data() + (i * dim_ + j) * dim_, dim_};
  }
  std::span<Rational> at(std::size_t i, std::size_t j) { return {data_.data() + (i * dim_ + j) * dim_, dim_}; }
  void set(std::size_t i, std::size_t j, std::span<const Rational> value);

  /// Bilinear extension to arbitrary vectors.
  Vector apply(std::span<const Rational> x, std::span<const Rational> y) const;
  /// Matrix of y -> e_i * y.
  Matrix leftMultiplication(std::size_t i) const;
  /// Matrix of x -> x * e_j.
  Matrix rightMultiplication(std::size_t j) const;

  StructureTable& operator+=(const StructureTable& o);
  friend StructureTable operator+(StructureTable a, const StructureTable& b) { return a += b; }
  friend bool operator==(const StructureTable& a, const StructureTable& b) = default;

private:
  std::size_t dim_ = 0;
  Vector data_;
};

enum class Flavor { lie, leibniz, unchecked };

std::string flavorName(Flavor f);
Flavor flavorFromString(const std::string& s);

/// Finite-dimensional algebra given by structure constants. The declared
/// flavor is verified on construction: a "lie" algebra that fails
/// antisymmetry or Jacobi, or a "leibniz" one that fails the Leibniz identity,
/// throws FlavorViolation.
class AlgebraSC {
public:
  AlgebraSC() = default;
  AlgebraSC(std::string name, StructureTable table, Flavor flavor);

  static AlgebraSC abelian(std::string name, std::size_t dim);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return table_.dim(); }
  Flavor flavor() const { return flavor_; }
  const StructureTable& table() const { return table_; }

  std::span<const Rational> bracket(std::size_t i, std::size_t j) const { return table_.at(i, j); }
  Vector bracket(std::span<const Rational> x, std::span<const Rational> y) const { return table_.apply(x, y); }
  /// Left multiplication L_x = [x, -]; ad_x for a Lie algebra.
  Matrix ad(std::size_t i) const { return table_.leftMultiplication(i); }
  Matrix ad(std::span<const Rational> x) const;

private:
  std::string name_;
  StructureTable table_;
  Flavor flavor_ = Flavor::unchecked;
};

/// A representation (V; rhoL, rhoR) of a Leibniz algebra, one matrix per
/// basis vector of the algebra.
struct LeibnizRep {
  AlgebraSC algebra;
  std::size_t repDim = 0;
  std::vector<Matrix> rhoL;
  std::vector<Matrix> rhoR;

  Matrix left(std::span<const Rational> x) const;
  Matrix right(std::span<const Rational> x) const;
};

/// Antisymmetry on basis pairs, then Jacobi on basis triples.
Report checkLie(const AlgebraSC& a);
Report checkLeibniz(const AlgebraSC& a);
/// [[e_i, e_j], e_k] = 0 on all triples.
Report checkTwoStepNilpotent(const AlgebraSC& a);
Report checkLeibnizRep(const LeibnizRep& r);

/// Lei(a): the smallest two-sided ideal containing every square [x, x].
/// Seeded by polarization, then closed under left and right multiplication.
Subspace leibnizKernel(const AlgebraSC& a);

struct QuotientLie {
  AlgebraSC algebra;
  /// dim(quotient) x dim(a); the quotient basis is the image of the unit
  /// vectors on the free columns of Lei(a).
  Matrix projection;
};
QuotientLie quotientLie(const AlgebraSC& a);

/// Der(a) inside gl(a), coordinates row-major: D(r, c) at index r * dim + c.
Subspace derivationAlgebra(const AlgebraSC& a);
/// Derivations D with [D e_i, e_j] = 0 for all i, j.
Subspace coherentDerivationAlgebra(const AlgebraSC& a);

/// A subspace of gl(n) closed under commutator, materialized as an abstract
/// Lie algebra on its echelon basis.
struct MatrixLieAlgebra {
  AlgebraSC algebra;
  std::vector<Matrix> basis;
};
MatrixLieAlgebra matrixLieAlgebra(std::string name, const Subspace& matrices, std::size_t n);

/// Direct-sum Lie algebra a (+) b, basis of a first.
AlgebraSC directSum(const AlgebraSC& a, const AlgebraSC& b, std::string name);

/// True iff the two algebras have identical structure constants.
bool sameStructure(const AlgebraSC& a, const AlgebraSC& b);

} // namespace netkit

#endif
