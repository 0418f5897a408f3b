#ifndef NETKIT_LINALG_HPP
#define NETKIT_LINALG_HPP

#include "netkit/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace netkit {

using Vector = std::vector<Rational>;

Vector zeroVector(std::size_t n);
Vector unitVector(std::size_t n, std::size_t i);
bool isZero(std::span<const Rational> v);
/// out += c * v
void addScaled(Vector& out, const Rational& c, std::span<const Rational> v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& c, const Vector& v);

/// Dense row-major matrix of rationals.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix fromRows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix fromColumns(const std::vector<Vector>& cols, std::size_t rows);
  /// Inverse of vectorize(): entries read row-major.
  static Matrix unvectorize(std::span<const Rational> v, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;
  /// Row-major flattening; the coordinate order used for spaces of matrices.
  const Vector& vectorize() const { return data_; }

  Vector apply(std::span<const Rational> v) const;
  Matrix transpose() const;
  bool isZero() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& c, Matrix m);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

/// AB - BA
Matrix commutator(const Matrix& a, const Matrix& b);

/// Exact inverse, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form by Gauss-Jordan elimination; the pivot of each
/// row is its first nonzero column.
RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// A linear subspace of Q^n held by its reduced row-echelon basis, which makes
/// equality a plain comparison of bases.
class Subspace {
public:
  explicit Subspace(std::size_t ambientDim = 0) : ambient_(ambientDim) {}

  static Subspace span(std::size_t ambientDim, const std::vector<Vector>& vectors);
  static Subspace full(std::size_t ambientDim);

  std::size_t ambientDim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Non-pivot coordinates, in increasing order. The unit vectors on these
  /// columns span the canonical complement.
  std::vector<std::size_t> freeColumns() const;

  /// v minus its component along the echelon basis; zero iff v is a member.
  Vector reduce(std::span<const Rational> v) const;
  bool contains(std::span<const Rational> v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the echelon basis, or nullopt if v is not a member.
  std::optional<Vector> coordinates(std::span<const Rational> v) const;

  Subspace join(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}
Subspace kernelBasis(const Matrix& m);
/// Column space of m.
Subspace imageOf(const Matrix& m);
/// dim(big) - dim(small); throws NotASubspace unless small is contained in big.
std::size_t quotientDim(const Subspace& big, const Subspace& small);

} // namespace netkit

#endif
