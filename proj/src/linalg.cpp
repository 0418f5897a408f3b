#include "netkit/linalg.hpp"

#include "netkit/errors.hpp"

#include <algorithm>
#include <string>

namespace netkit {

Vector zeroVector(std::size_t n) { return Vector(n); }

Vector unitVector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

bool isZero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.isZero(); });
}

void addScaled(Vector& out, const Rational& c, std::span<const Rational> v) {
  if (out.size() != v.size()) throw DimensionMismatch("addScaled: length mismatch");
  if (c.isZero()) return;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].isZero()) out[i] += c * v[i];
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector r = a;
  addScaled(r, 1, b);
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  Vector r = a;
  addScaled(r, -1, b);
  return r;
}

Vector operator*(const Rational& c, const Vector& v) {
  Vector r(v.size());
  addScaled(r, c, v);
  return r;
}

// ---------------------------------------------------------------- Matrix

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::fromRows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("Matrix::fromRows: ragged rows");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  return m;
}

Matrix Matrix::fromColumns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionMismatch("Matrix::fromColumns: ragged columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::unvectorize(std::span<const Rational> v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw DimensionMismatch("Matrix::unvectorize: wrong length");
  Matrix m(rows, cols);
  std::copy(v.begin(), v.end(), m.data_.begin());
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw DimensionMismatch("Matrix::apply: vector length " + std::to_string(v.size()) +
                                                 " vs " + std::to_string(cols_) + " columns");
  Vector out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].isZero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& a = (*this)(r, c);
      if (!a.isZero()) out[r] += a * v[c];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::isZero() const { return netkit::isZero(data_); }

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("Matrix +: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("Matrix -: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    throw DimensionMismatch("Matrix *: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " times " +
                            std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.isZero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (!bkj.isZero()) p(i, j) += aik * bkj;
      }
    }
  return p;
}

Matrix operator*(const Rational& c, Matrix m) {
  for (auto& x : m.data_) x *= c;
  return m;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

// ---------------------------------------------------------------- elimination

RowEchelon rref(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col).isZero()) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t c = col; c < a.cols(); ++c) std::swap(a(p, c), a(row, c));
    const Rational inv = Rational(1) / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).isZero()) continue;
      const Rational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (!a(row, c).isZero()) a(r, c) -= f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse: matrix not square");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const RowEchelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::span(std::size_t ambientDim, const std::vector<Vector>& vectors) {
  Subspace s(ambientDim);
  if (vectors.empty()) return s;
  const RowEchelon e = rref(Matrix::fromRows(vectors, ambientDim));
  s.pivots_ = e.pivots;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    const auto row = e.reduced.row(r);
    s.basis_.emplace_back(row.begin(), row.end());
  }
  return s;
}

Subspace Subspace::full(std::size_t ambientDim) {
  std::vector<Vector> units;
  for (std::size_t i = 0; i < ambientDim; ++i) units.push_back(unitVector(ambientDim, i));
  return span(ambientDim, units);
}

std::vector<std::size_t> Subspace::freeColumns() const {
  std::vector<std::size_t> free;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
      continue;
    }
    free.push_back(c);
  }
  return free;
}

Vector Subspace::reduce(std::span<const Rational> v) const {
  if (v.size() != ambient_) throw DimensionMismatch("Subspace::reduce: vector length mismatch");
  Vector r(v.begin(), v.end());
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Rational c = r[pivots_[k]];
    if (!c.isZero()) addScaled(r, -c, basis_[k]);
  }
  return r;
}

bool Subspace::contains(std::span<const Rational> v) const { return isZero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("Subspace::contains: ambient dimension mismatch");
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vector& b) { return contains(b); });
}

std::optional<Vector> Subspace::coordinates(std::span<const Rational> v) const {
  if (!contains(v)) return std::nullopt;
  Vector coords(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) coords[k] = v[pivots_[k]];
  return coords;
}

Subspace Subspace::join(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("Subspace::join: ambient dimension mismatch");
  std::vector<Vector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, all);
}

Subspace kernelBasis(const Matrix& m) {
  const RowEchelon e = rref(m);
  std::vector<bool> isPivot(m.cols(), false);
  for (std::size_t p : e.pivots) isPivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (isPivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), basis);
}

Subspace imageOf(const Matrix& m) {
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return Subspace::span(m.rows(), cols);
}

std::size_t quotientDim(const Subspace& big, const Subspace& small) {
  if (!big.contains(small)) throw NotASubspace("quotientDim: the smaller space is not contained in the larger");
  return big.dim() - small.dim();
}

} // namespace netkit
