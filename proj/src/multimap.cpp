#include "netkit/multimap.hpp"

#include "netkit/errors.hpp"

namespace netkit {

MultiMap::MultiMap(std::size_t arity, std::size_t domainDim, std::size_t codomainDim)
    : arity_(arity), domainDim_(domainDim), codomainDim_(codomainDim) {
  for (std::size_t k = 0; k < arity; ++k) tupleCount_ *= domainDim;
  coeffs_.assign(tupleCount_ * codomainDim, Rational());
}

MultiMap MultiMap::fromMatrix(const Matrix& m) {
  MultiMap f(1, m.cols(), m.rows());
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) f.value(i)[j] = m(j, i);
  return f;
}

MultiMap MultiMap::fromTable(const StructureTable& t) {
  const std::size_t n = t.dim();
  MultiMap f(2, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto v = t.at(i, j);
      std::copy(v.begin(), v.end(), f.value(i * n + j).begin());
    }
  return f;
}

MultiMap MultiMap::constant(const Vector& v, std::size_t domainDim) {
  MultiMap f(0, domainDim, v.size());
  f.coeffs_ = v;
  return f;
}

MultiMap MultiMap::fromCoefficients(std::size_t arity, std::size_t domainDim, std::size_t codomainDim,
                                    std::span<const Rational> coeffs) {
  MultiMap f(arity, domainDim, codomainDim);
  if (coeffs.size() != f.coeffs_.size())
    throw DimensionMismatch("MultiMap::fromCoefficients: expected " + std::to_string(f.coeffs_.size()) +
                            " coefficients, got " + std::to_string(coeffs.size()));
  f.coeffs_.assign(coeffs.begin(), coeffs.end());
  return f;
}

std::size_t MultiMap::tupleIndex(std::span<const std::size_t> indices) const {
  if (indices.size() != arity_) throw DimensionMismatch("MultiMap: wrong number of arguments");
  std::size_t t = 0;
  for (std::size_t i : indices) t = t * domainDim_ + i;
  return t;
}

std::vector<std::size_t> MultiMap::tuple(std::size_t index) const {
  std::vector<std::size_t> idx(arity_);
  for (std::size_t k = arity_; k-- > 0;) {
    idx[k] = index % domainDim_;
    index /= domainDim_;
  }
  return idx;
}

Vector MultiMap::apply(std::span<const Vector> args) const {
  if (args.size() != arity_) throw DimensionMismatch("MultiMap::apply: wrong number of arguments");
  for (const Vector& a : args)
    if (a.size() != domainDim_) throw DimensionMismatch("MultiMap::apply: argument length mismatch");
  Vector out(codomainDim_);
  std::vector<std::size_t> idx(arity_);
  // Odometer over the nonzero coordinates of each argument.
  auto recurse = [&](auto&& self, std::size_t pos, const Rational& coef) -> void {
    if (pos == arity_) {
      addScaled(out, coef, value(tupleIndex(idx)));
      return;
    }
    for (std::size_t i = 0; i < domainDim_; ++i) {
      if (args[pos][i].isZero()) continue;
      idx[pos] = i;
      self(self, pos + 1, coef * args[pos][i]);
    }
  };
  recurse(recurse, 0, Rational(1));
  return out;
}

void MultiMap::accumulateWithSlot(std::vector<std::size_t>& idx, std::size_t slot, std::span<const Rational> v,
                                  const Rational& c, Vector& out) const {
  if (c.isZero()) return;
  const std::size_t saved = idx[slot];
  for (std::size_t i = 0; i < domainDim_; ++i) {
    if (v[i].isZero()) continue;
    idx[slot] = i;
    addScaled(out, c * v[i], value(tupleIndex(idx)));
  }
  idx[slot] = saved;
}

Matrix MultiMap::toMatrix() const {
  if (arity_ != 1) throw DimensionMismatch("MultiMap::toMatrix: arity must be 1");
  Matrix m(codomainDim_, domainDim_);
  for (std::size_t i = 0; i < domainDim_; ++i)
    for (std::size_t j = 0; j < codomainDim_; ++j) m(j, i) = value(i)[j];
  return m;
}

MultiMap& MultiMap::operator+=(const MultiMap& o) {
  if (!sameShape(o)) throw DimensionMismatch("MultiMap +: shape mismatch");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

MultiMap& MultiMap::operator-=(const MultiMap& o) {
  if (!sameShape(o)) throw DimensionMismatch("MultiMap -: shape mismatch");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

MultiMap operator*(const Rational& c, MultiMap f) {
  for (auto& x : f.coeffs_) x *= c;
  return f;
}

std::vector<Shuffle> shuffles(std::size_t i, std::size_t k) {
  const std::size_t n = i + k;
  std::vector<Shuffle> out;
  std::vector<std::size_t> first(i);
  for (std::size_t a = 0; a < i; ++a) first[a] = a;
  for (;;) {
    Shuffle s;
    std::vector<bool> taken(n, false);
    for (std::size_t a : first) {
      s.images.push_back(a);
      taken[a] = true;
    }
    for (std::size_t b = 0; b < n; ++b)
      if (!taken[b]) s.images.push_back(b);
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (s.images[a] > s.images[b]) ++inversions;
    s.sign = inversions % 2 ? -1 : 1;
    out.push_back(std::move(s));

    // Next i-combination of {0..n-1} in lexicographic order.
    std::size_t p = i;
    while (p > 0 && first[p - 1] == n - i + (p - 1)) --p;
    if (p == 0) break;
    ++first[p - 1];
    for (std::size_t q = p; q < i; ++q) first[q] = first[q - 1] + 1;
  }
  return out;
}

} // namespace netkit
