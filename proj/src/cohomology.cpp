#include "netkit/cohomology.hpp"

#include "netkit/errors.hpp"

namespace netkit {

namespace {

Rational signOf(std::size_t exponent) { return exponent % 2 == 0 ? Rational(1) : Rational(-1); }

std::vector<std::size_t> without(const std::vector<std::size_t>& x, std::size_t skip) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < x.size(); ++p)
    if (p != skip) out.push_back(x[p]);
  return out;
}

Vector toVector(std::span<const Rational> s) { return Vector(s.begin(), s.end()); }

} // namespace

LeibnizRep inducedRep(const TensorMap& t) {
  LeibnizRep rep{descendent(t), t.g().dim(), {}, {}};
  const std::size_t m = t.g().dim(), n = t.h().dim();
  for (std::size_t u = 0; u < n; ++u) rep.rhoL.push_back(t.g().ad(t.image(u)));
  for (std::size_t v = 0; v < n; ++v) {
    const Vector tv = t.image(v);
    Matrix r(m, m);
    for (std::size_t x = 0; x < m; ++x) {
      const Vector col = t.g().bracket(unitVector(m, x), tv) - t.apply(t.action().rho(x).column(v));
      for (std::size_t a = 0; a < m; ++a) r(a, x) = col[a];
    }
    rep.rhoR.push_back(std::move(r));
  }
  return rep;
}

MultiMap lodayPirashviliCoboundary(const LeibnizRep& rep, const MultiMap& f, std::size_t arityCap) {
  const std::size_t n = rep.algebra.dim();
  if (f.domainDim() != n || f.codomainDim() != rep.repDim)
    throw DimensionMismatch("lodayPirashviliCoboundary: cochain does not match the representation");
  if (rep.rhoL.size() != n || rep.rhoR.size() != n)
    throw DimensionMismatch("lodayPirashviliCoboundary: representation has the wrong number of matrices");
  const std::size_t k = f.arity();
  if (k + 1 > arityCap)
    throw ArityCapExceeded("lodayPirashviliCoboundary: result arity exceeds cap " + std::to_string(arityCap));

  MultiMap out(k + 1, n, rep.repDim);
  for (std::size_t t = 0; t < out.tupleCount(); ++t) {
    const std::vector<std::size_t> x = out.tuple(t);
    Vector acc(rep.repDim);
    for (std::size_t i = 1; i <= k; ++i)
      addScaled(acc, signOf(i + 1), rep.rhoL[x[i - 1]].apply(f.value(without(x, i - 1))));
    addScaled(acc, signOf(k + 1), rep.rhoR[x[k]].apply(f.value(std::vector<std::size_t>(x.begin(), x.end() - 1))));
    for (std::size_t i = 1; i <= k + 1; ++i)
      for (std::size_t j = i + 1; j <= k + 1; ++j) {
        std::vector<std::size_t> args = without(x, i - 1);
        f.accumulateWithSlot(args, j - 2, rep.algebra.bracket(x[i - 1], x[j - 1]), signOf(i), acc);
      }
    std::copy(acc.begin(), acc.end(), out.value(t).begin());
  }
  return out;
}

MultiMap partialT(const TensorMap& t, const MultiMap& theta, std::size_t arityCap) {
  t.requireEmbeddingTensor("partialT");
  const AlgebraSC& g = t.g();
  const AlgebraSC& h = t.h();
  const std::size_t m = g.dim(), n = h.dim();
  if (theta.domainDim() != n || theta.codomainDim() != m)
    throw DimensionMismatch("partialT: cochain is not (x)h -> g");
  const std::size_t k = theta.arity();
  if (k + 1 > arityCap) throw ArityCapExceeded("partialT: result arity exceeds cap " + std::to_string(arityCap));

  MultiMap out(k + 1, n, m);
  for (std::size_t s = 0; s < out.tupleCount(); ++s) {
    const std::vector<std::size_t> u = out.tuple(s);
    Vector acc(m);
    for (std::size_t i = 1; i <= k; ++i)
      addScaled(acc, signOf(i + 1), g.bracket(t.image(u[i - 1]), theta.value(without(u, i - 1))));

    const auto head = theta.value(std::vector<std::size_t>(u.begin(), u.end() - 1));
    addScaled(acc, signOf(k + 1), g.bracket(head, t.image(u[k])));
    addScaled(acc, signOf(k), t.apply(t.action().rho(head).column(u[k])));

    for (std::size_t i = 1; i <= k + 1; ++i) {
      const Matrix rhoTu = t.action().rho(t.image(u[i - 1]));
      for (std::size_t j = i + 1; j <= k + 1; ++j) {
        std::vector<std::size_t> args = without(u, i - 1);
        const Vector w = rhoTu.column(u[j - 1]) + toVector(h.bracket(u[i - 1], u[j - 1]));
        theta.accumulateWithSlot(args, j - 2, w, signOf(i), acc);
      }
    }
    std::copy(acc.begin(), acc.end(), out.value(s).begin());
  }
  return out;
}

Matrix partialT(const TensorMap& t, const Vector& x) {
  t.requireEmbeddingTensor("partialT");
  if (x.size() != t.g().dim()) throw DimensionMismatch("partialT: element has the wrong length");
  return t.matrix() * t.action().rho(x) - t.g().ad(x) * t.matrix();
}

std::size_t cochainDim(const TensorMap& t, std::size_t k) {
  if (k == 0) return 0;
  std::size_t d = t.g().dim();
  for (std::size_t i = 1; i < k; ++i) d *= t.h().dim();
  return d;
}

Matrix differentialMatrix(const TensorMap& t, std::size_t k, std::size_t arityCap) {
  t.requireEmbeddingTensor("differentialMatrix");
  const std::size_t m = t.g().dim(), n = t.h().dim();
  const std::size_t rows = cochainDim(t, k + 1), cols = cochainDim(t, k);
  Matrix d(rows, cols);
  if (k == 0) return d;
  if (k == 1) {
    for (std::size_t c = 0; c < cols; ++c) {
      const Vector col = MultiMap::fromMatrix(partialT(t, unitVector(m, c))).coefficients();
      for (std::size_t r = 0; r < rows; ++r) d(r, c) = col[r];
    }
    return d;
  }
  for (std::size_t c = 0; c < cols; ++c) {
    Vector basis(cols);
    basis[c] = 1;
    const MultiMap img = partialT(t, MultiMap::fromCoefficients(k - 1, n, m, basis), arityCap);
    for (std::size_t r = 0; r < rows; ++r) d(r, c) = img.coefficients()[r];
  }
  return d;
}

NETComplex buildComplex(const TensorMap& t, std::size_t maxDegree) {
  NETComplex cx{t, maxDegree, {}};
  for (std::size_t k = 0; k <= maxDegree; ++k) cx.differentials.push_back(differentialMatrix(t, k, maxDegree));
  return cx;
}

CohomologyReport cohomology(const TensorMap& t, std::size_t k, std::size_t maxDegree) {
  if (k < 1 || k > maxDegree)
    throw DegreeOutOfRange("cohomology: degree " + std::to_string(k) + " outside 1.." + std::to_string(maxDegree));
  t.requireEmbeddingTensor("cohomology");
  CohomologyReport rep;
  rep.degree = k;
  rep.cocycleBasis = kernelBasis(differentialMatrix(t, k, maxDegree));
  rep.coboundaryBasis = k == 1 ? Subspace::span(cochainDim(t, 1), {}) : imageOf(differentialMatrix(t, k - 1, maxDegree));
  rep.dimZ = rep.cocycleBasis.dim();
  rep.dimB = rep.coboundaryBasis.dim();
  rep.dimH = quotientDim(rep.cocycleBasis, rep.coboundaryBasis);
  return rep;
}

Vector cochainCoordinates(const TensorMap& t, const MultiMap& f, std::size_t k) {
  if (k == 0) throw DegreeOutOfRange("cochainCoordinates: c^0 is zero");
  const std::size_t arity = k == 1 ? 0 : k - 1;
  if (f.arity() != arity || f.codomainDim() != t.g().dim() || (arity > 0 && f.domainDim() != t.h().dim()))
    throw DimensionMismatch("cochainCoordinates: map is not a " + std::to_string(k) + "-cochain");
  return f.coefficients();
}

bool classEquals(const TensorMap& t, const MultiMap& f, const MultiMap& g, std::size_t k, std::size_t maxDegree) {
  if (k < 1 || k > maxDegree)
    throw DegreeOutOfRange("classEquals: degree " + std::to_string(k) + " outside 1.." + std::to_string(maxDegree));
  const Matrix dk = differentialMatrix(t, k, maxDegree);
  const Vector cf = cochainCoordinates(t, f, k), cg = cochainCoordinates(t, g, k);
  if (!isZero(dk.apply(cf))) throw NotACocycle("classEquals: first argument is not a cocycle");
  if (!isZero(dk.apply(cg))) throw NotACocycle("classEquals: second argument is not a cocycle");
  if (k == 1) return isZero(cf - cg);
  return imageOf(differentialMatrix(t, k - 1, maxDegree)).contains(cf - cg);
}

} // namespace netkit
