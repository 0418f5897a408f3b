#include "netkit/leibniz_lie.hpp"

#include "netkit/errors.hpp"

namespace netkit {

Matrix LeibnizLie::leftMultiplication(std::span<const Rational> x) const {
  const std::size_t n = dim();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    if (!x[i].isZero()) m += x[i] * triangle.leftMultiplication(i);
  return m;
}

Report checkLeibnizLie(const LeibnizLie& l) {
  const std::size_t n = l.dim();
  if (l.triangle.dim() != n) throw DimensionMismatch("Leibniz-Lie product and Lie bracket differ in dimension");
  const StructureTable& tri = l.triangle;
  const AlgebraSC& h = l.lie;

  Report rep{"leibniz-lie", {}, {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector ei = unitVector(n, i), ej = unitVector(n, j), ek = unitVector(n, k);
        Vector r = tri.apply(ei, tri.at(j, k));
        addScaled(r, -1, tri.apply(tri.at(i, j), ek));
        addScaled(r, -1, tri.apply(ej, tri.at(i, k)));
        addScaled(r, -1, tri.apply(h.bracket(i, j), ek));
        rep.require("post-1", {i, j, k}, std::move(r));
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        rep.require("post-2-left", {i, j, k}, tri.apply(unitVector(n, i), h.bracket(j, k)));
        rep.require("post-2-bracket", {i, j, k}, h.bracket(tri.at(i, j), unitVector(n, k)));
      }
  return rep;
}

namespace {

void requireLeibnizLie(const LeibnizLie& l, const char* operation) {
  if (!checkLeibnizLie(l).passed())
    throw NotLeibnizLie(std::string(operation) + ": input fails the Leibniz-Lie axioms");
}

} // namespace

AlgebraSC subadjacent(const LeibnizLie& l) {
  requireLeibnizLie(l, "subadjacent");
  return AlgebraSC(l.lie.name() + "_Lei", l.triangle + l.lie.table(), Flavor::leibniz);
}

LeibnizRep leftMultiplicationRep(const LeibnizLie& l) {
  const std::size_t n = l.dim();
  LeibnizRep r{subadjacent(l), n, {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    r.rhoL.push_back(l.triangle.leftMultiplication(i));
    r.rhoR.emplace_back(n, n);
  }
  return r;
}

LeibnizLie inducedLeibnizLie(const TensorMap& t) {
  t.requireEmbeddingTensor("inducedLeibnizLie");
  const std::size_t n = t.h().dim();
  StructureTable tri(n);
  for (std::size_t u = 0; u < n; ++u) {
    const Matrix rhoTu = t.action().rho(t.image(u));
    for (std::size_t v = 0; v < n; ++v) tri.set(u, v, rhoTu.column(v));
  }
  return {t.h(), std::move(tri)};
}

TensorMap quotientProjectionNET(const LeibnizLie& l) {
  const AlgebraSC lei = subadjacent(l);
  const Subspace kernel = leibnizKernel(lei);
  for (const Vector& k : kernel.basis())
    if (!l.leftMultiplication(k).isZero())
      throw ActionIllDefined("quotientProjectionNET: a Leibniz-kernel vector acts nontrivially through |>");

  QuotientLie q = quotientLie(lei);
  std::vector<Matrix> rho;
  for (std::size_t c : kernel.freeColumns()) rho.push_back(l.triangle.leftMultiplication(c));
  return TensorMap(ActionMap(std::move(q.algebra), l.lie, std::move(rho)), std::move(q.projection));
}

TensorMap ellNET(const LeibnizLie& l) {
  requireLeibnizLie(l, "ellNET");
  const std::size_t n = l.dim();
  const Subspace cder = coherentDerivationAlgebra(l.lie);
  MatrixLieAlgebra der = matrixLieAlgebra("CDer(" + l.lie.name() + ")", cder, n);

  std::vector<Vector> columns;
  for (std::size_t i = 0; i < n; ++i) {
    auto coords = cder.coordinates(l.triangle.leftMultiplication(i).vectorize());
    if (!coords)
      throw NotCoherentDerivation("ellNET: L_e" + std::to_string(i + 1) + " is not a coherent derivation");
    columns.push_back(std::move(*coords));
  }
  Matrix t = Matrix::fromColumns(columns, der.algebra.dim());
  return TensorMap(ActionMap(std::move(der.algebra), l.lie, std::move(der.basis)), std::move(t));
}

Report checkTrianglePreserved(const LeibnizLie& source, const LeibnizLie& target, const Matrix& phi) {
  const std::size_t n = source.dim();
  if (target.dim() != n || phi.rows() != n || phi.cols() != n)
    throw DimensionMismatch("checkTrianglePreserved: dimension mismatch");
  Report rep{"triangle-preserved", {}, {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rep.require("phi(x|>y) = phi(x)|>phi(y)", {i, j},
                  phi.apply(source.triangle.at(i, j)) - target.triangle.apply(phi.column(i), phi.column(j)));
  return rep;
}

Report checkLieBracketPreserved(const LeibnizLie& source, const LeibnizLie& target, const Matrix& phi) {
  const std::size_t n = source.dim();
  if (target.dim() != n || phi.rows() != n || phi.cols() != n)
    throw DimensionMismatch("checkLieBracketPreserved: dimension mismatch");
  Report rep{"lie-bracket-preserved", {}, {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rep.require("phi[x,y] = [phi x, phi y]", {i, j},
                  phi.apply(source.lie.bracket(i, j)) - target.lie.bracket(phi.column(i), phi.column(j)));
  return rep;
}

} // namespace netkit
