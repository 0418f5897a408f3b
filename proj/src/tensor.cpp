#include "netkit/tensor.hpp"

#include "netkit/errors.hpp"

namespace netkit {

ActionMap::ActionMap(AlgebraSC source, AlgebraSC target, std::vector<Matrix> rho)
    : source_(std::move(source)), target_(std::move(target)), rho_(std::move(rho)) {
  if (rho_.size() != source_.dim())
    throw DimensionMismatch("action needs " + std::to_string(source_.dim()) + " matrices, got " +
                            std::to_string(rho_.size()));
  for (const Matrix& m : rho_)
    if (m.rows() != target_.dim() || m.cols() != target_.dim())
      throw DimensionMismatch("action matrices must be " + std::to_string(target_.dim()) + "x" +
                              std::to_string(target_.dim()));
}

Matrix ActionMap::rho(std::span<const Rational> x) const {
  if (x.size() != source_.dim()) throw DimensionMismatch("rho: vector length mismatch");
  Matrix m(target_.dim(), target_.dim());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].isZero()) m += x[i] * rho_[i];
  return m;
}

ActionMap adjointAction(const AlgebraSC& g) {
  std::vector<Matrix> rho;
  for (std::size_t i = 0; i < g.dim(); ++i) rho.push_back(g.ad(i));
  return ActionMap(g, g, std::move(rho));
}

TensorMap::TensorMap(ActionMap action, Matrix matrix) : action_(std::move(action)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != g().dim() || matrix_.cols() != h().dim())
    throw DimensionMismatch("tensor matrix must be " + std::to_string(g().dim()) + "x" + std::to_string(h().dim()) +
                            ", got " + std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()));
}

bool TensorMap::isEmbeddingTensor() const {
  signed char state = verified_.load();
  if (state < 0) {
    state = checkNET(*this).passed() ? 1 : 0;
    verified_.store(state);
  }
  return state == 1;
}

void TensorMap::requireEmbeddingTensor(const char* operation) const {
  if (!isEmbeddingTensor())
    throw NotAnEmbeddingTensor(std::string(operation) + ": the tensor fails the nonabelian embedding tensor identity");
}

Report checkCoherentAction(const ActionMap& a) {
  Report rep{"coherent-action", {}, {}};
  const AlgebraSC& g = a.source();
  const AlgebraSC& h = a.target();
  const std::size_t m = g.dim(), n = h.dim();

  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) {
        const Vector eu = unitVector(n, u), ev = unitVector(n, v);
        Vector r = a.rho(x).apply(h.bracket(u, v));
        addScaled(r, -1, h.bracket(a.rho(x).apply(eu), ev));
        addScaled(r, -1, h.bracket(eu, a.rho(x).apply(ev)));
        rep.require("derivation", {x, u, v}, std::move(r));
      }
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      rep.require("homomorphism", {x, y}, (a.rho(g.bracket(x, y)) - commutator(a.rho(x), a.rho(y))).vectorize());
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        rep.require("coherence", {x, u, v}, h.bracket(a.rho(x).column(u), unitVector(n, v)));
  return rep;
}

Report checkNET(const TensorMap& t) {
  Report rep{"embedding-tensor", {}, {}};
  const std::size_t n = t.h().dim();
  std::vector<Vector> images;
  for (std::size_t j = 0; j < n; ++j) images.push_back(t.image(j));
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix rhoTi = t.action().rho(images[i]);
    for (std::size_t j = 0; j < n; ++j) {
      Vector inner = rhoTi.column(j);
      addScaled(inner, 1, t.h().bracket(i, j));
      Vector r = t.g().bracket(images[i], images[j]);
      addScaled(r, -1, t.apply(inner));
      rep.require("net-identity", {i, j}, std::move(r));
    }
  }
  return rep;
}

Report checkNETHomomorphism(const TensorMap& tTarget, const TensorMap& tSource, const Matrix& phiG,
                            const Matrix& phiH) {
  const AlgebraSC& g = tTarget.g();
  const AlgebraSC& h = tTarget.h();
  const std::size_t m = g.dim(), n = h.dim();
  if (tSource.g().dim() != m || tSource.h().dim() != n || tSource.action().rho() != tTarget.action().rho())
    throw DimensionMismatch("homomorphism check needs both tensors over the same action");
  if (phiG.rows() != m || phiG.cols() != m || phiH.rows() != n || phiH.cols() != n)
    throw DimensionMismatch("phiG must be dim(g) square and phiH dim(h) square");

  Report rep{"net-homomorphism", {}, {}};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vector r = phiG.apply(g.bracket(i, j));
      addScaled(r, -1, g.bracket(phiG.column(i), phiG.column(j)));
      rep.require("phiG-endomorphism", {i, j}, std::move(r));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector r = phiH.apply(h.bracket(i, j));
      addScaled(r, -1, h.bracket(phiH.column(i), phiH.column(j)));
      rep.require("phiH-endomorphism", {i, j}, std::move(r));
    }
  const Matrix lhs = tTarget.matrix() * phiH;
  const Matrix rhs = phiG * tSource.matrix();
  for (std::size_t u = 0; u < n; ++u) rep.require("tensor-intertwining", {u}, lhs.column(u) - rhs.column(u));
  for (std::size_t x = 0; x < m; ++x) {
    const Matrix l = phiH * tTarget.action().rho(x);
    const Matrix r = tTarget.action().rho(phiG.column(x)) * phiH;
    for (std::size_t u = 0; u < n; ++u) rep.require("action-intertwining", {x, u}, l.column(u) - r.column(u));
  }
  return rep;
}

namespace {

StructureTable hemisemidirectTable(const ActionMap& a) {
  const AlgebraSC& g = a.source();
  const AlgebraSC& h = a.target();
  const std::size_t m = g.dim(), n = h.dim();
  StructureTable table(m + n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t r = 0; r < m; ++r) table.at(i, j)[r] = g.bracket(i, j)[r];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t r = 0; r < n; ++r) table.at(i, m + v)[m + r] = a.rho(i)(r, v);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t r = 0; r < n; ++r) table.at(m + u, m + v)[m + r] = h.bracket(u, v)[r];
  return table;
}

} // namespace

AlgebraSC hemisemidirect(const ActionMap& a) {
  return AlgebraSC(a.source().name() + "_hsd_" + a.target().name(), hemisemidirectTable(a), Flavor::leibniz);
}

namespace {

Vector graphVector(const TensorMap& t, std::size_t u) {
  const std::size_t m = t.g().dim(), n = t.h().dim();
  Vector w(m + n);
  const Vector tu = t.image(u);
  std::copy(tu.begin(), tu.end(), w.begin());
  w[m + u] = 1;
  return w;
}

} // namespace

Report graphSubalgebraCheck(const TensorMap& t) {
  const std::size_t m = t.g().dim(), n = t.h().dim();
  // Raw table: hemisemidirect() would reject an action that is not coherent.
  const StructureTable table = hemisemidirectTable(t.action());

  std::vector<Vector> graph;
  for (std::size_t u = 0; u < n; ++u) graph.push_back(graphVector(t, u));
  const Subspace g = Subspace::span(m + n, graph);

  Report rep{"graph-subalgebra", {}, {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rep.require("graph-closed", {i, j}, g.reduce(table.apply(graph[i], graph[j])));
  return rep;
}

AlgebraSC descendent(const TensorMap& t) {
  t.requireEmbeddingTensor("descendent");
  const std::size_t n = t.h().dim();
  StructureTable table(n);
  for (std::size_t u = 0; u < n; ++u) {
    const Matrix rhoTu = t.action().rho(t.image(u));
    for (std::size_t v = 0; v < n; ++v) {
      Vector w = rhoTu.column(v);
      addScaled(w, 1, t.h().bracket(u, v));
      table.set(u, v, w);
    }
  }
  return AlgebraSC(t.h().name() + "_T", std::move(table), Flavor::leibniz);
}

TensorMap projectionNET(const AlgebraSC& h) {
  const std::size_t n = h.dim();
  const MatrixLieAlgebra der = matrixLieAlgebra("CDer(" + h.name() + ")", coherentDerivationAlgebra(h), n);
  const std::size_t d = der.algebra.dim();
  AlgebraSC sum = directSum(der.algebra, h, "CDer(" + h.name() + ")+" + h.name());

  std::vector<Matrix> rho;
  for (const Matrix& a : der.basis) {
    Matrix r(d + n, d + n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) r(d + i, d + j) = a(i, j);
    rho.push_back(std::move(r));
  }
  Matrix pr(d, d + n);
  for (std::size_t k = 0; k < d; ++k) pr(k, k) = 1;
  return TensorMap(ActionMap(der.algebra, std::move(sum), std::move(rho)), std::move(pr));
}

} // namespace netkit
