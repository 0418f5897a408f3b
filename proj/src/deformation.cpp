#include "netkit/deformation.hpp"

#include "netkit/errors.hpp"

namespace netkit {

namespace {

void requireShape(const TensorMap& t, const Matrix& d, const char* op) {
  if (d.rows() != t.matrix().rows() || d.cols() != t.matrix().cols())
    throw DimensionMismatch(std::string(op) + ": direction has the wrong shape");
}

void requireElement(const TensorMap& t, const Vector& x, const char* op) {
  if (x.size() != t.g().dim()) throw DimensionMismatch(std::string(op) + ": element has the wrong length");
}

} // namespace

Report checkLinearDeformation(const DeformationDirection& d) {
  const TensorMap& t = d.base;
  requireShape(t, d.direction, "checkLinearDeformation");
  const AlgebraSC& g = t.g();
  const AlgebraSC& h = t.h();
  const ActionMap& act = t.action();
  const Matrix& dm = d.direction;
  const std::size_t n = h.dim();

  Report rep{"linear-deformation", {}, {}};
  for (const Violation& v : checkNET(t).violations) rep.fail("base-net", v.indices, v.residual);

  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      const Vector tu = t.image(u), tv = t.image(v), du = dm.column(u), dv = dm.column(v);
      Vector r = g.bracket(tu, dv) + g.bracket(du, tv);
      addScaled(r, -1, t.apply(act.rho(du).column(v)));
      const Vector inner = act.rho(tu).column(v) + Vector(h.bracket(u, v).begin(), h.bracket(u, v).end());
      addScaled(r, -1, dm.apply(inner));
      rep.require("deform1", {u, v}, std::move(r));
    }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      const Vector du = dm.column(u), dv = dm.column(v);
      rep.require("deform2", {u, v}, g.bracket(du, dv) - dm.apply(act.rho(du).column(v)));
    }

  bool probes = true;
  for (long probe : {1L, 2L})
    probes = probes && checkNET(TensorMap(act, t.matrix() + Rational(probe) * dm)).passed();
  const bool coefficients = rep.passed();
  if (t.isEmbeddingTensor())
    rep.notes.push_back(probes == coefficients ? "probe route t in {1,2} agrees"
                                               : "probe route t in {1,2} disagrees");
  else
    rep.notes.push_back("base tensor is not an embedding tensor");
  return rep;
}

Report checkNijenhuisElement(const NijenhuisCandidate& c) {
  const TensorMap& t = c.base;
  const Vector& x = c.element;
  requireElement(t, x, "checkNijenhuisElement");
  const AlgebraSC& g = t.g();
  const std::size_t m = g.dim(), n = t.h().dim();
  const Matrix adx = g.ad(x);
  const Matrix rhox = t.action().rho(x);

  Report rep{"nijenhuis-element", {}, {}};
  for (const Violation& v : checkNET(t).violations) rep.fail("base-net", v.indices, v.residual);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) rep.require("nij1", {i, j}, g.bracket(adx.column(i), adx.column(j)));
  for (std::size_t i = 0; i < m; ++i)
    rep.require("nij3", {i}, (t.action().rho(adx.column(i)) * rhox).vectorize());
  const Matrix dx = t.matrix() * rhox - adx * t.matrix();
  for (std::size_t u = 0; u < n; ++u) rep.require("nijenhuis", {u}, adx.apply(dx.column(u)));
  return rep;
}

Report checkEquivalence(const DeformationDirection& source, const DeformationDirection& target, const Vector& x) {
  const TensorMap& t = source.base;
  requireShape(t, source.direction, "checkEquivalence");
  requireShape(t, target.direction, "checkEquivalence");
  if (!(target.base.matrix() == t.matrix()))
    throw DimensionMismatch("checkEquivalence: directions deform different tensors");
  requireElement(t, x, "checkEquivalence");
  const AlgebraSC& g = t.g();
  const std::size_t m = g.dim(), n = t.h().dim();
  const Matrix adx = g.ad(x);
  const Matrix rhox = t.action().rho(x);

  Report rep{"equivalence", {}, {}};
  if (!checkLinearDeformation(source).passed()) rep.fail("precondition", {0}, {});
  if (!checkLinearDeformation(target).passed()) rep.fail("precondition", {1}, {});

  const Matrix dx = t.matrix() * rhox - adx * t.matrix();
  const Matrix diff = source.direction - target.direction - dx;
  for (std::size_t u = 0; u < n; ++u) rep.require("deforiso1", {u}, diff.column(u));
  const Matrix iso2 = target.direction * rhox - adx * source.direction;
  for (std::size_t u = 0; u < n; ++u) rep.require("deforiso2", {u}, iso2.column(u));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) rep.require("nij1", {i, j}, g.bracket(adx.column(i), adx.column(j)));
  for (std::size_t i = 0; i < m; ++i)
    rep.require("nij3", {i}, (t.action().rho(adx.column(i)) * rhox).vectorize());
  return rep;
}

DeformationDirection trivialDeformationFromNijenhuis(const NijenhuisCandidate& c) {
  const Report r = checkNijenhuisElement(c);
  if (!r.passed())
    throw NotNijenhuis("trivialDeformationFromNijenhuis: element fails " + r.firstFailure()->rule);
  return {c.base, partialT(c.base, c.element)};
}

std::optional<Matrix> conjugatedTensor(const TensorMap& t, const Vector& x, const Rational& probe) {
  requireElement(t, x, "conjugatedTensor");
  const std::size_t m = t.g().dim(), n = t.h().dim();
  const auto left = inverse(Matrix::identity(m) + probe * t.g().ad(x));
  if (!left) return std::nullopt;
  return *left * t.matrix() * (Matrix::identity(n) + probe * t.action().rho(x));
}

Report checkNijenhuisOperator(const AlgebraSC& a, const Matrix& nm) {
  const std::size_t d = a.dim();
  if (nm.rows() != d || nm.cols() != d) throw DimensionMismatch("checkNijenhuisOperator: operator has the wrong shape");
  Report rep{"nijenhuis-operator", {}, {}};
  for (std::size_t u = 0; u < d; ++u)
    for (std::size_t v = 0; v < d; ++v) {
      const Vector nu = nm.column(u), nv = nm.column(v);
      const Vector eu = unitVector(d, u), ev = unitVector(d, v);
      Vector inner = a.bracket(nu, ev) + a.bracket(eu, nv);
      addScaled(inner, -1, nm.apply(a.bracket(u, v)));
      rep.require("nijenhuis-operator", {u, v}, a.bracket(nu, nv) - nm.apply(inner));
    }
  return rep;
}

} // namespace netkit
