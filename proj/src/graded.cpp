#include "netkit/graded.hpp"

#include "netkit/errors.hpp"

namespace netkit {

namespace {

Rational signOf(long exponent) { return exponent % 2 == 0 ? Rational(1) : Rational(-1); }

void requireCap(std::size_t arity, std::size_t cap, const char* op) {
  if (arity > cap)
    throw ArityCapExceeded(std::string(op) + ": result arity " + std::to_string(arity) + " exceeds cap " +
                           std::to_string(cap));
}

void requireEndomorphic(const MultiMap& f, const char* op) {
  if (f.domainDim() != f.codomainDim()) throw DimensionMismatch(std::string(op) + ": map is not V -> V");
  if (f.arity() == 0) throw DimensionMismatch(std::string(op) + ": arity must be at least 1");
}

void requireHG(const MultiMap& f, const ActionMap& a, const char* op) {
  if (f.arity() == 0) throw DimensionMismatch(std::string(op) + ": arity must be at least 1");
  if (f.domainDim() != a.target().dim() || f.codomainDim() != a.source().dim())
    throw DimensionMismatch(std::string(op) + ": map is not (x)h -> g");
}

// Gathers x[images[from..to)] into a fresh index list.
std::vector<std::size_t> pick(const std::vector<std::size_t>& x, const std::vector<std::size_t>& images,
                              std::size_t from, std::size_t to) {
  std::vector<std::size_t> out;
  out.reserve(to - from);
  for (std::size_t k = from; k < to; ++k) out.push_back(x[images[k]]);
  return out;
}

// rho(w) e_c
Vector actOnBasis(const ActionMap& a, std::span<const Rational> w, std::size_t c) {
  Vector out(a.target().dim());
  for (std::size_t i = 0; i < w.size(); ++i)
    if (!w[i].isZero()) addScaled(out, w[i], a.rho(i).column(c));
  return out;
}

Vector toVector(std::span<const Rational> s) { return Vector(s.begin(), s.end()); }

} // namespace

MultiMap circ(const MultiMap& p, const MultiMap& q, std::size_t arityCap) {
  requireEndomorphic(p, "circ");
  requireEndomorphic(q, "circ");
  if (p.domainDim() != q.domainDim()) throw DimensionMismatch("circ: maps live on different spaces");
  const std::size_t a = p.arity(), b = q.arity(), n = a + b - 1;
  requireCap(n, arityCap, "circ");
  const std::size_t qDeg = b - 1;

  MultiMap out(n, p.domainDim(), p.domainDim());
  for (std::size_t t = 0; t < out.tupleCount(); ++t) {
    const std::vector<std::size_t> x = out.tuple(t);
    Vector acc(out.codomainDim());
    for (std::size_t k = 1; k <= a; ++k) {
      const Rational base = signOf(static_cast<long>((k - 1) * qDeg));
      for (const Shuffle& s : shuffles(k - 1, qDeg)) {
        std::vector<std::size_t> qArgs = pick(x, s.images, k - 1, k - 1 + qDeg);
        qArgs.push_back(x[k + qDeg - 1]);
        const auto inner = q.value(qArgs);

        std::vector<std::size_t> pArgs = pick(x, s.images, 0, k - 1);
        pArgs.push_back(0);
        for (std::size_t r = k + qDeg; r < n; ++r) pArgs.push_back(x[r]);
        p.accumulateWithSlot(pArgs, k - 1, inner, s.sign * base, acc);
      }
    }
    std::copy(acc.begin(), acc.end(), out.value(t).begin());
  }
  return out;
}

MultiMap balavoine(const MultiMap& p, const MultiMap& q, std::size_t arityCap) {
  const long pq = p.degree() * q.degree();
  return circ(p, q, arityCap) - signOf(pq) * circ(q, p, arityCap);
}

namespace {

Report reportNonzero(std::string check, const std::string& rule, const MultiMap& f) {
  Report rep{std::move(check), {}, {}};
  for (std::size_t t = 0; t < f.tupleCount(); ++t) rep.require(rule, f.tuple(t), toVector(f.value(t)));
  return rep;
}

} // namespace

Report mcLeibnizCheck(const MultiMap& omega) {
  if (omega.arity() != 2) throw DimensionMismatch("mcLeibnizCheck: arity must be 2");
  return reportNonzero("mc-leibniz", "[omega,omega]_B", balavoine(omega, omega));
}

GradedContext makeGradedContext(const ActionMap& action) {
  const std::size_t m = action.source().dim(), n = action.target().dim();
  GradedContext ctx{action, MultiMap::fromTable(hemisemidirect(action).table()), MultiMap(2, m + n, m + n)};
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      const auto b = action.target().bracket(u, v);
      auto slot = ctx.muH.value((m + u) * (m + n) + (m + v));
      for (std::size_t k = 0; k < n; ++k) slot[m + k] = b[k];
    }
  return ctx;
}

Report checkGradedContext(const GradedContext& ctx) {
  Report rep = reportNonzero("graded-context", "[mu_g+rho, mu_g+rho]_B", balavoine(ctx.muG, ctx.muG));
  rep.merge(reportNonzero("", "[mu_h, mu_h]_B", balavoine(ctx.muH, ctx.muH)));
  rep.merge(reportNonzero("", "[mu_g+rho, mu_h]_B", balavoine(ctx.muG, ctx.muH)));
  return rep;
}

MultiMap embedHG(const MultiMap& theta, std::size_t gDim, std::size_t hDim) {
  if (theta.domainDim() != hDim || theta.codomainDim() != gDim)
    throw DimensionMismatch("embedHG: map is not (x)h -> g");
  const std::size_t d = gDim + hDim;
  MultiMap out(theta.arity(), d, d);
  for (std::size_t t = 0; t < theta.tupleCount(); ++t) {
    std::vector<std::size_t> idx = theta.tuple(t);
    for (auto& i : idx) i += gDim;
    const auto src = theta.value(t);
    std::copy(src.begin(), src.end(), out.value(out.tupleIndex(idx)).begin());
  }
  return out;
}

MultiMap restrictHG(const MultiMap& f, std::size_t gDim, std::size_t hDim) {
  if (f.domainDim() != gDim + hDim || f.codomainDim() != gDim + hDim)
    throw DimensionMismatch("restrictHG: map is not on g (+) h");
  MultiMap out(f.arity(), hDim, gDim);
  for (std::size_t t = 0; t < out.tupleCount(); ++t) {
    std::vector<std::size_t> idx = out.tuple(t);
    for (auto& i : idx) i += gDim;
    const auto src = f.value(idx);
    std::copy(src.begin(), src.begin() + static_cast<std::ptrdiff_t>(gDim), out.value(t).begin());
  }
  return out;
}

MultiMap dM(const MultiMap& f, const ActionMap& action, std::size_t arityCap) {
  requireHG(f, action, "dM");
  const std::size_t n = f.arity();
  requireCap(n + 1, arityCap, "dM");
  const AlgebraSC& h = action.target();

  MultiMap out(n + 1, f.domainDim(), f.codomainDim());
  for (std::size_t t = 0; t < out.tupleCount(); ++t) {
    const std::vector<std::size_t> v = out.tuple(t);
    Vector acc(out.codomainDim());
    for (std::size_t i = 1; i <= n + 1; ++i)
      for (std::size_t j = i + 1; j <= n + 1; ++j) {
        std::vector<std::size_t> args;
        for (std::size_t p = 0; p <= n; ++p)
          if (p != i - 1) args.push_back(v[p]);
        f.accumulateWithSlot(args, j - 2, h.bracket(v[i - 1], v[j - 1]), signOf(static_cast<long>(n - 1 + i)), acc);
      }
    std::copy(acc.begin(), acc.end(), out.value(t).begin());
  }
  return out;
}

MultiMap derivedBracket(const MultiMap& theta, const MultiMap& phi, const ActionMap& action, std::size_t arityCap) {
  requireHG(theta, action, "derivedBracket");
  requireHG(phi, action, "derivedBracket");
  const std::size_t m = theta.arity(), n = phi.arity(), total = m + n;
  requireCap(total, arityCap, "derivedBracket");
  const AlgebraSC& g = action.source();

  MultiMap out(total, theta.domainDim(), theta.codomainDim());
  for (std::size_t t = 0; t < out.tupleCount(); ++t) {
    const std::vector<std::size_t> v = out.tuple(t);
    Vector acc(out.codomainDim());

    // theta(.., rho(phi(..)) v_{k+n}, ..)
    for (std::size_t k = 1; k <= m; ++k) {
      const Rational base = signOf(static_cast<long>((k - 1) * n + 1));
      for (const Shuffle& s : shuffles(k - 1, n)) {
        const auto w = phi.value(pick(v, s.images, k - 1, k - 1 + n));
        const Vector y = actOnBasis(action, w, v[k + n - 1]);
        std::vector<std::size_t> args = pick(v, s.images, 0, k - 1);
        args.push_back(0);
        for (std::size_t r = k + n; r < total; ++r) args.push_back(v[r]);
        theta.accumulateWithSlot(args, k - 1, y, s.sign * base, acc);
      }
    }

    // [theta(..), phi(..)]_g
    {
      const Rational base = signOf(static_cast<long>(m * n + 1));
      for (const Shuffle& s : shuffles(m, n)) {
        const auto a = theta.value(pick(v, s.images, 0, m));
        const auto b = phi.value(pick(v, s.images, m, total));
        addScaled(acc, s.sign * base, g.bracket(a, b));
      }
    }

    // phi(.., rho(theta(..)) v_{k+m}, ..)
    for (std::size_t k = 1; k <= n; ++k) {
      const Rational base = signOf(static_cast<long>(m * (k + n - 1)));
      for (const Shuffle& s : shuffles(k - 1, m)) {
        const auto w = theta.value(pick(v, s.images, k - 1, k - 1 + m));
        const Vector y = actOnBasis(action, w, v[k + m - 1]);
        std::vector<std::size_t> args = pick(v, s.images, 0, k - 1);
        args.push_back(0);
        for (std::size_t r = k + m; r < total; ++r) args.push_back(v[r]);
        phi.accumulateWithSlot(args, k - 1, y, s.sign * base, acc);
      }
    }
    std::copy(acc.begin(), acc.end(), out.value(t).begin());
  }
  return out;
}

MultiMap derivedBracketViaBalavoine(const MultiMap& theta, const MultiMap& phi, const GradedContext& ctx,
                                    std::size_t arityCap) {
  requireHG(theta, ctx.action, "derivedBracketViaBalavoine");
  requireHG(phi, ctx.action, "derivedBracketViaBalavoine");
  const MultiMap thetaE = embedHG(theta, ctx.gDim(), ctx.hDim());
  const MultiMap phiE = embedHG(phi, ctx.gDim(), ctx.hDim());
  const MultiMap inner = balavoine(ctx.muG, thetaE, arityCap);
  return signOf(theta.degree()) * balavoine(inner, phiE, arityCap);
}

MultiMap mcNETResidual(const TensorMap& t) {
  const MultiMap tm = MultiMap::fromMatrix(t.matrix());
  return dM(tm, t.action()) + Rational(1, 2) * derivedBracket(tm, tm, t.action());
}

Report mcNETCheck(const TensorMap& t) {
  return reportNonzero("mc-net", "d_M T + 1/2 [[T,T]]", mcNETResidual(t));
}

MultiMap dT(const TensorMap& t, const MultiMap& f, std::size_t arityCap) {
  t.requireEmbeddingTensor("dT");
  return dM(f, t.action(), arityCap) + derivedBracket(MultiMap::fromMatrix(t.matrix()), f, t.action(), arityCap);
}

Report mcDeformCheck(const TensorMap& t, const Matrix& tPrime) {
  if (tPrime.rows() != t.matrix().rows() || tPrime.cols() != t.matrix().cols())
    throw DimensionMismatch("mcDeformCheck: deformation has the wrong shape");
  const MultiMap d = MultiMap::fromMatrix(tPrime);
  return reportNonzero("mc-deform", "d_T T' + 1/2 [[T',T']]",
                       dT(t, d) + Rational(1, 2) * derivedBracket(d, d, t.action()));
}

} // namespace netkit
