#include "netkit/algebra.hpp"

#include "netkit/errors.hpp"

#include <sstream>

namespace netkit {

// ---------------------------------------------------------------- StructureTable

StructureTable StructureTable::fromEntries(const std::vector<std::vector<Vector>>& entries) {
  const std::size_t n = entries.size();
  StructureTable t(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (entries[i].size() != n)
      throw DimensionMismatch("structure table row " + std::to_string(i) + " has " +
                              std::to_string(entries[i].size()) + " entries, expected " + std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) t.set(i, j, entries[i][j]);
  }
  return t;
}

void StructureTable::set(std::size_t i, std::size_t j, std::span<const Rational> value) {
  if (value.size() != dim_)
    throw DimensionMismatch("structure constant (" + std::to_string(i) + "," + std::to_string(j) + ") has length " +
                            std::to_string(value.size()) + ", expected " + std::to_string(dim_));
  std::copy(value.begin(), value.end(), at(i, j).begin());
}

Vector StructureTable::apply(std::span<const Rational> x, std::span<const Rational> y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("StructureTable::apply: vector length mismatch");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].isZero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].isZero()) continue;
      addScaled(out, x[i] * y[j], at(i, j));
    }
  }
  return out;
}

Matrix StructureTable::leftMultiplication(std::size_t i) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    const auto v = at(i, j);
    for (std::size_t r = 0; r < dim_; ++r) m(r, j) = v[r];
  }
  return m;
}

Matrix StructureTable::rightMultiplication(std::size_t j) const {
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    const auto v = at(i, j);
    for (std::size_t r = 0; r < dim_; ++r) m(r, i) = v[r];
  }
  return m;
}

StructureTable& StructureTable::operator+=(const StructureTable& o) {
  if (o.dim_ != dim_) throw DimensionMismatch("StructureTable +: dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

// ---------------------------------------------------------------- AlgebraSC

std::string flavorName(Flavor f) {
  switch (f) {
  case Flavor::lie: return "lie";
  case Flavor::leibniz: return "leibniz";
  case Flavor::unchecked: return "unchecked";
  }
  return "unchecked";
}

Flavor flavorFromString(const std::string& s) {
  if (s == "lie") return Flavor::lie;
  if (s == "leibniz") return Flavor::leibniz;
  if (s == "unchecked") return Flavor::unchecked;
  throw ParseError("unknown flavor '" + s + "'");
}

namespace {

std::string describe(const Violation& v) {
  std::ostringstream os;
  os << v.rule << " fails on (";
  for (std::size_t k = 0; k < v.indices.size(); ++k) os << (k ? "," : "") << "e" << v.indices[k] + 1;
  os << ")";
  return os.str();
}

} // namespace

AlgebraSC::AlgebraSC(std::string name, StructureTable table, Flavor flavor)
    : name_(std::move(name)), table_(std::move(table)), flavor_(flavor) {
  if (flavor_ == Flavor::unchecked) return;
  const Report r = flavor_ == Flavor::lie ? checkLie(*this) : checkLeibniz(*this);
  if (!r.passed())
    throw FlavorViolation("algebra '" + name_ + "' declared " + flavorName(flavor_) + " but " +
                          describe(*r.firstFailure()));
}

AlgebraSC AlgebraSC::abelian(std::string name, std::size_t dim) {
  return AlgebraSC(std::move(name), StructureTable(dim), Flavor::lie);
}

Matrix AlgebraSC::ad(std::span<const Rational> x) const {
  if (x.size() != dim()) throw DimensionMismatch("ad: vector length mismatch");
  Matrix m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (!x[i].isZero()) m += x[i] * ad(i);
  return m;
}

Matrix LeibnizRep::left(std::span<const Rational> x) const {
  Matrix m(repDim, repDim);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].isZero()) m += x[i] * rhoL[i];
  return m;
}

Matrix LeibnizRep::right(std::span<const Rational> x) const {
  Matrix m(repDim, repDim);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].isZero()) m += x[i] * rhoR[i];
  return m;
}

// ---------------------------------------------------------------- checks

Report checkLie(const AlgebraSC& a) {
  Report rep{"lie", {}, {}};
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vector r(a.bracket(i, j).begin(), a.bracket(i, j).end());
      addScaled(r, 1, a.bracket(j, i));
      rep.require("antisymmetry", {i, j}, std::move(r));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector ei = unitVector(n, i), ej = unitVector(n, j), ek = unitVector(n, k);
        Vector r = a.bracket(ei, a.bracket(j, k));
        addScaled(r, 1, a.bracket(ej, a.bracket(k, i)));
        addScaled(r, 1, a.bracket(ek, a.bracket(i, j)));
        rep.require("jacobi", {i, j, k}, std::move(r));
      }
  return rep;
}

Report checkLeibniz(const AlgebraSC& a) {
  Report rep{"leibniz", {}, {}};
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector ei = unitVector(n, i), ej = unitVector(n, j), ek = unitVector(n, k);
        Vector r = a.bracket(ei, a.bracket(j, k));
        addScaled(r, -1, a.bracket(a.bracket(i, j), ek));
        addScaled(r, -1, a.bracket(ej, a.bracket(i, k)));
        rep.require("leibniz-identity", {i, j, k}, std::move(r));
      }
  return rep;
}

Report checkTwoStepNilpotent(const AlgebraSC& a) {
  Report rep{"two-step-nilpotent", {}, {}};
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        rep.require("two-step-nilpotent", {i, j, k}, a.bracket(a.bracket(i, j), unitVector(n, k)));
  return rep;
}

Report checkLeibnizRep(const LeibnizRep& r) {
  const std::size_t n = r.algebra.dim();
  if (r.rhoL.size() != n || r.rhoR.size() != n)
    throw DimensionMismatch("representation needs one rhoL and one rhoR matrix per basis vector");
  for (const auto* list : {&r.rhoL, &r.rhoR})
    for (const Matrix& m : *list)
      if (m.rows() != r.repDim || m.cols() != r.repDim)
        throw DimensionMismatch("representation matrices must be repDim x repDim");

  Report rep{"leibniz-representation", {}, {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto bij = r.algebra.bracket(i, j);
      rep.require("rhoL-bracket", {i, j}, (r.left(bij) - commutator(r.rhoL[i], r.rhoL[j])).vectorize());
      rep.require("rhoR-bracket", {i, j}, (r.right(bij) - (r.rhoL[i] * r.rhoR[j] - r.rhoR[j] * r.rhoL[i])).vectorize());
      rep.require("rhoR-rhoL", {i, j}, (r.rhoR[j] * r.rhoL[i] + r.rhoR[j] * r.rhoR[i]).vectorize());
    }
  return rep;
}

// ---------------------------------------------------------------- kernel / quotient

Subspace leibnizKernel(const AlgebraSC& a) {
  const std::size_t n = a.dim();
  std::vector<Vector> seed;
  for (std::size_t i = 0; i < n; ++i) {
    seed.emplace_back(a.bracket(i, i).begin(), a.bracket(i, i).end());
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector s(a.bracket(i, j).begin(), a.bracket(i, j).end());
      addScaled(s, 1, a.bracket(j, i));
      seed.push_back(std::move(s));
    }
  }
  Subspace ideal = Subspace::span(n, seed);
  for (;;) {
    std::vector<Vector> grown = ideal.basis();
    for (const Vector& s : ideal.basis())
      for (std::size_t i = 0; i < n; ++i) {
        const Vector ei = unitVector(n, i);
        grown.push_back(a.bracket(ei, s));
        grown.push_back(a.bracket(s, ei));
      }
    Subspace next = Subspace::span(n, grown);
    if (next.dim() == ideal.dim()) return ideal;
    ideal = std::move(next);
  }
}

QuotientLie quotientLie(const AlgebraSC& a) {
  const std::size_t n = a.dim();
  const Subspace kernel = leibnizKernel(a);
  const std::vector<std::size_t> free = kernel.freeColumns();
  const std::size_t q = free.size();

  Matrix proj(q, n);
  for (std::size_t c = 0; c < n; ++c) {
    const Vector red = kernel.reduce(unitVector(n, c));
    for (std::size_t k = 0; k < q; ++k) proj(k, c) = red[free[k]];
  }

  StructureTable table(q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) table.set(i, j, proj.apply(a.bracket(free[i], free[j])));
  return {AlgebraSC(a.name() + "_Lie", std::move(table), Flavor::lie), std::move(proj)};
}

// ---------------------------------------------------------------- derivations

namespace {

// Rows of the linear system D[e_i,e_j] = [De_i,e_j] + [e_i,De_j] in the
// unknowns D(r,c), index r*n+c.
std::vector<Vector> derivationEquations(const AlgebraSC& a) {
  const std::size_t n = a.dim();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r) {
        Vector eq(n * n);
        for (std::size_t c = 0; c < n; ++c) {
          eq[r * n + c] += a.bracket(i, j)[c];
          eq[c * n + i] -= a.bracket(c, j)[r];
          eq[c * n + j] -= a.bracket(i, c)[r];
        }
        rows.push_back(std::move(eq));
      }
  return rows;
}

std::vector<Vector> coherenceEquations(const AlgebraSC& a) {
  const std::size_t n = a.dim();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r) {
        Vector eq(n * n);
        for (std::size_t c = 0; c < n; ++c) eq[c * n + i] += a.bracket(c, j)[r];
        rows.push_back(std::move(eq));
      }
  return rows;
}

} // namespace

Subspace derivationAlgebra(const AlgebraSC& a) {
  const std::size_t n = a.dim();
  return kernelBasis(Matrix::fromRows(derivationEquations(a), n * n));
}

Subspace coherentDerivationAlgebra(const AlgebraSC& a) {
  const std::size_t n = a.dim();
  std::vector<Vector> rows = derivationEquations(a);
  const std::vector<Vector> extra = coherenceEquations(a);
  rows.insert(rows.end(), extra.begin(), extra.end());
  return kernelBasis(Matrix::fromRows(rows, n * n));
}

MatrixLieAlgebra matrixLieAlgebra(std::string name, const Subspace& matrices, std::size_t n) {
  if (matrices.ambientDim() != n * n) throw DimensionMismatch("matrixLieAlgebra: ambient dimension is not n^2");
  std::vector<Matrix> basis;
  for (const Vector& b : matrices.basis()) basis.push_back(Matrix::unvectorize(b, n, n));
  const std::size_t d = basis.size();
  StructureTable table(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto coords = matrices.coordinates(commutator(basis[i], basis[j]).vectorize());
      if (!coords) throw NotASubspace("matrixLieAlgebra: subspace is not closed under commutator");
      table.set(i, j, *coords);
    }
  return {AlgebraSC(std::move(name), std::move(table), Flavor::lie), std::move(basis)};
}

AlgebraSC directSum(const AlgebraSC& a, const AlgebraSC& b, std::string name) {
  const std::size_t m = a.dim(), n = b.dim();
  StructureTable table(m + n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const auto v = a.bracket(i, j);
      for (std::size_t r = 0; r < m; ++r) table.at(i, j)[r] = v[r];
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto v = b.bracket(i, j);
      for (std::size_t r = 0; r < n; ++r) table.at(m + i, m + j)[m + r] = v[r];
    }
  const Flavor f = (a.flavor() == Flavor::lie && b.flavor() == Flavor::lie) ? Flavor::lie : Flavor::unchecked;
  return AlgebraSC(std::move(name), std::move(table), f);
}

bool sameStructure(const AlgebraSC& a, const AlgebraSC& b) { return a.table() == b.table(); }

} // namespace netkit
