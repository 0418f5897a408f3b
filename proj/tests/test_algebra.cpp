#include "doctest.h"

#include "netkit/errors.hpp"
#include "netkit/tensor.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace netkit;

namespace {

// [e1,e2] = e3, [e3,e1] = 2e1, [e3,e2] = -2e2
StructureTable sl2Like() {
  StructureTable t(3);
  t.set(0, 1, fx::vec({0, 0, 1}));
  t.set(1, 0, fx::vec({0, 0, -1}));
  t.set(2, 0, fx::vec({2, 0, 0}));
  t.set(0, 2, fx::vec({-2, 0, 0}));
  t.set(2, 1, fx::vec({0, -2, 0}));
  t.set(1, 2, fx::vec({0, 2, 0}));
  return t;
}

} // namespace

TEST_CASE("checkLie") {
  CHECK(checkLie(fx::heisenberg()).passed());
  CHECK(checkLie(AlgebraSC::abelian("a4", 4)).passed());

  StructureTable broken = fx::heisenberg().table();
  broken.set(0, 1, fx::vec({0, 1, 0}));
  const Report r = checkLie(AlgebraSC("bad", broken, Flavor::unchecked));
  REQUIRE_FALSE(r.passed());
  CHECK(r.firstFailure()->rule == "antisymmetry");
  CHECK(r.firstFailure()->indices == std::vector<std::size_t>{0, 1});
  CHECK_THROWS_AS(AlgebraSC("bad", broken, Flavor::lie), FlavorViolation);
  CHECK_THROWS_AS(StructureTable::fromEntries({{fx::vec({1})}, {}}), DimensionMismatch);
}

TEST_CASE("checkLeibniz") {
  CHECK(checkLeibniz(fx::heisenberg()).passed());
  CHECK(checkLeibniz(hemisemidirect(fx::h3Adjoint())).passed());

  StructureTable t(2);
  t.set(0, 0, fx::vec({0, 1}));
  t.set(1, 0, fx::vec({0, 1}));
  const Report r = checkLeibniz(AlgebraSC("x", t, Flavor::unchecked));
  REQUIRE_FALSE(r.passed());
  CHECK(r.firstFailure()->indices == std::vector<std::size_t>{0, 0, 0});
  CHECK_THROWS_AS(AlgebraSC("x", t, Flavor::leibniz), FlavorViolation);

  fx::Rng rng(5);
  for (int i = 0; i < 30; ++i) {
    const AlgebraSC a("r", rng.table(2), Flavor::unchecked);
    if (checkLie(a).passed()) CHECK(checkLeibniz(a).passed());
  }
}

TEST_CASE("flavor names") {
  CHECK(flavorName(Flavor::lie) == "lie");
  CHECK(flavorFromString("leibniz") == Flavor::leibniz);
  CHECK(flavorFromString("unchecked") == Flavor::unchecked);
  CHECK_THROWS_AS(flavorFromString("jordan"), ParseError);
}

TEST_CASE("two-step nilpotency") {
  CHECK(checkTwoStepNilpotent(fx::heisenberg()).passed());
  CHECK(checkTwoStepNilpotent(AlgebraSC::abelian("a", 3)).passed());
  const AlgebraSC s("sl2like", sl2Like(), Flavor::lie);
  CHECK_FALSE(checkTwoStepNilpotent(s).passed());
  CHECK_FALSE(checkCoherentAction(adjointAction(s)).passed());
}

TEST_CASE("Leibniz representations") {
  const AlgebraSC h = fx::heisenberg();
  LeibnizRep zero{h, 2, std::vector<Matrix>(3, Matrix(2, 2)), std::vector<Matrix>(3, Matrix(2, 2))};
  CHECK(checkLeibnizRep(zero).passed());
  zero.rhoR.pop_back();
  CHECK_THROWS_AS(checkLeibnizRep(zero), DimensionMismatch);
  // adjoint of a Lie algebra with rhoR = -rhoL
  LeibnizRep adj{h, 3, {}, {}};
  for (std::size_t i = 0; i < 3; ++i) {
    adj.rhoL.push_back(h.ad(i));
    adj.rhoR.push_back(Rational(-1) * h.ad(i));
  }
  CHECK(checkLeibnizRep(adj).passed());
  adj.rhoR[0] = Matrix::identity(3);
  CHECK_FALSE(checkLeibnizRep(adj).passed());
}

TEST_CASE("Leibniz kernel and quotient") {
  CHECK(leibnizKernel(fx::heisenberg()).dim() == 0);
  const AlgebraSC hsd = hemisemidirect(fx::h3Adjoint());
  const Subspace lei = leibnizKernel(hsd);
  CHECK(lei == oracle::leibnizKernelBySquares(hsd));
  for (const Vector& v : lei.basis())
    for (std::size_t i = 0; i < hsd.dim(); ++i) {
      CHECK(lei.contains(hsd.bracket(unitVector(hsd.dim(), i), v)));
      CHECK(lei.contains(hsd.bracket(v, unitVector(hsd.dim(), i))));
    }

  const QuotientLie q = quotientLie(hsd);
  CHECK(q.algebra.dim() == hsd.dim() - lei.dim());
  CHECK(checkLie(q.algebra).passed());
  for (std::size_t i = 0; i < hsd.dim(); ++i)
    for (std::size_t j = 0; j < hsd.dim(); ++j)
      CHECK(q.projection.apply(hsd.bracket(i, j)) ==
            q.algebra.bracket(q.projection.column(i), q.projection.column(j)));

  const QuotientLie same = quotientLie(fx::heisenberg());
  CHECK(same.projection == Matrix::identity(3));
  CHECK(same.algebra.table() == fx::heisenberg().table());

  const TensorMap t = fx::t1();
  const AlgebraSC desc = descendent(t);
  CHECK(leibnizKernel(desc).dim() >= 1);
  CHECK(leibnizKernel(desc) == oracle::leibnizKernelBySquares(desc));

  fx::Rng rng(6);
  for (int i = 0; i < 15; ++i) {
    const LeibnizLie l = fx::h3LeibnizLie({rng.rational(), rng.rational(), rng.rational(), rng.rational()});
    const AlgebraSC a("l", l.triangle + l.lie.table(), Flavor::leibniz);
    CHECK(leibnizKernel(a) == oracle::leibnizKernelBySquares(a));
  }
}

TEST_CASE("derivation algebras") {
  CHECK(derivationAlgebra(AlgebraSC::abelian("a", 3)).dim() == 9);
  CHECK(coherentDerivationAlgebra(AlgebraSC::abelian("a", 3)).dim() == 9);
  const AlgebraSC h = fx::heisenberg();
  const Subspace der = derivationAlgebra(h);
  CHECK(der.dim() == 6);
  // coherent ones send e1, e2 into span{e3} and kill e3
  const Subspace cder = coherentDerivationAlgebra(h);
  CHECK(cder.dim() == 2);
  CHECK(der.contains(cder));
  Matrix d13(3, 3), d23(3, 3);
  d13(2, 0) = 1;
  d23(2, 1) = 1;
  CHECK(cder == Subspace::span(9, {d13.vectorize(), d23.vectorize()}));
  for (const Vector& a : der.basis())
    for (const Vector& b : der.basis()) {
      const Matrix c = commutator(Matrix::unvectorize(a, 3, 3), Matrix::unvectorize(b, 3, 3));
      CHECK(der.contains(c.vectorize()));
    }
  // every basis element satisfies the derivation rule
  for (const Vector& a : der.basis()) {
    const Matrix d = Matrix::unvectorize(a, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        CHECK(d.apply(h.bracket(i, j)) == h.bracket(d.column(i), unitVector(3, j)) + h.bracket(unitVector(3, i), d.column(j)));
  }
  // sl2-like: coherent derivations are a proper subspace
  const AlgebraSC s("sl2like", sl2Like(), Flavor::lie);
  CHECK(derivationAlgebra(s).contains(coherentDerivationAlgebra(s)));
  CHECK(coherentDerivationAlgebra(s).dim() < derivationAlgebra(s).dim());
}

TEST_CASE("direct sum") {
  const AlgebraSC s = directSum(fx::heisenberg(), AlgebraSC::abelian("a", 1), "H3+a");
  CHECK(s.dim() == 4);
  CHECK(s.flavor() == Flavor::lie);
  CHECK(s.bracket(0, 1)[2] == Rational(1));
  CHECK(isZero(s.bracket(0, 3)));
}
