#include "doctest.h"

#include "netkit/cohomology.hpp"
#include "netkit/errors.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace netkit;

namespace {

std::vector<TensorMap> verifiedFixtures() {
  std::vector<TensorMap> out{fx::t1(), fx::h3Zero(), fx::familyTwo(1, 2), fx::familyTwo(0, 1, Rational(-2, 3)),
                             fx::h3Tensor({1, 2, 0, 2, 4, 0, 1, 1, 0})};
  out.emplace_back(fx::shiftAction(2), fx::mat(2, 3, {1, 0, 0, 0, 0, 0}));
  out.emplace_back(fx::toyAction(), Matrix(1, 1));
  return out;
}

} // namespace

TEST_CASE("induced representation") {
  const LeibnizRep zero = inducedRep(fx::h3Zero());
  for (const Matrix& m : zero.rhoL) CHECK(m.isZero());
  for (const Matrix& m : zero.rhoR) CHECK(m.isZero());

  for (const TensorMap& t : verifiedFixtures()) {
    const LeibnizRep rep = inducedRep(t);
    CHECK(checkLeibnizRep(rep).passed());
    CHECK(sameStructure(rep.algebra, descendent(t)));
    for (std::size_t u = 0; u < t.h().dim(); ++u)
      for (std::size_t v = 0; v < t.h().dim(); ++v)
        CHECK(rep.rhoR[v] * rep.rhoL[u] == Rational(-1) * (rep.rhoR[v] * rep.rhoR[u]));
  }
  CHECK_THROWS_AS(inducedRep(fx::h3Tensor({0, 0, 1, 0, 0, 0, 0, 0, 0})), NotAnEmbeddingTensor);
}

TEST_CASE("Loday-Pirashvili coboundary") {
  const AlgebraSC ab = AlgebraSC::abelian("ab", 2);
  const LeibnizRep zeroRep{ab, 3, {Matrix(3, 3), Matrix(3, 3)}, {Matrix(3, 3), Matrix(3, 3)}};
  fx::Rng rng(31);
  CHECK(lodayPirashviliCoboundary(zeroRep, rng.multimap(2, 2, 3)).isZero());
  CHECK_THROWS_AS(lodayPirashviliCoboundary(zeroRep, rng.multimap(1, 3, 3)), DimensionMismatch);

  std::vector<LeibnizRep> reps;
  for (const TensorMap& t : verifiedFixtures()) reps.push_back(inducedRep(t));
  int count = 0;
  for (int trial = 0; count < 50; ++trial)
    for (const LeibnizRep& rep : reps) {
      for (std::size_t arity : {1u, 2u}) {
        const MultiMap f = rng.multimap(arity, rep.algebra.dim(), rep.repDim);
        CHECK(lodayPirashviliCoboundary(rep, lodayPirashviliCoboundary(rep, f)).isZero());
        ++count;
      }
    }
}

TEST_CASE("partialT agrees with the Loday-Pirashvili specialization") {
  fx::Rng rng(32);
  for (const TensorMap& t : verifiedFixtures()) {
    const LeibnizRep rep = inducedRep(t);
    for (std::size_t arity : {0u, 1u, 2u}) {
      const MultiMap f = rng.multimap(arity, t.h().dim(), t.g().dim());
      CHECK(partialT(t, f) == lodayPirashviliCoboundary(rep, f));
    }
  }
}

TEST_CASE("degree-one path equals the general formula at arity zero") {
  fx::Rng rng(33);
  for (const TensorMap& t : verifiedFixtures()) {
    const Vector x = rng.vector(t.g().dim());
    CHECK(MultiMap::fromMatrix(partialT(t, x)) == partialT(t, MultiMap::constant(x, t.h().dim())));
  }
  CHECK(partialT(fx::h3Zero(), fx::vec({1, 2, 3})).isZero());
  CHECK(partialT(fx::t1(), fx::vec({0, 0, 1})).isZero());
}

TEST_CASE("partialT squares to zero and matches d_T up to sign") {
  fx::Rng rng(34);
  for (const TensorMap& t : verifiedFixtures()) {
    const NETComplex cx = buildComplex(t);
    for (std::size_t k = 0; k + 1 < cx.differentials.size(); ++k)
      CHECK((cx.differentials[k + 1] * cx.differentials[k]).isZero());
    for (std::size_t k = 1; k <= 3; ++k) {
      const MultiMap theta = rng.multimap(k, t.h().dim(), t.g().dim());
      const Rational s = (k - 1) % 2 ? Rational(-1) : Rational(1);
      CHECK(partialT(t, theta) == s * dT(t, theta));
    }
  }
}

TEST_CASE("cohomology dimensions") {
  const CohomologyReport zero = cohomology(fx::h3Zero(), 1);
  CHECK(zero.dimZ == 3);
  CHECK(zero.dimB == 0);
  CHECK(zero.dimH == 3);

  const TensorMap toy(fx::toyAction(), Matrix(1, 1));
  const CohomologyReport toy2 = cohomology(toy, 2);
  CHECK(cochainDim(toy, 2) == 1);
  CHECK(toy2.dimZ == 1);
  CHECK(toy2.dimB == 0);
  CHECK(toy2.dimH == 1);

  // k = 1 on T1 against an independently assembled matrix
  const TensorMap t = fx::t1();
  Matrix assembled(9, 3);
  for (std::size_t x = 0; x < 3; ++x) {
    const Vector ex = unitVector(3, x);
    for (std::size_t u = 0; u < 3; ++u) {
      const Vector eu = unitVector(3, u);
      const Vector val = t.apply(t.action().rho(ex).apply(eu)) - t.g().bracket(ex, t.apply(eu));
      for (std::size_t j = 0; j < 3; ++j) assembled(u * 3 + j, x) = val[j];
    }
  }
  CHECK(assembled == differentialMatrix(t, 1));
  CHECK(cohomology(t, 1).dimH == 3 - oracle::bareissRank(assembled));

  for (const TensorMap& f : verifiedFixtures())
    for (std::size_t k = 1; k <= 4; ++k) {
      const CohomologyReport r = cohomology(f, k);
      CHECK(r.dimH == r.dimZ - r.dimB);
      CHECK(r.cocycleBasis.contains(r.coboundaryBasis));
      CHECK(r.dimZ == cochainDim(f, k) - oracle::bareissRank(differentialMatrix(f, k)));
      if (k > 1) CHECK(r.dimB == oracle::bareissRank(differentialMatrix(f, k - 1)));
    }

  CHECK_THROWS_AS(cohomology(t, 0), DegreeOutOfRange);
  CHECK_THROWS_AS(cohomology(t, 5), DegreeOutOfRange);
  CHECK_NOTHROW(cohomology(t, 5, 5));
  CHECK_THROWS_AS(cohomology(fx::h3Tensor({0, 0, 1, 0, 0, 0, 0, 0, 0}), 1), NotAnEmbeddingTensor);
}

TEST_CASE("classEquals") {
  const TensorMap t = fx::t1();
  // Boundary of x is a 2-cocycle; differences of coboundaries are trivial.
  const MultiMap b1 = MultiMap::fromMatrix(partialT(t, fx::vec({1, 0, 0})));
  const MultiMap b2 = MultiMap::fromMatrix(partialT(t, fx::vec({0, 1, 0})));
  CHECK(classEquals(t, b1, b1, 2));
  CHECK(classEquals(t, b1, b2, 2));
  CHECK(classEquals(t, b1, MultiMap(1, 3, 3), 2));

  const TensorMap toy(fx::toyAction(), Matrix(1, 1));
  const MultiMap f = MultiMap::fromMatrix(fx::mat(1, 1, {3}));
  const MultiMap g = MultiMap::fromMatrix(fx::mat(1, 1, {4}));
  CHECK(classEquals(toy, f, f, 2));
  CHECK_FALSE(classEquals(toy, f, g, 2));

  // not a cocycle on T1: Te1 direction moved to e1
  Matrix bad(3, 3);
  bad(0, 2) = 1;
  const MultiMap nb = MultiMap::fromMatrix(bad);
  REQUIRE_FALSE(partialT(t, nb).isZero());
  CHECK_THROWS_AS(classEquals(t, nb, b1, 2), NotACocycle);
  CHECK_THROWS_AS(classEquals(t, b1, nb, 2), NotACocycle);
}
