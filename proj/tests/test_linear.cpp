#include "doctest.h"

#include "netkit/errors.hpp"
#include "netkit/linalg.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <sstream>

using namespace netkit;

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(4, 6) == Rational(2, 3));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(8, 4).str() == "2");
  CHECK(Rational(8, 4).isInteger());
  CHECK(Rational::parse("  -4/6 ") == Rational(-2, 3));
  CHECK(Rational::parse("+7") == Rational(7));
  CHECK(Rational::parse("123456789012345678901234567890").str() == "123456789012345678901234567890");
  CHECK_FALSE(Rational::parse("123456789012345678901234567890").toInt64().has_value());
  CHECK(Rational(-5).toInt64() == -5);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  std::ostringstream os;
  os << Rational(-4, 3);
  CHECK(os.str() == "-4/3");
}

TEST_CASE("rational field laws") {
  fx::Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    const Rational a = rng.rational(50), b = rng.rational(50);
    if (!a.isZero()) CHECK(a * (Rational(1) / a) == Rational(1));
    CHECK(a + b - b == a);
    CHECK((a < b) == (b > a));
    CHECK(a.denominator() > 0);
  }
}

TEST_CASE("rref") {
  const RowEchelon id = rref(Matrix::identity(2));
  CHECK(id.reduced == Matrix::identity(2));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1});

  const RowEchelon r = rref(fx::mat(2, 2, {2, 4, 1, 2}));
  CHECK(r.reduced == fx::mat(2, 2, {1, 2, 0, 0}));
  CHECK(r.pivots == std::vector<std::size_t>{0});

  fx::Rng rng(2);
  for (int i = 0; i < 30; ++i) {
    const Matrix m = rng.matrix(5, 7, true);
    const RowEchelon e = rref(m);
    CHECK(e.pivots.size() == oracle::bareissRank(m));
    CHECK(rref(e.reduced).reduced == e.reduced);
    CHECK(rank(m) + kernelBasis(m).dim() == 7);
    for (std::size_t k = 1; k < e.pivots.size(); ++k) CHECK(e.pivots[k - 1] < e.pivots[k]);
  }
}

TEST_CASE("kernel, image, quotient") {
  CHECK(kernelBasis(Matrix::identity(3)).dim() == 0);
  CHECK(kernelBasis(Matrix(3, 3)).dim() == 3);
  const Matrix m = fx::mat(2, 2, {2, 4, 1, 2});
  const Subspace k = kernelBasis(m);
  REQUIRE(k.dim() == 1);
  CHECK(isZero(m.apply(k.basis()[0])));
  CHECK(k.contains(fx::vec({-2, 1})));

  fx::Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const Matrix a = rng.matrix(4, 6, true);
    const Subspace ker = kernelBasis(a);
    for (const Vector& v : ker.basis()) CHECK(isZero(a.apply(v)));
    CHECK(imageOf(a).dim() == oracle::bareissRank(a));
    for (std::size_t c = 0; c < 6; ++c) CHECK(imageOf(a).contains(a.column(c)));
  }

  const Subspace big = Subspace::full(3);
  CHECK(quotientDim(big, big) == 0);
  CHECK(quotientDim(big, Subspace(3)) == 3);
  const Subspace line = Subspace::span(3, {fx::vec({1, 1, 0})});
  const Subspace other = Subspace::span(3, {fx::vec({0, 0, 1})});
  CHECK_THROWS_AS(quotientDim(line, other), NotASubspace);
  CHECK(line.join(other).dim() == 2);
  CHECK(line.coordinates(fx::vec({3, 3, 0})) == std::optional<Vector>(fx::vec({3})));
  CHECK_FALSE(line.coordinates(fx::vec({1, 0, 0})).has_value());
  CHECK(Subspace::span(3, {fx::vec({2, 2, 0}), fx::vec({1, 1, 0})}) == line);
}

TEST_CASE("matrix helpers") {
  const Matrix a = fx::mat(2, 2, {1, 2, 3, 4});
  const auto inv = inverse(a);
  REQUIRE(inv.has_value());
  CHECK(*inv * a == Matrix::identity(2));
  CHECK_FALSE(inverse(fx::mat(2, 2, {1, 2, 2, 4})).has_value());
  CHECK(Matrix::unvectorize(a.vectorize(), 2, 2) == a);
  CHECK(a.transpose() == fx::mat(2, 2, {1, 3, 2, 4}));
  CHECK(commutator(a, a).isZero());
  CHECK(a.column(1) == fx::vec({2, 4}));
}
