#ifndef NETKIT_TEST_FIXTURES_HPP
#define NETKIT_TEST_FIXTURES_HPP

#include "netkit/algebra.hpp"
#include "netkit/leibniz_lie.hpp"
#include "netkit/multimap.hpp"
#include "netkit/tensor.hpp"

#include <random>
#include <vector>

namespace fx {

using namespace netkit;

inline Vector vec(std::initializer_list<Rational> xs) { return Vector(xs); }

inline Matrix mat(std::size_t r, std::size_t c, std::initializer_list<Rational> rowMajor) {
  Matrix m(r, c);
  auto it = rowMajor.begin();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = *it++;
  return m;
}

// [e1,e2] = e3
inline AlgebraSC heisenberg() {
  StructureTable t(3);
  t.set(0, 1, vec({0, 0, 1}));
  t.set(1, 0, vec({0, 0, -1}));
  return AlgebraSC("H3", t, Flavor::lie);
}

inline ActionMap h3Adjoint() { return adjointAction(heisenberg()); }

// Columns are T e_j.
inline TensorMap h3Tensor(std::initializer_list<Rational> rowMajor) {
  return TensorMap(h3Adjoint(), mat(3, 3, rowMajor));
}

// Te1 = e2 + 2e3, Te2 = 3e3, Te3 = 0.
inline TensorMap t1() { return h3Tensor({0, 0, 0, 1, 0, 0, 2, 3, 0}); }

inline TensorMap h3Zero() { return h3Tensor({0, 0, 0, 0, 0, 0, 0, 0, 0}); }

// r11 = r22 = 2, row 3 = (a, b, 4/3).
inline TensorMap familyTwo(Rational a, Rational b, Rational r11 = 2) {
  return h3Tensor({r11, 0, 0, 0, r11, 0, a, b, Rational(4, 3)});
}

// Abelian g of dimension k acting on H3 by rho(f_i) = E_{3,i}.
inline ActionMap shiftAction(std::size_t k) {
  std::vector<Matrix> rho;
  for (std::size_t i = 0; i < k; ++i) {
    Matrix m(3, 3);
    m(2, i) = 1;
    rho.push_back(m);
  }
  return ActionMap(AlgebraSC::abelian("a" + std::to_string(k), k), heisenberg(), rho);
}

// 1-dim abelian on 1-dim abelian, rho = 0.
inline ActionMap toyAction() {
  return ActionMap(AlgebraSC::abelian("g1", 1), AlgebraSC::abelian("h1", 1), {Matrix(1, 1)});
}

// sl2 on (e, h, f) acting trivially on a 1-dim abelian algebra.
inline AlgebraSC sl2() {
  StructureTable t(3);
  t.set(0, 2, vec({0, 1, 0}));
  t.set(2, 0, vec({0, -1, 0}));
  t.set(1, 0, vec({2, 0, 0}));
  t.set(0, 1, vec({-2, 0, 0}));
  t.set(1, 2, vec({0, 0, -2}));
  t.set(2, 1, vec({0, 0, 2}));
  return AlgebraSC("sl2", t, Flavor::lie);
}

inline ActionMap sl2Trivial() {
  return ActionMap(sl2(), AlgebraSC::abelian("k", 1), {Matrix(1, 1), Matrix(1, 1), Matrix(1, 1)});
}

// The Leibniz-Lie example on H3.
inline LeibnizLie h3LeibnizLie() {
  StructureTable tri(3);
  tri.set(0, 0, vec({0, 0, -1}));
  tri.set(0, 1, vec({0, 0, 1}));
  tri.set(1, 1, vec({0, 0, 1}));
  tri.set(1, 0, vec({0, 0, -1}));
  return {heisenberg(), tri};
}

// e_i |> e_j = c_ij e3 for i, j in {1, 2}, zero otherwise.
inline LeibnizLie h3LeibnizLie(const std::vector<Rational>& c) {
  StructureTable tri(3);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) tri.set(i, j, vec({0, 0, c[2 * i + j]}));
  return {heisenberg(), tri};
}

struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }
  Rational rational(long range = 3) { return Rational(integer(-range, range), integer(1, 3)); }
  // Zero with probability about one half, so residual checks see both outcomes.
  Rational sparse() { return integer(0, 1) ? Rational() : rational(); }
  Vector vector(std::size_t n) {
    Vector v(n);
    for (auto& x : v) x = rational();
    return v;
  }
  Matrix matrix(std::size_t r, std::size_t c, bool sparse = false) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = sparse ? this->sparse() : rational();
    return m;
  }
  MultiMap multimap(std::size_t arity, std::size_t dom, std::size_t cod) {
    MultiMap f(arity, dom, cod);
    std::vector<Rational> coeffs(f.coefficients().size());
    for (auto& x : coeffs) x = rational();
    return MultiMap::fromCoefficients(arity, dom, cod, coeffs);
  }
  StructureTable table(std::size_t n) {
    StructureTable t(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t.set(i, j, vector(n));
    return t;
  }
};

} // namespace fx

#endif
