#include "doctest.h"

#include "apolar/kernels.hpp"
#include "support.hpp"

using namespace apolar;
using kernels::Exec;

TEST_CASE("apply_each: serial and parallel agree") {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const VariableSplit s(3, 2);
    const auto f = gen::bihomogeneous(rng, s, 3, 2, 8);
    const auto ops = monomial_basis(s, Bidegree{static_cast<int>(rng.uniform(0, 3)), static_cast<int>(rng.uniform(0, 2))});
    CHECK(kernels::apply_each(ops, f, Exec::serial) == kernels::apply_each(ops, f, Exec::parallel));
  }
}

TEST_CASE("hessian_entries: serial and parallel agree and are symmetric") {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const VariableSplit s(2, 2);
    const auto f = gen::bihomogeneous(rng, s, 2, 2, 6);
    const auto basis = monomial_basis(static_cast<std::size_t>(s.size()), static_cast<int>(rng.uniform(0, 2)));
    const auto a = kernels::hessian_entries(basis, f, Exec::serial);
    const auto b = kernels::hessian_entries(basis, f, Exec::parallel);
    CHECK(a == b);
    const std::size_t n = basis.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(a[i * n + j] == a[j * n + i]);
  }
}

TEST_CASE("evaluate_each: serial and parallel agree") {
  Rng rng(12);
  const VariableSplit s(3, 1);
  std::vector<Polynomial> polys;
  for (int i = 0; i < 40; ++i) polys.push_back(gen::bihomogeneous(rng, s, 2, 1, 4));
  const std::vector<Rational> pt{Rational(1), Rational(-2), Rational(3) / 4, Rational(5)};
  const auto a = kernels::evaluate_each(polys, pt, Exec::serial);
  CHECK(a == kernels::evaluate_each(polys, pt, Exec::parallel));
  for (std::size_t i = 0; i < polys.size(); ++i) CHECK(a[i] == polys[i].evaluate(pt));
}

TEST_CASE("symbolic determinant: subset-minor expansion matches Leibniz") {
  Rng rng(6);
  for (int trial = 0; trial < 25; ++trial) {
    const VariableSplit s(2, 1);
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
    std::vector<Polynomial> entries;
    for (std::size_t i = 0; i < n * n; ++i)
      entries.push_back(rng.uniform(0, 3) == 0 ? Polynomial(s) : gen::bihomogeneous(rng, s, 1, 0, 2));
    const auto a = kernels::symbolic_determinant(entries, n, Exec::serial);
    const auto b = kernels::symbolic_determinant(entries, n, Exec::parallel);
    CHECK(a == b);
    // And at a point, against the dense oracle.
    const std::vector<Rational> pt{Rational(2), Rational(-3), Rational(1)};
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i][j] = entries[i * n + j].evaluate(pt);
    CHECK(a.evaluate(pt) == oracle::determinant(m));
  }
}

TEST_CASE("symbolic determinant contracts") {
  const VariableSplit s(1, 0);
  std::vector<Polynomial> three(3, Polynomial(s, 1));
  CHECK_THROWS_AS(kernels::symbolic_determinant(three, 2), ContractError);
  std::vector<Polynomial> empty;
  CHECK_THROWS_AS(kernels::symbolic_determinant(empty, 0), ContractError);
}
