#include "doctest.h"

#include "apolar/parse.hpp"
#include "apolar/ring.hpp"
#include "support.hpp"

using namespace apolar;

namespace {

Polynomial P(const char* s, int x, int u) { return parse_polynomial(s, VariableSplit(x, u)); }
DiffOperator D(const char* s, int x, int u) { return parse_operator(s, VariableSplit(x, u)); }

}  // namespace

TEST_CASE("variable split invariants") {
  CHECK_THROWS_AS(VariableSplit(0, 2), ContractError);
  CHECK_THROWS_AS(VariableSplit(1, -1), ContractError);
  VariableSplit s(2, 3);
  CHECK(s.size() == 5);
  CHECK(s.name(0) == "x0");
  CHECK(s.name(2) == "u1");
  CHECK(s.name(4, Alphabet::dual) == "U3");
}

TEST_CASE("apply: single derivative, full contraction, oversized operator") {
  CHECK(apply(D("X0", 1, 1), P("x0^2*u1", 1, 1)) == P("2*x0*u1", 1, 1));
  CHECK(apply(D("U1*U2*U3", 1, 3), P("u1*u2*u3", 1, 3)) == P("1", 1, 3));
  CHECK(apply(D("X0^3", 1, 3), P("x0^2*u1*u2*u3", 1, 3)).is_zero());
}

TEST_CASE("apply rejects mismatched splits") {
  CHECK_THROWS_AS(apply(D("X0", 1, 1), P("x0^2", 2, 0)), StructuralError);
}

TEST_CASE("bidegree") {
  CHECK(bidegree(P("x0^2*u1*u2*u3 + x1^2*u1*u2*u4", 2, 4)) == Bidegree{2, 3});
  CHECK_FALSE(bidegree(P("x0 + u1", 1, 1)).has_value());
  CHECK(bidegree(P("7", 1, 0)) == Bidegree{0, 0});
  CHECK_FALSE(bidegree(Polynomial(VariableSplit(1, 0))).has_value());
}

TEST_CASE("monomial_basis sizes and order") {
  const auto b = monomial_basis(VariableSplit(2, 0), Bidegree{2, 0});
  REQUIRE(b.size() == 3);
  CHECK(to_string(b[0], VariableSplit(2, 0)) == "x0^2");
  CHECK(to_string(b[1], VariableSplit(2, 0)) == "x0*x1");
  CHECK(to_string(b[2], VariableSplit(2, 0)) == "x1^2");
  // Frozen from the enumeration oracle.
  CHECK(oracle::bigraded_monomials(8, 6, 1, 1).size() == 48);
  CHECK(monomial_basis(VariableSplit(8, 6), Bidegree{1, 1}).size() == 48);
  CHECK(monomial_basis(VariableSplit(3, 2), Bidegree{0, 0}).size() == 1);
  CHECK(monomial_basis(VariableSplit(3, 2), Bidegree{0, 0}).front().is_one());
}

TEST_CASE("monomial_basis agrees with the enumeration oracle") {
  for (int x = 1; x <= 3; ++x)
    for (int u = 0; u <= 3; ++u)
      for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j) {
          const auto basis = monomial_basis(VariableSplit(x, u), Bidegree{i, j});
          const auto expect = oracle::bigraded_monomials(x, u, i, j);
          CHECK(basis.size() == expect.size());
          const mpz_class count = binomial(i + x - 1, i) * (u == 0 ? mpz_class(j == 0) : binomial(j + u - 1, j));
          CHECK(basis.size() == count.get_ui());
          for (std::size_t a = 1; a < basis.size(); ++a) CHECK(precedes(basis[a - 1], basis[a]));
        }
}

TEST_CASE("grevlex within a degree") {
  const VariableSplit s(3, 0);
  // x0*x2 vs x1^2: last differing index is 2, where x1^2 has the smaller exponent.
  CHECK(precedes(P("x1^2", 3, 0).terms().begin()->first, P("x0*x2", 3, 0).terms().begin()->first));
  CHECK(precedes(P("x0^2", 3, 0).terms().begin()->first, P("x1^2", 3, 0).terms().begin()->first));
  CHECK(precedes(P("x0^3", 3, 0).terms().begin()->first, P("x0^2", 3, 0).terms().begin()->first));
}

TEST_CASE("polynomial canonical form") {
  const auto f = P("x0 + x1 - x0", 2, 0);
  CHECK(f == P("x1", 2, 0));
  CHECK(P("x0 - x0", 2, 0).is_zero());
  CHECK(P("x0*u1 + u1*x0", 1, 1) == P("2*x0*u1", 1, 1));
  CHECK(to_string(P("3/2*x1 - x0^2*u2", 2, 2)) == "-x0^2*u2 + 3/2*x1");
  CHECK(to_string(D("3/2*X1 - X0^2*U2", 2, 2)) == "-X0^2*U2 + 3/2*X1");
}

TEST_CASE("property: bilinearity and composition of apply") {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const VariableSplit s(static_cast<int>(rng.uniform(1, 2)), static_cast<int>(rng.uniform(0, 2)));
    const int d = static_cast<int>(rng.uniform(2, 5));
    const int dx = s.u_count() ? static_cast<int>(rng.uniform(0, d)) : d;
    const auto f = gen::bihomogeneous(rng, s, dx, d - dx, 4);
    const auto g = gen::bihomogeneous(rng, s, dx, d - dx, 3);
    const int ea = static_cast<int>(rng.uniform(0, 2));
    const auto a = DiffOperator(gen::bihomogeneous(rng, s, s.u_count() ? 0 : ea, s.u_count() ? ea : 0, 2));
    const auto b = DiffOperator(gen::bihomogeneous(rng, s, 1, 0, 2));
    const Rational al = rng.rational(5), be = rng.rational(5);
    CHECK(apply(al * a + be * b, f) == apply(a, f) * al + apply(b, f) * be);
    CHECK(apply(a, f + g) == apply(a, f) + apply(a, g));
    CHECK(apply(a, apply(b, f)) == apply(a * b, f));
    CHECK(apply(b, apply(a, f)) == apply(a * b, f));
  }
}

TEST_CASE("property: apply matches naive differentiation") {
  Rng rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    const VariableSplit s(static_cast<int>(rng.uniform(1, 3)), static_cast<int>(rng.uniform(1, 2)));
    const auto f = gen::bihomogeneous(rng, s, static_cast<int>(rng.uniform(0, 3)), static_cast<int>(rng.uniform(0, 3)), 5);
    const auto op = gen::random_monomial(rng, s, static_cast<int>(rng.uniform(0, 3)), static_cast<int>(rng.uniform(0, 2)));
    const oracle::Exps e(op.exponents().begin(), op.exponents().end());
    CHECK(oracle::dense(apply(op, f)) == oracle::differentiate(oracle::dense(f), e));
  }
}

TEST_CASE("property: degree bookkeeping") {
  Rng rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const VariableSplit s(2, 2);
    const int d1 = static_cast<int>(rng.uniform(0, 3)), d2 = static_cast<int>(rng.uniform(0, 3));
    const auto f = gen::bihomogeneous(rng, s, d1, d2, 4);
    const int i = static_cast<int>(rng.uniform(0, 4)), j = static_cast<int>(rng.uniform(0, 4));
    const auto r = apply(gen::random_monomial(rng, s, i, j), f);
    if (i > d1 || j > d2)
      CHECK(r.is_zero());
    else if (!r.is_zero())
      CHECK(bidegree(r) == Bidegree{d1 - i, d2 - j});
  }
}

TEST_CASE("property: arithmetic agrees with a dense oracle") {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const VariableSplit s(2, 1);
    const auto f = gen::bihomogeneous(rng, s, 1, 1, 3);
    const auto g = gen::bihomogeneous(rng, s, 2, 0, 3);
    oracle::Dense sum = oracle::dense(f), prod;
    for (const auto& [e, c] : oracle::dense(g)) sum[e] += c;
    std::erase_if(sum, [](const auto& p) { return p.second == 0; });
    for (const auto& [a, ca] : oracle::dense(f))
      for (const auto& [b, cb] : oracle::dense(g)) {
        oracle::Exps e(a.size());
        for (std::size_t v = 0; v < a.size(); ++v) e[v] = a[v] + b[v];
        prod[e] += ca * cb;
      }
    std::erase_if(prod, [](const auto& p) { return p.second == 0; });
    CHECK(oracle::dense(f + g) == sum);
    CHECK(oracle::dense(f * g) == prod);
    CHECK((f - f).is_zero());
  }
}

TEST_CASE("pairing is the scalar apply") {
  const VariableSplit s(2, 0);
  const auto f = P("x0^2 + 3*x0*x1", 2, 0);
  CHECK(pairing(D("X0^2", 2, 0).polynomial(), f) == 2);
  CHECK(pairing(D("X0*X1", 2, 0).polynomial(), f) == 3);
  CHECK(pairing(D("X1^2", 2, 0).polynomial(), f) == 0);
}

TEST_CASE("evaluate and pow") {
  const auto f = P("x0^2*u1 - 3/2*x1", 2, 1);
  const std::vector<Rational> pt{Rational(2), Rational(1), Rational(-1)};
  CHECK(f.evaluate(pt) == Rational(-11) / 2);
  CHECK(P("x0 + x1", 2, 0).pow(2) == P("x0^2 + 2*x0*x1 + x1^2", 2, 0));
  CHECK(P("x0 + x1", 2, 0).pow(0) == P("1", 2, 0));
}
