#include "doctest.h"

#include <algorithm>

#include "apolar/nagata.hpp"
#include "apolar/parse.hpp"
#include "support.hpp"

using namespace apolar;

namespace {

std::vector<Polynomial> polys(const VariableSplit& s, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(parse_polynomial(t, s));
  return out;
}

NagataForm pyramids() {
  const VariableSplit s(8, 6);
  return build_nagata(2, polys(s, {"u1*u2*u3", "u1*u2*u4", "u1*u4*u5", "u1*u3*u5", "u2*u3*u6",
                                   "u2*u4*u6", "u4*u5*u6", "u3*u5*u6"}));
}

std::vector<Rational> point_on_line(const LinePencil& l, const Rational& lambda, const Rational& mu) {
  std::vector<Rational> p;
  for (const auto& b : l.base) p.push_back(lambda * b);
  for (const auto& a : l.alpha) p.push_back(mu * a);
  return p;
}

Rational power(Rational q, int e) {
  Rational r = 1;
  while (e-- > 0) r *= q;
  return r;
}

}  // namespace

TEST_CASE("build the two-pyramid form") {
  const auto form = pyramids();
  CHECK(form.order == 2);
  CHECK(form.u_degree == 3);
  CHECK(form.warnings.empty());
  const auto expect = parse_polynomial(
      "x0^2*u1*u2*u3 + x1^2*u1*u2*u4 + x2^2*u1*u4*u5 + x3^2*u1*u3*u5 + x4^2*u2*u3*u6 + "
      "x5^2*u2*u4*u6 + x6^2*u4*u5*u6 + x7^2*u3*u5*u6",
      VariableSplit(8, 6));
  CHECK(form.f == expect);
}

TEST_CASE("build with order one and a single g") {
  const VariableSplit s(2, 2);
  const auto form = build_nagata(1, polys(s, {"u1^2", "u1*u2 - u2^2"}));
  CHECK(form.f == parse_polynomial("x0*u1^2 + x1*u1*u2 - x1*u2^2", s));
  CHECK(form.warnings.empty());
  const auto one = build_nagata(3, polys(VariableSplit(1, 1), {"u1"}));
  CHECK(to_string(one.f) == "x0^3*u1");
}

TEST_CASE("build contracts and warnings") {
  const VariableSplit s(2, 2);
  CHECK_THROWS_AS(build_nagata(1, polys(s, {"u1"})), ContractError);
  CHECK_THROWS_AS(build_nagata(0, polys(s, {"u1", "u2"})), ContractError);
  CHECK_THROWS_AS(build_nagata(1, polys(s, {"u1", "u2^2"})), ContractError);
  CHECK_THROWS_AS(build_nagata(1, polys(s, {"u1", "x0"})), ContractError);
  CHECK_THROWS_AS(build_nagata(1, polys(s, {"1", "2"})), ContractError);
  CHECK_THROWS_AS(build_nagata(1, {}), ContractError);
  CHECK_THROWS_AS(build_nagata(1, {parse_polynomial("u1", s), parse_polynomial("u1", VariableSplit(2, 3))}),
                  StructuralError);

  const auto w = build_nagata(1, polys(s, {"u1^2", "2*u1^2"}));
  REQUIRE(w.warnings.size() == 2);
  CHECK(w.warnings[0] == "the g_i are linearly dependent");
  CHECK(w.warnings[1] == "u2 occurs in no g_i");
  CHECK(w.f == parse_polynomial("x0*u1^2 + 2*x1*u1^2", s));
}

TEST_CASE("recognize round trip") {
  const auto form = pyramids();
  const auto back = recognize_nagata(form.f);
  REQUIRE(back.has_value());
  CHECK(back->order == 2);
  CHECK(back->u_degree == 3);
  REQUIRE(back->g.size() == form.g.size());
  for (std::size_t i = 0; i < form.g.size(); ++i) CHECK(back->g[i] == form.g[i]);

  const VariableSplit s(2, 1);
  CHECK_FALSE(recognize_nagata(parse_polynomial("x0*x1*u1", s)).has_value());
  CHECK_FALSE(recognize_nagata(parse_polynomial("x0^2*u1 + x1*u1^2", s)).has_value());
}

TEST_CASE("restriction to a line") {
  const auto form = pyramids();
  LinePencil l{std::vector<Rational>(6), std::vector<Rational>(8)};
  l.alpha[0] = 1;
  l.base[0] = 1;
  CHECK(restrict_to_line(form, l) == 0);
  CHECK(line_on_hypersurface(form, l));

  const auto cube = build_nagata(2, polys(VariableSplit(1, 1), {"u1^3"}));
  CHECK(restrict_to_line(cube, LinePencil{{1}, {1}}) == 1);
  CHECK_FALSE(line_on_hypersurface(cube, LinePencil{{1}, {1}}));
  CHECK(restrict_to_line(cube, LinePencil{{Rational(1) / 2}, {3}}) == Rational(9) / 8);
}

TEST_CASE("restriction contracts") {
  const auto form = pyramids();
  CHECK_THROWS_AS(restrict_to_line(form, LinePencil{std::vector<Rational>(6), std::vector<Rational>(8, 1)}),
                  ContractError);
  CHECK_THROWS_AS(restrict_to_line(form, LinePencil{std::vector<Rational>(5, 1), std::vector<Rational>(8, 1)}),
                  ContractError);
  CHECK_THROWS_AS(sample_line_family(form, 0, 1), ContractError);
}

TEST_CASE("sampling the line family") {
  const auto form = pyramids();
  const auto s = sample_line_family(form, 25, 0);
  CHECK(s.trials == 25);
  CHECK(s.on_hypersurface == 25);
  CHECK(s.criterion_mismatches == 0);
  CHECK_FALSE(s.inconclusive);
  CHECK(s.singular_locus_check);
  CHECK(s.alpha_parameters == 5);
  CHECK(s.base_parameters == 6);
  CHECK(s.family_parameters == 11);
  REQUIRE(s.pencils.size() == 25);
  // Independent check at points (lambda : mu) off the d+1 used internally.
  for (const auto& l : s.pencils)
    for (int t = 0; t < 3; ++t) {
      const auto p = point_on_line(l, Rational(7 + t), Rational(-3 + 2 * t) / 5);
      CHECK(form.f.evaluate(p) == 0);
    }
  const auto again = sample_line_family(form, 25, 0);
  CHECK(again.attempts == s.attempts);
  for (std::size_t i = 0; i < s.pencils.size(); ++i) {
    CHECK(again.pencils[i].alpha == s.pencils[i].alpha);
    CHECK(again.pencils[i].base == s.pencils[i].base);
  }
}

TEST_CASE("sampling without solutions is inconclusive") {
  const auto form = build_nagata(1, polys(VariableSplit(1, 1), {"u1"}));
  const auto s = sample_line_family(form, 3, 4);
  CHECK(s.inconclusive);
  CHECK(s.on_hypersurface == 0);
  CHECK(s.attempts == kSampleAttemptBudget);
}

TEST_CASE("property: the line criterion matches pointwise evaluation") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int nx = static_cast<int>(rng.uniform(1, 3));
    const int nu = static_cast<int>(rng.uniform(1, 3));
    const VariableSplit s(nx, nu);
    const int d1 = static_cast<int>(rng.uniform(1, 3));
    const int d2 = static_cast<int>(rng.uniform(1, 3));
    std::vector<Polynomial> g;
    for (int i = 0; i < nx; ++i) g.push_back(gen::bihomogeneous(rng, s, 0, d2, 2));
    const auto form = build_nagata(d1, g);
    for (int t = 0; t < 5; ++t) {
      LinePencil l;
      do {
        l.alpha.clear();
        for (int j = 0; j < nu; ++j) l.alpha.emplace_back(rng.uniform(-1, 1));
      } while (std::all_of(l.alpha.begin(), l.alpha.end(), [](const Rational& c) { return c == 0; }));
      do {
        l.base.clear();
        for (int i = 0; i < nx; ++i) l.base.emplace_back(rng.uniform(-1, 1));
      } while (std::all_of(l.base.begin(), l.base.end(), [](const Rational& c) { return c == 0; }));
      const Rational c = restrict_to_line(form, l);
      CHECK(line_on_hypersurface(form, l) == (c == 0));
      const Rational lambda(rng.uniform(1, 9)), mu(rng.uniform(1, 9));
      CHECK(form.f.evaluate(point_on_line(l, lambda, mu)) == c * power(lambda, d1) * power(mu, d2));
    }
    const auto summary = sample_line_family(form, 3, static_cast<std::uint64_t>(trial));
    CHECK(summary.criterion_mismatches == 0);
    for (const auto& l : summary.pencils) CHECK(restrict_to_line(form, l) == 0);
  }
}

TEST_CASE("singular locus along the u-space") {
  CHECK(singular_along_u_space(pyramids()));
  const auto linear = build_nagata(1, polys(VariableSplit(2, 2), {"u1^2", "u2^2"}));
  CHECK_FALSE(singular_along_u_space(linear));
  // d1 >= 2: every x-partial carries an x and every u-partial an x^{d1}.
  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    const VariableSplit s(2, 2);
    const auto form = build_nagata(static_cast<int>(rng.uniform(2, 3)),
                                   {gen::bihomogeneous(rng, s, 0, 2, 2), gen::bihomogeneous(rng, s, 0, 2, 2)});
    CHECK(singular_along_u_space(form));
  }
}
