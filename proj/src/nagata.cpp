#include "apolar/nagata.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "apolar/linalg.hpp"
#include "apolar/random.hpp"

namespace apolar {

namespace {

bool independent(const std::vector<Polynomial>& g) {
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  linalg::SpanBuilder span;
  for (const auto& p : g) {
    linalg::SparseVector v;
    for (const auto& [m, c] : p.terms()) v.emplace_back(index.try_emplace(m, index.size()).first->second, c);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    if (!span.insert(std::move(v))) return false;
  }
  return true;
}

std::vector<Rational> u_point(const VariableSplit& split, std::span<const Rational> alpha) {
  std::vector<Rational> p(static_cast<std::size_t>(split.size()));
  for (int j = 0; j < split.u_count(); ++j) p[split.x_count() + j] = alpha[j];
  return p;
}

bool all_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& c) { return c == 0; });
}

Rational power(const Rational& q, int e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

void check_line(const NagataForm& form, const LinePencil& line) {
  const auto& s = form.f.split();
  if (line.alpha.size() != static_cast<std::size_t>(s.u_count()) ||
      line.base.size() != static_cast<std::size_t>(s.x_count()))
    throw ContractError("line coordinates do not match the variable split");
  if (all_zero(line.alpha) || all_zero(line.base))
    throw ContractError("a projective point needs a nonzero coordinate");
}

// Coordinates are zero with probability 1/3 so that rejection sampling can
// hit the coordinate subspaces where c vanishes.
std::vector<Rational> draw(Rng& rng, std::size_t n, bool sparse) {
  std::vector<Rational> v(n);
  do {
    for (auto& c : v) c = (sparse && rng.uniform(0, 2) == 0) ? Rational(0) : rng.rational(10);
  } while (all_zero(v));
  return v;
}

// Coefficients of p as a polynomial in variable t, every other variable set
// from `point`.
std::map<int, Rational> univariate(const Polynomial& p, int t, std::span<const Rational> point) {
  std::map<int, Rational> out;
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (static_cast<int>(v) == t || m[v] == 0) continue;
      term *= power(point[v], m[v]);
    }
    out[m[static_cast<std::size_t>(t)]] += term;
  }
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  return out;
}

// Tries to make c vanish by solving for one coordinate in which it is linear.
bool solve_linear(const NagataForm& form, LinePencil& line) {
  const auto& s = form.f.split();
  if (form.order == 1) {
    std::vector<Rational> gi;
    for (const auto& g : form.g) gi.push_back(g.evaluate(u_point(s, line.alpha)));
    for (std::size_t t = 0; t < gi.size(); ++t) {
      if (gi[t] == 0) continue;
      Rational rest = 0;
      for (std::size_t i = 0; i < gi.size(); ++i)
        if (i != t) rest += line.base[i] * gi[i];
      line.base[t] = -rest / gi[t];
      return !all_zero(line.base);
    }
    return true;  // every g_i(a) = 0
  }
  // C(u) = sum x_bar_i^{d1} g_i(u), solved for one u-coordinate.
  Polynomial C(s);
  for (std::size_t i = 0; i < form.g.size(); ++i) {
    C += form.g[i] * power(line.base[i], form.order);
  }
  auto point = u_point(s, line.alpha);
  for (int j = 0; j < s.u_count(); ++j) {
    const auto coeffs = univariate(C, s.x_count() + j, point);
    if (coeffs.empty()) return true;
    if (coeffs.rbegin()->first != 1) continue;
    const Rational c0 = coeffs.count(0) ? coeffs.at(0) : Rational(0);
    auto alpha = line.alpha;
    alpha[j] = -c0 / coeffs.at(1);
    if (all_zero(alpha)) continue;
    line.alpha = std::move(alpha);
    return true;
  }
  return false;
}

}  // namespace

NagataForm build_nagata(int order, std::vector<Polynomial> g) {
  if (g.empty()) throw ContractError("a Nagata form needs at least one g_i");
  if (order < 1) throw ContractError("Nagata order must be at least 1");
  const VariableSplit split = g.front().split();
  if (split.x_count() != static_cast<int>(g.size()))
    throw ContractError("x_count must equal the number of g_i");
  std::optional<int> d2;
  for (const auto& p : g) {
    if (!(p.split() == split)) throw StructuralError("g_i over different variable splits");
    if (p.is_zero()) continue;
    const auto b = bidegree(p);
    if (!b || b->x != 0) throw ContractError("each g_i must be a form in the u-variables only");
    if (d2 && *d2 != b->u) throw ContractError("the g_i have mixed degrees");
    d2 = b->u;
  }
  if (!d2 || *d2 < 1) throw ContractError("the g_i must have a common degree d2 >= 1");

  NagataForm form;
  form.order = order;
  form.u_degree = *d2;
  form.f = Polynomial(split);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto xi = Polynomial::monomial(
        split, Monomial::variable(static_cast<std::size_t>(split.size()), static_cast<int>(i), order));
    form.f += xi * g[i];
  }
  if (!independent(g)) form.warnings.push_back("the g_i are linearly dependent");
  std::vector<bool> used(static_cast<std::size_t>(split.u_count()), false);
  for (const auto& p : g)
    for (const auto& [m, c] : p.terms())
      for (int j = 0; j < split.u_count(); ++j)
        if (m[static_cast<std::size_t>(split.x_count() + j)] > 0) used[j] = true;
  for (int j = 0; j < split.u_count(); ++j)
    if (!used[j]) form.warnings.push_back("u" + std::to_string(j + 1) + " occurs in no g_i");
  form.g = std::move(g);
  return form;
}

std::optional<NagataForm> recognize_nagata(const Polynomial& f) {
  const auto b = bidegree(f);
  if (!b || b->x < 1 || b->u < 1) return std::nullopt;
  const auto& s = f.split();
  std::vector<Polynomial> g(static_cast<std::size_t>(s.x_count()), Polynomial(s));
  for (const auto& [m, c] : f.terms()) {
    int which = -1;
    for (int i = 0; i < s.x_count(); ++i) {
      if (m[static_cast<std::size_t>(i)] == 0) continue;
      if (which >= 0 || m[static_cast<std::size_t>(i)] != b->x) return std::nullopt;
      which = i;
    }
    Monomial rest = m;
    rest.set(static_cast<std::size_t>(which), 0);
    g[static_cast<std::size_t>(which)].add_term(rest, c);
  }
  auto form = build_nagata(b->x, std::move(g));
  if (!(form.f == f)) return std::nullopt;
  return form;
}

Rational restrict_to_line(const NagataForm& form, const LinePencil& line) {
  check_line(form, line);
  const auto point = u_point(form.f.split(), line.alpha);
  Rational c = 0;
  for (std::size_t i = 0; i < form.g.size(); ++i) {
    c += power(line.base[i], form.order) * form.g[i].evaluate(point);
  }
  return c;
}

bool line_on_hypersurface(const NagataForm& form, const LinePencil& line) {
  check_line(form, line);
  const auto& s = form.f.split();
  const int d = form.order + form.u_degree;
  std::vector<Rational> p(static_cast<std::size_t>(s.size()));
  for (int t = 0; t <= d; ++t) {
    for (int i = 0; i < s.x_count(); ++i) p[i] = line.base[i];
    for (int j = 0; j < s.u_count(); ++j) p[s.x_count() + j] = t * line.alpha[j];
    if (form.f.evaluate(p) != 0) return false;
  }
  return true;
}

bool singular_along_u_space(const NagataForm& form) {
  const auto& s = form.f.split();
  for (int v = 0; v < s.size(); ++v) {
    // A term survives x = 0 only if it has no x at all.
    const Polynomial partial = form.f.derivative(v);
    for (const auto& [m, c] : partial.terms()) {
      bool has_x = false;
      for (int i = 0; i < s.x_count(); ++i) has_x = has_x || m[static_cast<std::size_t>(i)] > 0;
      if (!has_x) return false;
    }
  }
  return true;
}

IncidenceSummary sample_line_family(const NagataForm& form, std::size_t trials,
                                    std::uint64_t seed) {
  if (trials == 0) throw ContractError("trials must be at least 1");
  const auto& s = form.f.split();
  IncidenceSummary out;
  out.seed = seed;
  out.singular_locus_check = singular_along_u_space(form);
  out.alpha_parameters = s.u_count() - 1;
  out.base_parameters = s.x_count() - 2;
  out.family_parameters = out.alpha_parameters + out.base_parameters;

  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    std::optional<LinePencil> found;
    for (std::size_t a = 0; a < kSampleAttemptBudget && !found; ++a) {
      ++out.attempts;
      const bool sparse = a % 2 == 1;
      LinePencil line{draw(rng, static_cast<std::size_t>(s.u_count()), sparse),
                      draw(rng, static_cast<std::size_t>(s.x_count()), sparse)};
      solve_linear(form, line);
      if (all_zero(line.alpha) || all_zero(line.base)) continue;
      if (restrict_to_line(form, line) != 0) continue;
      found = std::move(line);
    }
    if (!found) {
      out.inconclusive = true;
      break;
    }
    ++out.trials;
    if (line_on_hypersurface(form, *found))
      ++out.on_hypersurface;
    else
      ++out.criterion_mismatches;
    out.pencils.push_back(std::move(*found));
  }
  return out;
}

}  // namespace apolar
