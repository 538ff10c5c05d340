#include "apolar/lefschetz.hpp"

#include <algorithm>

#include "apolar/kernels.hpp"
#include "apolar/random.hpp"

namespace apolar {

namespace {

void check_order(const GorensteinAlgebra& algebra, int k) {
  if (k < 0 || 2 * k > algebra.socle_degree())
    throw ContractError("Hessian order outside [0, floor(d/2)]");
}

std::vector<Rational> random_point(Rng& rng, std::size_t n, long bound) {
  std::vector<Rational> p(n);
  for (auto& c : p) c = Rational(rng.uniform(-bound, bound));
  return p;
}

DiffOperator operator_from(const VariableSplit& split, std::span<const Rational> coeffs) {
  Polynomial p(split);
  for (int v = 0; v < split.size(); ++v)
    p.add_term(Monomial::variable(static_cast<std::size_t>(split.size()), v), coeffs[v]);
  return DiffOperator(p);
}

// Coefficient vectors of the forms to try: the canonical element, then the
// random draws.
std::vector<std::vector<Rational>> candidates(const VariableSplit& split, const Strategy& s,
                                              std::uint64_t seed) {
  const auto n = static_cast<std::size_t>(split.size());
  std::vector<std::vector<Rational>> out;
  std::vector<Rational> canonical(n);
  for (int v = 0; v < split.x_count(); ++v) canonical[v] = 1;
  out.push_back(std::move(canonical));
  Rng rng(seed);
  while (out.size() < s.trials + 1) {
    std::vector<Rational> a(n);
    bool zero = true;
    for (auto& c : a) {
      c = Rational(rng.uniform(-5, 5));
      if (c != 0) zero = false;
    }
    if (!zero) out.push_back(std::move(a));
  }
  return out;
}

}  // namespace

HessianMatrix hessian_matrix(const GorensteinAlgebra& algebra, int k) {
  check_order(algebra, k);
  HessianMatrix h;
  h.order = k;
  h.basis = algebra.coset_basis(k);
  h.entries = kernels::hessian_entries(h.basis, algebra.dual_generator());
  return h;
}

HessianMatrix hessian_matrix(const Polynomial& f, int k) {
  return hessian_matrix(GorensteinAlgebra(f), k);
}

Rational hessian_at(const HessianMatrix& h, std::span<const Rational> point) {
  const std::size_t n = h.size();
  const auto values = kernels::evaluate_each(h.entries, point);
  linalg::Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = values[i * n + j];
  return m.determinant();
}

ZeroTest hessian_vanishes(const HessianMatrix& h, const ZeroTestOptions& options) {
  ZeroTest out;
  out.sigma = h.size();
  out.seed = options.seed;
  const auto nvars = static_cast<std::size_t>(h.entries.front().split().size());
  Rng rng(options.seed);

  std::optional<Polynomial> det;
  if (out.sigma <= options.symbolic_threshold && out.sigma <= kernels::kMaxSymbolicOrder) {
    out.symbolic = true;
    det = kernels::symbolic_determinant(h.entries, out.sigma);
    if (det->is_zero()) {
      out.vanishes = true;
      out.certainty = Certainty::certain;
      return out;
    }
  }

  long bound = 2;
  for (int r = 0; r < options.rounds; ++r, bound *= 2) {
    auto point = random_point(rng, nvars, bound);
    Rational value = det ? det->evaluate(point) : hessian_at(h, point);
    out.rounds = r + 1;
    if (value != 0) {
      out.point = std::move(point);
      out.value = std::move(value);
      out.vanishes = false;
      out.certainty = Certainty::certain;
      return out;
    }
  }
  // A nonzero symbolic determinant is a certificate even without a point.
  out.vanishes = !det.has_value();
  out.certainty = det ? Certainty::certain : Certainty::probabilistic;
  return out;
}

ZeroTest hessian_vanishes(const Polynomial& f, int k, const ZeroTestOptions& options) {
  return hessian_vanishes(hessian_matrix(f, k), options);
}

MultiplicationMap multiplication_map(const GorensteinAlgebra& algebra, const DiffOperator& L,
                                     int power, int source_degree) {
  if (!(L.split() == algebra.split())) throw StructuralError("operator over a different split");
  if (L.polynomial().degree() != 1) throw ContractError("Lefschetz element must be a linear form");
  const int d = algebra.socle_degree();
  if (power < 0 || source_degree < 0 || source_degree + power > d)
    throw ContractError("multiplication map leaves [0, d]");

  MultiplicationMap out{L, power, source_degree, algebra.coset_basis(source_degree),
                        algebra.coset_basis(source_degree + power), {}};
  const Polynomial shifted =
      apply(DiffOperator(L.polynomial().pow(power)), algebra.dual_generator());
  const auto images = kernels::apply_each(out.source_basis, shifted);
  const auto coords = algebra.inverse_system_coordinates(d - source_degree - power, images);
  out.matrix = linalg::Matrix(out.target_basis.size(), out.source_basis.size());
  for (std::size_t c = 0; c < coords.size(); ++c)
    for (std::size_t e = 0; e < coords[c].size(); ++e) out.matrix(e, c) = coords[c][e];
  return out;
}

MultiplicationMap multiplication_map(const Polynomial& f, const DiffOperator& L, int power,
                                     int source_degree) {
  return multiplication_map(GorensteinAlgebra(f), L, power, source_degree);
}

std::string to_string(Property p) { return p == Property::wlp ? "WLP" : "SLP"; }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    default: return "inconclusive";
  }
}

DiffOperator canonical_element(const VariableSplit& split) {
  Polynomial p(split);
  for (int v = 0; v < split.x_count(); ++v)
    p.add_term(Monomial::variable(static_cast<std::size_t>(split.size()), v), 1);
  return DiffOperator(p);
}

LefschetzReport check_wlp(const Polynomial& f, const LefschetzOptions& options) {
  const GorensteinAlgebra algebra(f);
  const int d = algebra.socle_degree();
  const int middle = d >= 1 ? (d - 1) / 2 : 0;
  LefschetzReport report;
  report.property = Property::wlp;
  report.seed = options.seed;
  report.trials = options.strategy.trials;

  // The middle map first: it fails most often and decides the rest.
  std::vector<int> degrees;
  if (d >= 1) degrees.push_back(middle);
  for (int i = 0; i < d; ++i)
    if (i != middle) degrees.push_back(i);

  for (const auto& a : candidates(f.split(), options.strategy, options.seed)) {
    const DiffOperator L = operator_from(f.split(), a);
    std::vector<RankEvidence> ranks;
    bool ok = true;
    for (int i : degrees) {
      const auto m = multiplication_map(algebra, L, 1, i);
      RankEvidence ev{i, 1, m.rank(), std::min(m.source_basis.size(), m.target_basis.size()),
                      i == middle};
      ranks.push_back(ev);
      if (ev.rank != ev.expected) {
        ok = false;
        break;
      }
    }
    if (ok) {
      std::sort(ranks.begin(), ranks.end(),
                [](const auto& x, const auto& y) { return x.source_degree < y.source_degree; });
      report.verdict = Verdict::holds;
      report.witness = L;
      report.ranks = std::move(ranks);
      return report;
    }
  }

  // For odd d the middle map is L : A_k -> A_{k+1} with k = (d-1)/2, which is
  // bijective exactly when hess^k(L) != 0.
  if (d % 2 == 1) {
    const auto h = hessian_matrix(algebra, middle);
    const auto z = hessian_vanishes(
        h, {options.symbolic_threshold, options.zero_test_rounds, options.seed});
    report.hessians.push_back({middle, h.size(), std::nullopt, z});
    if (z.vanishes && z.certainty == Certainty::certain) {
      report.verdict = Verdict::fails;
      report.note = "middle Hessian vanishes identically";
      return report;
    }
  }
  report.verdict = Verdict::inconclusive;
  report.note = "no witness among the tried forms";
  return report;
}

LefschetzReport check_slp(const Polynomial& f, const LefschetzOptions& options) {
  const GorensteinAlgebra algebra(f);
  const int d = algebra.socle_degree();
  LefschetzReport report;
  report.property = Property::slp;
  report.seed = options.seed;
  report.trials = options.strategy.trials;

  std::vector<HessianMatrix> hess;
  for (int k = 0; 2 * k <= d; ++k) hess.push_back(hessian_matrix(algebra, k));

  for (const auto& a : candidates(f.split(), options.strategy, options.seed)) {
    std::vector<HessianEvidence> values;
    bool ok = true;
    for (const auto& h : hess) {
      Rational v = hessian_at(h, a);
      if (v == 0) {
        ok = false;
        break;
      }
      values.push_back({h.order, h.size(), std::move(v), std::nullopt});
    }
    if (ok) {
      report.verdict = Verdict::holds;
      report.witness = operator_from(f.split(), a);
      report.hessians = std::move(values);
      return report;
    }
  }

  report.verdict = Verdict::inconclusive;
  report.note = "no witness among the tried forms";
  for (const auto& h : hess) {
    const auto z = hessian_vanishes(
        h, {options.symbolic_threshold, options.zero_test_rounds, options.seed});
    report.hessians.push_back({h.order, h.size(), std::nullopt, z});
    if (z.vanishes && z.certainty == Certainty::certain && report.verdict != Verdict::fails) {
      report.verdict = Verdict::fails;
      report.note = "hess^" + std::to_string(h.order) + " vanishes identically";
    }
  }
  return report;
}

}  // namespace apolar
