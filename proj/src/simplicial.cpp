#include "apolar/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace apolar {

int popcount(VertexSet s) { return std::popcount(s); }

std::vector<int> vertices_of(VertexSet s) {
  std::vector<int> out;
  for (int v = 0; v < kMaxVertices; ++v)
    if (s >> v & 1) out.push_back(v + 1);
  return out;
}

SimplicialComplex::SimplicialComplex(int vertices, std::vector<VertexSet> facets,
                                     std::vector<std::string> warnings)
    : vertices_(vertices), facets_(std::move(facets)), warnings_(std::move(warnings)) {
  std::set<VertexSet> faces;
  int top = 0;
  for (VertexSet m : facets_) {
    // All submasks of the facet, the empty face included.
    for (VertexSet s = m;; s = (s - 1) & m) {
      faces.insert(s);
      if (s == 0) break;
    }
    top = std::max(top, popcount(m));
    if (popcount(m) != popcount(facets_.front())) pure_ = false;
  }
  dimension_ = top - 1;
  f_.assign(static_cast<std::size_t>(top + 1), 0);
  for (VertexSet s : faces) ++f_[static_cast<std::size_t>(popcount(s))];
}

bool SimplicialComplex::contains(VertexSet face) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [face](VertexSet m) { return (face & ~m) == 0; });
}

std::vector<VertexSet> SimplicialComplex::minimal_nonfaces() const {
  std::set<std::pair<int, VertexSet>> found;
  const VertexSet all = (VertexSet{1} << vertices_) - 1;
  // Grow faces by one vertex; a non-face whose facets are all faces is minimal.
  std::set<VertexSet> faces;
  for (VertexSet m : facets_)
    for (VertexSet s = m;; s = (s - 1) & m) {
      faces.insert(s);
      if (s == 0) break;
    }
  for (VertexSet face : faces) {
    for (VertexSet rest = all & ~face; rest != 0; rest &= rest - 1) {
      const VertexSet s = face | (rest & -rest);
      if (faces.count(s)) continue;
      bool minimal = true;
      for (VertexSet t = s; t != 0 && minimal; t &= t - 1)
        minimal = faces.count(s & ~(t & -t)) > 0;
      if (minimal) found.emplace(popcount(s), s);
    }
  }
  std::vector<VertexSet> out;
  for (const auto& [size, s] : found) out.push_back(s);
  return out;
}

std::vector<std::vector<std::size_t>> SimplicialComplex::facet_components() const {
  const std::size_t n = facets_.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = r + 1; s < n; ++s)
      if (facets_[r] & facets_[s]) parent[find(s)] = find(r);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t root = find(r);
    if (slot[root] == n) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].push_back(r);
  }
  return out;
}

SimplicialComplex face_complex(const std::vector<std::vector<int>>& facets, int m) {
  if (facets.empty()) throw ContractError("a complex needs at least one facet");
  if (m < 1 || m > kMaxVertices)
    throw ContractError("vertex count must lie in [1, " + std::to_string(kMaxVertices) + "]");
  std::vector<VertexSet> masks;
  for (const auto& facet : facets) {
    if (facet.empty()) throw ContractError("empty facet");
    VertexSet s = 0;
    for (int v : facet) {
      if (v < 1 || v > m) throw ContractError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(m));
      const VertexSet bit = VertexSet{1} << (v - 1);
      if (s & bit) throw ContractError("vertex " + std::to_string(v) + " repeated in a facet");
      s |= bit;
    }
    masks.push_back(s);
  }
  std::vector<VertexSet> kept;
  std::vector<std::string> warnings;
  for (std::size_t r = 0; r < masks.size(); ++r) {
    bool dropped = false;
    for (std::size_t s = 0; s < masks.size() && !dropped; ++s) {
      if (r == s || (masks[r] & ~masks[s]) != 0) continue;
      // Equal facets: keep the first occurrence.
      dropped = masks[r] != masks[s] || s < r;
    }
    if (dropped)
      warnings.push_back("facet #" + std::to_string(r) + " is contained in another facet and was dropped");
    else
      kept.push_back(masks[r]);
  }
  return SimplicialComplex(m, std::move(kept), std::move(warnings));
}

namespace {

void require_pure(const SimplicialComplex& c, int k) {
  if (k < 1) throw ContractError("order k must be at least 1");
  if (!c.pure() || c.dimension() != k)
    throw ContractError("complex must be pure of dimension k = " + std::to_string(k));
}

VariableSplit split_of(const SimplicialComplex& c) {
  return VariableSplit(static_cast<int>(c.facets().size()), c.vertex_count());
}

Monomial dual_monomial(const VariableSplit& split, int r, int power, VertexSet u) {
  Monomial m(std::vector<int>(static_cast<std::size_t>(split.size()), 0));
  if (r >= 0) m.set(static_cast<std::size_t>(r), power);
  for (int v : vertices_of(u)) m.set(static_cast<std::size_t>(split.x_count() + v - 1), 1);
  return m;
}

DiffOperator op(const VariableSplit& split, const Monomial& m) {
  return DiffOperator::monomial(split, m);
}

}  // namespace

NagataForm complex_to_form(const SimplicialComplex& complex, int k) {
  require_pure(complex, k);
  const VariableSplit split = split_of(complex);
  std::vector<Polynomial> g;
  for (VertexSet m : complex.facets())
    g.push_back(Polynomial::monomial(split, dual_monomial(split, -1, 0, m)));
  return build_nagata(k, std::move(g));
}

std::vector<VertexSet> facets_of_form(const NagataForm& form) {
  const auto& split = form.f.split();
  std::vector<VertexSet> out;
  for (const auto& g : form.g) {
    if (g.term_count() != 1 || g.terms().begin()->second != 1)
      throw ContractError("g_i is not a monomial");
    const Monomial& m = g.terms().begin()->first;
    if (!m.is_square_free()) throw ContractError("g_i is not square-free");
    VertexSet s = 0;
    for (int v = 0; v < split.u_count(); ++v)
      if (m[static_cast<std::size_t>(split.x_count() + v)]) s |= VertexSet{1} << v;
    out.push_back(s);
  }
  return out;
}

std::vector<DiffOperator> ComplexPrediction::stated() const {
  std::vector<DiffOperator> out;
  for (const auto* family : {&powers, &nonfaces, &mixed, &binomials})
    out.insert(out.end(), family->begin(), family->end());
  return out;
}

std::vector<DiffOperator> ComplexPrediction::all() const {
  auto out = stated();
  out.insert(out.end(), completion.begin(), completion.end());
  return out;
}

ComplexPrediction predict_hilbert(const SimplicialComplex& complex, int k) {
  require_pure(complex, k);
  const auto& f = complex.f_vector();
  const std::size_t facets = complex.facets().size();
  ComplexPrediction p;
  p.order = k;
  p.h.assign(static_cast<std::size_t>(2 * k + 2), 0);
  for (int i = 0; i <= k; ++i) {
    for (int j = 0; j <= k + 1; ++j) {
      std::size_t dim = 0;
      if (i == 0)
        dim = f[static_cast<std::size_t>(j)];
      else if (i == k)
        dim = f[static_cast<std::size_t>(k + 1 - j)];
      else
        dim = facets * binomial(k + 1, j).get_ui();
      p.bigraded.push_back({i, j, dim});
      p.h[static_cast<std::size_t>(i + j)] += dim;
    }
  }
  return p;
}

ComplexPrediction predict_generators(const SimplicialComplex& complex, int k) {
  ComplexPrediction p = predict_hilbert(complex, k);
  const VariableSplit split = split_of(complex);
  const int n1 = split.x_count();
  const int m = complex.vertex_count();
  const auto& facets = complex.facets();

  for (const auto& mono : monomial_basis(split, Bidegree{k + 1, 0})) p.powers.push_back(op(split, mono));
  for (int v = 0; v < m; ++v) {
    Monomial sq(std::vector<int>(static_cast<std::size_t>(split.size()), 0));
    sq.set(static_cast<std::size_t>(n1 + v), 2);
    p.powers.push_back(op(split, sq));
  }

  for (VertexSet s : complex.minimal_nonfaces()) p.nonfaces.push_back(op(split, dual_monomial(split, -1, 0, s)));
  p.complement_empty = p.nonfaces.empty();

  // Subsets of size 1..k+1, ascending by size then mask.
  std::vector<VertexSet> subsets;
  for (int size = 1; size <= std::min(k + 1, m); ++size) {
    std::vector<bool> pick(static_cast<std::size_t>(m), false);
    std::fill(pick.end() - size, pick.end(), true);
    std::vector<VertexSet> level;
    do {
      VertexSet s = 0;
      for (int v = 0; v < m; ++v)
        if (pick[static_cast<std::size_t>(v)]) s |= VertexSet{1} << v;
      level.push_back(s);
    } while (std::next_permutation(pick.begin(), pick.end()));
    std::sort(level.begin(), level.end());
    subsets.insert(subsets.end(), level.begin(), level.end());
  }
  for (int r = 0; r < n1; ++r)
    for (int i = 1; i <= k; ++i)
      for (VertexSet s : subsets)
        if (!complex.contains(s) || (s & facets[static_cast<std::size_t>(r)]) == 0)
          p.mixed.push_back(op(split, dual_monomial(split, r, i, s)));

  for (int r = 0; r < n1; ++r) {
    for (int s = r + 1; s < n1; ++s) {
      const VertexSet mr = facets[static_cast<std::size_t>(r)];
      const VertexSet ms = facets[static_cast<std::size_t>(s)];
      const VertexSet shared = mr & ms;
      for (VertexSet t = shared; t != 0; t = (t - 1) & shared)
        p.binomials.push_back(op(split, dual_monomial(split, r, k, mr & ~t)) -
                              op(split, dual_monomial(split, s, k, ms & ~t)));
    }
  }

  if (k >= 2) {
    for (int r = 0; r < n1; ++r)
      for (int s = r + 1; s < n1; ++s) {
        Monomial xx(std::vector<int>(static_cast<std::size_t>(split.size()), 0));
        xx.set(static_cast<std::size_t>(r), 1);
        xx.set(static_cast<std::size_t>(s), 1);
        p.completion.push_back(op(split, xx));
      }
  }
  const auto components = complex.facet_components();
  for (std::size_t c = 1; c < components.size(); ++c) {
    const auto r = static_cast<int>(components.front().front());
    const auto s = static_cast<int>(components[c].front());
    p.completion.push_back(op(split, dual_monomial(split, r, k, facets[static_cast<std::size_t>(r)])) -
                           op(split, dual_monomial(split, s, k, facets[static_cast<std::size_t>(s)])));
  }
  return p;
}

namespace {

std::vector<IdealCheck> compare_ideal(const GorensteinAlgebra& algebra,
                                      const std::vector<DiffOperator>& generators, int d,
                                      std::size_t* checks) {
  const GeneratedIdeal J(algebra.split(), generators, true);
  std::vector<IdealCheck> out;
  std::size_t count = 0;
  for (int t = 0; t <= d + 1; ++t) {
    for (int i = t; i >= 0; --i) {
      const Bidegree b{i, t - i};
      const std::size_t q = J.quotient_dimension(b);
      const std::size_t a = algebra.dim(b);
      ++count;
      if (q != a) out.push_back({b.x, b.u, q, a});
    }
  }
  if (checks) *checks = count;
  return out;
}

}  // namespace

VerificationReport verify_prediction(const SimplicialComplex& complex, int k) {
  VerificationReport r{complex_to_form(complex, k), predict_generators(complex, k), {}, {}, 0, {}, 0, {}, {}, 0};
  const GorensteinAlgebra algebra(r.form.f);
  r.computed = algebra.hilbert();

  for (const auto& e : r.prediction.bigraded) {
    ++r.dimension_checks;
    const std::size_t c = algebra.dim(Bidegree{e.i, e.j});
    if (c != e.dim) r.dimension_mismatches.push_back({e.i, e.j, e.dim, c});
  }

  const auto all = r.prediction.all();
  for (const auto& g : all) {
    ++r.generator_checks;
    if (!is_annihilated(r.form.f, g)) r.non_annihilating.push_back(to_string(g));
  }

  const int d = algebra.socle_degree();
  r.ideal_mismatches = compare_ideal(algebra, all, d, &r.ideal_checks);
  r.stated_ideal_mismatches = compare_ideal(algebra, r.prediction.stated(), d, nullptr);
  return r;
}

}  // namespace apolar
