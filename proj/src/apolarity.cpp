#include "apolar/apolarity.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace apolar {

namespace {

Polynomial reembed(const Polynomial& f, VariableSplit split) {
  Polynomial r(split);
  for (const auto& [m, c] : f.terms()) r.add_term(m, c);
  return r;
}

std::size_t count_monomials(int nvars, int degree) {
  if (degree < 0) return 0;
  if (degree == 0) return 1;
  if (nvars == 0) return 0;
  return binomial(degree + nvars - 1, degree).get_ui();
}

std::size_t piece_size(const VariableSplit& split, Bidegree b) {
  return count_monomials(split.x_count(), b.x) * count_monomials(split.u_count(), b.u);
}

struct CatalecticantBuild {
  CatalecticantMap map;
  std::vector<Polynomial> columns;
};

CatalecticantBuild build_catalecticant(const Polynomial& f, std::vector<Monomial> source,
                                       kernels::Exec exec) {
  CatalecticantBuild out;
  out.columns = kernels::apply_each(source, f, exec);

  std::vector<Monomial> targets;
  for (const auto& col : out.columns)
    for (const auto& [m, c] : col.terms()) targets.push_back(m);
  std::sort(targets.begin(), targets.end(), precedes);
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  std::unordered_map<Monomial, std::size_t, MonomialHash> row_of;
  for (std::size_t r = 0; r < targets.size(); ++r) row_of.emplace(targets[r], r);

  std::vector<linalg::SparseVector> cols(out.columns.size());
  for (std::size_t c = 0; c < out.columns.size(); ++c) {
    for (const auto& [m, v] : out.columns[c].terms()) cols[c].emplace_back(row_of.at(m), v);
    std::sort(cols[c].begin(), cols[c].end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  out.map.matrix = linalg::SparseMatrix::from_columns(targets.size(), cols);
  out.map.source_basis = std::move(source);
  out.map.target_basis = std::move(targets);
  return out;
}

Polynomial to_polynomial(const VariableSplit& split, std::span<const Monomial> basis,
                         const linalg::SparseVector& v) {
  Polynomial p(split);
  for (const auto& [i, c] : v) p.add_term(basis[i], c);
  return p;
}

// Scale so that the leading term (first in monomial order) has coefficient 1.
Polynomial monic(Polynomial p) {
  if (p.is_zero()) return p;
  Rational lead = p.terms().begin()->second;
  p *= Rational(1) / lead;
  return p;
}

}  // namespace

std::size_t CatalecticantMap::rank() const { return linalg::reduced_row_echelon(matrix).rank(); }

CatalecticantMap catalecticant(const Polynomial& f, Bidegree piece) {
  const auto b = bidegree(f);
  if (!b) throw ContractError("bigraded catalecticant needs a bihomogeneous form");
  if (piece.x < 0 || piece.u < 0 || piece.x > b->x || piece.u > b->u)
    throw ContractError("catalecticant bidegree outside the socle box");
  return build_catalecticant(f, monomial_basis(f.split(), piece), kernels::Exec::parallel).map;
}

CatalecticantMap catalecticant(const Polynomial& f, int k) {
  const auto d = f.degree();
  if (!d) throw ContractError("catalecticant needs a nonzero homogeneous form");
  if (k < 0 || k > *d) throw ContractError("catalecticant degree outside [0, d]");
  return build_catalecticant(f, monomial_basis(static_cast<std::size_t>(f.split().size()), k),
                             kernels::Exec::parallel)
      .map;
}

// ---------------------------------------------------------------------------

std::vector<DiffOperator> GradedIdeal::minimal_generators() const {
  std::vector<DiffOperator> out;
  for (const auto& p : pieces_)
    for (const auto& g : p.generators) out.push_back(g);
  return out;
}

std::size_t GradedIdeal::dimension(int degree) const {
  std::size_t total = 0;
  for (const auto& p : pieces_)
    if (p.degree.total() == degree) total += p.dim;
  return total;
}

DiffOperator GradedIdeal::kernel_element(const IdealPiece& piece, std::size_t index) const {
  return DiffOperator(to_polynomial(split_, piece.source_basis, piece.kernel.at(index)));
}

// ---------------------------------------------------------------------------

namespace {

struct PieceData {
  std::vector<Monomial> source;
  linalg::Echelon echelon;
  std::vector<Polynomial> columns;
};

}  // namespace

struct GorensteinAlgebra::Impl {
  Polynomial original;
  VariableSplit work;
  Polynomial f;
  bool bigraded = false;
  Bidegree socle;
  kernels::Exec exec;
  std::map<Bidegree, PieceData> pieces;

  Impl(const Polynomial& input, kernels::Exec ex)
      : original(input), work(input.split()), f(input.split()), exec(ex) {
    if (input.is_zero())
      throw ContractError("annihilator is the irrelevant ideal; not an AG algebra presentation");
    const auto d = input.degree();
    if (!d) throw ContractError("dual generator must be homogeneous");
    if (const auto b = bidegree(input)) {
      bigraded = true;
      socle = *b;
      f = input;
    } else {
      work = VariableSplit(input.split().size(), 0);
      f = reembed(input, work);
      socle = Bidegree{*d, 0};
    }
    for (int i = 0; i <= socle.x; ++i) {
      for (int j = 0; j <= socle.u; ++j) {
        const Bidegree b{i, j};
        auto built = build_catalecticant(f, monomial_basis(work, b), exec);
        PieceData pd;
        pd.echelon = linalg::reduced_row_echelon(built.map.matrix);
        pd.source = std::move(built.map.source_basis);
        pd.columns = std::move(built.columns);
        pieces.emplace(b, std::move(pd));
      }
    }
  }

  bool in_box(Bidegree b) const {
    return b.x >= 0 && b.u >= 0 && b.x <= socle.x && b.u <= socle.u;
  }

  std::size_t rank(Bidegree b) const { return in_box(b) ? pieces.at(b).echelon.rank() : 0; }

  std::vector<Bidegree> pieces_of_degree(int k) const {
    std::vector<Bidegree> out;
    for (int i = k; i >= 0; --i) {
      const Bidegree b{i, k - i};
      if (bigraded || b.u == 0) out.push_back(b);
    }
    return out;
  }

  // (pivot monomial, pivot image) pairs of one piece.
  std::vector<std::pair<Monomial, Polynomial>> pivot_images(Bidegree b) const {
    std::vector<std::pair<Monomial, Polynomial>> out;
    if (!in_box(b)) return out;
    const auto& pd = pieces.at(b);
    for (std::size_t p : pd.echelon.pivots) out.emplace_back(pd.source[p], pd.columns[p]);
    return out;
  }

  // Basis of the inverse system in bidegree b (images of the complementary
  // coset basis).
  std::vector<Polynomial> inverse_piece(Bidegree b) const {
    std::vector<Polynomial> out;
    for (auto& [m, img] : pivot_images(Bidegree{socle.x - b.x, socle.u - b.u}))
      out.push_back(std::move(img));
    return out;
  }

  std::vector<Polynomial> lift_space(Bidegree piece) const;
  IdealPiece ideal_piece(Bidegree piece) const;
};

// {g in R_piece : every first partial of g lies in the inverse system}. By
// the Euler identity such g is (1/deg) sum_v x_v w_v for a compatible family
// w_v with d/dx_u w_v = d/dx_v w_u; we solve for the family.
std::vector<Polynomial> GorensteinAlgebra::Impl::lift_space(Bidegree piece) const {
  const int nvars = work.size();
  struct Unknown {
    int var;
    Polynomial w;
  };
  std::vector<Unknown> unknowns;
  for (int v = 0; v < nvars; ++v) {
    const Bidegree shifted = work.is_x(v) ? Bidegree{piece.x - 1, piece.u}
                                          : Bidegree{piece.x, piece.u - 1};
    if (!in_box(shifted)) continue;
    for (auto& w : inverse_piece(shifted)) unknowns.push_back({v, std::move(w)});
  }
  if (unknowns.empty()) return {};

  std::map<std::pair<int, int>, std::unordered_map<Monomial, std::size_t, MonomialHash>> rows;
  std::size_t row_count = 0;
  std::vector<linalg::SparseVector> cols(unknowns.size());
  for (std::size_t c = 0; c < unknowns.size(); ++c) {
    const int v = unknowns[c].var;
    for (int other = 0; other < nvars; ++other) {
      if (other == v) continue;
      Polynomial dw = unknowns[c].w.derivative(other);
      if (dw.is_zero()) continue;
      auto& block = rows[{std::min(v, other), std::max(v, other)}];
      const int sign = v < other ? 1 : -1;
      for (const auto& [m, coeff] : dw.terms()) {
        auto [it, inserted] = block.try_emplace(m, row_count);
        if (inserted) ++row_count;
        cols[c].emplace_back(it->second, coeff * sign);
      }
    }
    std::sort(cols[c].begin(), cols[c].end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  const auto echelon = linalg::reduced_row_echelon(linalg::SparseMatrix::from_columns(row_count, cols));
  const Rational inv_degree = Rational(1, static_cast<unsigned long>(piece.total()));

  std::vector<Polynomial> out;
  for (const auto& kv : linalg::kernel_basis(echelon)) {
    Polynomial g(work);
    for (const auto& [idx, coeff] : kv) {
      const auto& u = unknowns[idx];
      const Monomial var = Monomial::variable(static_cast<std::size_t>(nvars), u.var);
      for (const auto& [m, c] : u.w.terms()) g.add_term(m * var, c * coeff * inv_degree);
    }
    out.push_back(std::move(g));
  }
  return out;
}

IdealPiece GorensteinAlgebra::Impl::ideal_piece(Bidegree piece) const {
  IdealPiece out;
  out.degree = piece;
  const bool saturated = !in_box(piece);
  std::size_t quotient_dim = 0;
  if (saturated) {
    out.full = true;
    out.ambient_dim = piece_size(work, piece);
    out.dim = out.ambient_dim;
  } else {
    const auto& pd = pieces.at(piece);
    out.source_basis = pd.source;
    out.kernel = linalg::kernel_basis(pd.echelon);
    out.ambient_dim = pd.source.size();
    out.dim = out.kernel.size();
    quotient_dim = pd.echelon.rank();
  }

  // Generators in this piece span a complement of Q_1 * I_{prev}; that
  // subspace is the annihilator of lift_space under the apolarity pairing.
  const auto lifts = lift_space(piece);
  if (lifts.size() < quotient_dim) throw std::logic_error("inverse system lift lost dimensions");
  const std::size_t wanted = lifts.size() - quotient_dim;
  if (wanted == 0) return out;

  std::unordered_map<Monomial, std::vector<std::pair<std::size_t, Rational>>, MonomialHash> dual;
  for (std::size_t t = 0; t < lifts.size(); ++t) {
    for (const auto& [m, c] : lifts[t].terms()) {
      mpz_class w = 1;
      for (std::size_t v = 0; v < m.size(); ++v)
        for (int e = 2; e <= m[v]; ++e) w *= e;
      dual[m].emplace_back(t, c * Rational(w));
    }
  }
  auto pairing_vector = [&](const Polynomial& alpha) {
    std::map<std::size_t, Rational> acc;
    for (const auto& [m, c] : alpha.terms()) {
      auto it = dual.find(m);
      if (it == dual.end()) continue;
      for (const auto& [t, w] : it->second) acc[t] += c * w;
    }
    linalg::SparseVector v;
    for (auto& [t, x] : acc)
      if (x != 0) v.emplace_back(t, x);
    return v;
  };

  linalg::SpanBuilder span;
  auto consider = [&](Polynomial alpha) {
    if (!span.insert(pairing_vector(alpha))) return;
    out.generators.emplace_back(reembed(monic(std::move(alpha)), original.split()));
  };

  if (saturated) {
    for (const auto& m : monomial_basis(work, piece)) {
      consider(Polynomial::monomial(work, m));
      if (out.generators.size() == wanted) break;
    }
  } else {
    std::vector<std::size_t> order(out.kernel.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const auto& ka = out.kernel[a];
      const auto& kb = out.kernel[b];
      if (ka.size() != kb.size()) return ka.size() < kb.size();
      return ka.front().first < kb.front().first;
    });
    for (std::size_t idx : order) {
      consider(to_polynomial(work, out.source_basis, out.kernel[idx]));
      if (out.generators.size() == wanted) break;
    }
  }
  if (out.generators.size() != wanted)
    throw std::logic_error("minimal generator extraction fell short");
  return out;
}

GorensteinAlgebra::GorensteinAlgebra(const Polynomial& f, kernels::Exec exec)
    : impl_(std::make_unique<Impl>(f, exec)) {}
GorensteinAlgebra::~GorensteinAlgebra() = default;
GorensteinAlgebra::GorensteinAlgebra(GorensteinAlgebra&&) noexcept = default;
GorensteinAlgebra& GorensteinAlgebra::operator=(GorensteinAlgebra&&) noexcept = default;

const Polynomial& GorensteinAlgebra::dual_generator() const { return impl_->original; }
const VariableSplit& GorensteinAlgebra::split() const { return impl_->original.split(); }
int GorensteinAlgebra::socle_degree() const { return impl_->socle.total(); }
bool GorensteinAlgebra::bigraded() const { return impl_->bigraded; }

std::size_t GorensteinAlgebra::dim(int k) const {
  std::size_t total = 0;
  for (const auto& b : impl_->pieces_of_degree(k)) total += impl_->rank(b);
  return total;
}

std::size_t GorensteinAlgebra::dim(Bidegree piece) const {
  if (!impl_->bigraded) throw ContractError("bigraded dimension of a non-bihomogeneous form");
  return impl_->rank(piece);
}

std::vector<Monomial> GorensteinAlgebra::coset_basis(int k) const {
  std::vector<Monomial> out;
  for (const auto& b : impl_->pieces_of_degree(k))
    for (auto& [m, img] : impl_->pivot_images(b)) out.push_back(m);
  std::sort(out.begin(), out.end(), precedes);
  return out;
}

std::vector<Polynomial> GorensteinAlgebra::inverse_system(int k) const {
  const int d = socle_degree();
  std::vector<std::pair<Monomial, Polynomial>> all;
  for (const auto& b : impl_->pieces_of_degree(d - k))
    for (auto& pr : impl_->pivot_images(b)) all.push_back(std::move(pr));
  std::sort(all.begin(), all.end(),
            [](const auto& a, const auto& b) { return precedes(a.first, b.first); });
  std::vector<Polynomial> out;
  for (auto& [m, img] : all) out.push_back(reembed(img, split()));
  return out;
}

std::vector<std::vector<Rational>> GorensteinAlgebra::inverse_system_coordinates(
    int k, std::span<const Polynomial> gs) const {
  const auto basis = inverse_system(k);
  std::vector<Monomial> monos;
  for (const auto& b : basis)
    for (const auto& [m, c] : b.terms()) monos.push_back(m);
  for (const auto& g : gs)
    for (const auto& [m, c] : g.terms()) monos.push_back(m);
  std::sort(monos.begin(), monos.end(), precedes);
  monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
  std::unordered_map<Monomial, std::size_t, MonomialHash> row_of;
  for (std::size_t r = 0; r < monos.size(); ++r) row_of.emplace(monos[r], r);

  // Augmented system [basis | g_1 ... g_s]; the basis columns are independent.
  const std::size_t nb = basis.size();
  std::vector<linalg::SparseVector> cols(nb + gs.size());
  auto fill = [&](std::size_t c, const Polynomial& p) {
    if (!(p.split() == split())) throw StructuralError("polynomial over a different split");
    for (const auto& [m, v] : p.terms()) cols[c].emplace_back(row_of.at(m), v);
    std::sort(cols[c].begin(), cols[c].end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  };
  for (std::size_t c = 0; c < nb; ++c) fill(c, basis[c]);
  for (std::size_t c = 0; c < gs.size(); ++c) fill(nb + c, gs[c]);
  const auto e = linalg::reduced_row_echelon(linalg::SparseMatrix::from_columns(monos.size(), cols));
  std::vector<std::vector<Rational>> coords(gs.size(), std::vector<Rational>(nb));
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    if (e.pivots[r] >= nb) throw ContractError("polynomial is not in the inverse system");
    for (const auto& [c, v] : e.rows[r])
      if (c >= nb) coords[c - nb][e.pivots[r]] = v;
  }
  return coords;
}

HilbertData GorensteinAlgebra::hilbert() const {
  HilbertData out;
  out.socle_degree = socle_degree();
  for (int k = 0; k <= out.socle_degree; ++k) out.h.push_back(dim(k));
  if (impl_->bigraded) {
    std::vector<BigradedDimension> table;
    for (const auto& [b, pd] : impl_->pieces) table.push_back({b.x, b.u, pd.echelon.rank()});
    out.bigraded = std::move(table);
  }
  return out;
}

GradedIdeal GorensteinAlgebra::annihilator() const {
  std::vector<IdealPiece> pieces;
  const int d = socle_degree();
  for (int k = 1; k <= d + 1; ++k)
    for (const auto& b : impl_->pieces_of_degree(k)) pieces.push_back(impl_->ideal_piece(b));
  return GradedIdeal(split(), d, impl_->bigraded, std::move(pieces));
}

GradedIdeal annihilator(const Polynomial& f) { return GorensteinAlgebra(f).annihilator(); }

HilbertData hilbert(const Polynomial& f) { return GorensteinAlgebra(f).hilbert(); }

std::vector<Monomial> coset_basis(const Polynomial& f, int k) {
  GorensteinAlgebra a(f);
  if (k < 0 || k > a.socle_degree()) throw ContractError("coset basis degree outside [0, d]");
  return a.coset_basis(k);
}

bool is_annihilated(const Polynomial& f, const DiffOperator& op) { return apply(op, f).is_zero(); }

// ---------------------------------------------------------------------------

GeneratedIdeal::GeneratedIdeal(VariableSplit split, std::vector<DiffOperator> generators,
                               bool bigraded)
    : split_(split), bigraded_(bigraded) {
  for (const auto& g : generators) {
    if (!(g.split() == split)) throw StructuralError("generator over a different variable split");
    if (g.is_zero()) continue;
    const auto& p = g.polynomial();
    Bidegree degree;
    if (bigraded) {
      const auto b = apolar::bidegree(p);
      if (!b) throw ContractError("generator is not bihomogeneous");
      degree = *b;
    } else {
      const auto d = p.degree();
      if (!d) throw ContractError("generator is not homogeneous");
      degree = Bidegree{*d, 0};
    }
    if (p.term_count() == 1)
      monomial_generators_.push_back(p.terms().begin()->first);
    else
      other_generators_.emplace_back(degree, p);
  }
}

std::size_t GeneratedIdeal::quotient_dimension(Bidegree piece) const {
  if (!bigraded_) throw ContractError("bidegree query on a singly graded ideal");
  return quotient_dimension_impl(piece, split_);
}

std::size_t GeneratedIdeal::quotient_dimension(int degree) const {
  if (bigraded_) {
    std::size_t total = 0;
    for (int i = 0; i <= degree; ++i) total += quotient_dimension_impl({i, degree - i}, split_);
    return total;
  }
  return quotient_dimension_impl({degree, 0}, VariableSplit(split_.size(), 0));
}

namespace {

// Monomials of one bidegree not divisible by any of `walls`, by depth-first
// assignment of exponents with pruning at each variable.
class StandardMonomials {
 public:
  StandardMonomials(const VariableSplit& split, std::span<const Monomial> walls) : split_(split) {
    by_last_.resize(static_cast<std::size_t>(split.size()));
    for (const auto& w : walls) {
      int last = -1;
      for (std::size_t v = 0; v < w.size(); ++v)
        if (w[v] > 0) last = static_cast<int>(v);
      if (last < 0) {
        has_unit_ = true;
        continue;
      }
      by_last_[static_cast<std::size_t>(last)].push_back(w);
    }
  }

  std::vector<Monomial> of(Bidegree b) const {
    std::vector<Monomial> out;
    if (b.x < 0 || b.u < 0 || has_unit_) return out;
    Monomial current(static_cast<std::size_t>(split_.size()));
    walk(0, b.x, b.u, current, out);
    return out;
  }

 private:
  void walk(int var, int x_left, int u_left, Monomial& current, std::vector<Monomial>& out) const {
    if (var == split_.size()) {
      if (x_left == 0 && u_left == 0) out.push_back(current);
      return;
    }
    const bool is_x = split_.is_x(var);
    const bool last_of_block = is_x ? var == split_.x_count() - 1 : var == split_.size() - 1;
    const int left = is_x ? x_left : u_left;
    const int lo = last_of_block ? left : 0;
    for (int e = left; e >= lo; --e) {
      current.set(static_cast<std::size_t>(var), e);
      bool blocked = false;
      for (const auto& w : by_last_[static_cast<std::size_t>(var)]) {
        if (w.divides(current)) {
          blocked = true;
          break;
        }
      }
      if (!blocked) walk(var + 1, is_x ? x_left - e : x_left, is_x ? u_left : u_left - e, current, out);
    }
    current.set(static_cast<std::size_t>(var), 0);
  }

  VariableSplit split_;
  std::vector<std::vector<Monomial>> by_last_;
  bool has_unit_ = false;
};

}  // namespace

std::size_t GeneratedIdeal::quotient_dimension_impl(Bidegree piece, const VariableSplit& work) const {
  const StandardMonomials standard(work, monomial_generators_);
  const auto std_here = standard.of(piece);
  if (std_here.empty()) return 0;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t i = 0; i < std_here.size(); ++i) index.emplace(std_here[i], i);

  linalg::SpanBuilder span;
  for (const auto& [degree, g] : other_generators_) {
    const Bidegree rest{piece.x - degree.x, piece.u - degree.u};
    if (rest.x < 0 || rest.u < 0) continue;
    for (const auto& mu : standard.of(rest)) {
      linalg::SparseVector v;
      for (const auto& [m, c] : g.terms()) {
        auto it = index.find(mu * m);
        if (it != index.end()) v.emplace_back(it->second, c);
      }
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      span.insert(std::move(v));
      if (span.rank() == std_here.size()) return 0;
    }
  }
  return std_here.size() - span.rank();
}

}  // namespace apolar
