#pragma once

// Test-only oracles (dense, brute force, written without the library's
// differentiation or elimination code) and seeded random generators.

#include <map>
#include <numeric>
#include <vector>

#include "apolar/random.hpp"
#include "apolar/ring.hpp"

namespace oracle {

using apolar::Rational;
using Exps = std::vector<int>;
using Dense = std::map<Exps, Rational>;

inline Dense dense(const apolar::Polynomial& f) {
  Dense out;
  for (const auto& [m, c] : f.terms()) out[Exps(m.exponents().begin(), m.exponents().end())] = c;
  return out;
}

/// One variable at a time, exponent by exponent.
inline Dense differentiate(const Dense& f, const Exps& op) {
  Dense cur = f;
  for (std::size_t v = 0; v < op.size(); ++v) {
    for (int t = 0; t < op[v]; ++t) {
      Dense next;
      for (const auto& [e, c] : cur) {
        if (e[v] == 0) continue;
        Exps f2 = e;
        f2[v] -= 1;
        next[f2] += c * e[v];
      }
      std::erase_if(next, [](const auto& p) { return p.second == 0; });
      cur = std::move(next);
    }
  }
  return cur;
}

/// All exponent vectors of total degree d in n variables, by recursion.
inline std::vector<Exps> all_monomials(int n, int d) {
  std::vector<Exps> out;
  Exps e(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int v, int left) -> void {
    if (v == n - 1) {
      e[static_cast<std::size_t>(v)] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[static_cast<std::size_t>(v)] = k;
      self(self, v + 1, left - k);
    }
  };
  if (n == 0) {
    if (d == 0) out.push_back(e);
    return out;
  }
  rec(rec, 0, d);
  return out;
}

inline std::vector<Exps> bigraded_monomials(int nx, int nu, int i, int j) {
  std::vector<Exps> out;
  for (const auto& a : all_monomials(nx, i))
    for (const auto& b : all_monomials(nu, j)) {
      Exps e = a;
      e.insert(e.end(), b.begin(), b.end());
      out.push_back(e);
    }
  return out;
}

/// Dense Gaussian elimination; rows are modified in place.
inline std::size_t rank(std::vector<std::vector<Rational>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (q == r || rows[q][c] == 0) continue;
      const Rational f = rows[q][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[q][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

/// Rank of the span of a list of dense polynomials.
inline std::size_t span_rank(const std::vector<Dense>& polys) {
  std::map<Exps, std::size_t> index;
  for (const auto& p : polys)
    for (const auto& [e, c] : p) index.try_emplace(e, index.size());
  std::vector<std::vector<Rational>> rows;
  for (const auto& p : polys) {
    std::vector<Rational> row(index.size());
    for (const auto& [e, c] : p) row[index.at(e)] = c;
    rows.push_back(std::move(row));
  }
  return rank(std::move(rows));
}

/// dim of the image of Q_ops -> R, alpha -> alpha(f): the catalecticant rank.
inline std::size_t catalecticant_rank(const Dense& f, const std::vector<Exps>& ops) {
  std::vector<Dense> images;
  for (const auto& op : ops) images.push_back(differentiate(f, op));
  return span_rank(images);
}

/// Dense determinant by cofactor-free elimination.
inline Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

}  // namespace oracle

namespace gen {

using apolar::Monomial;
using apolar::Polynomial;
using apolar::Rng;
using apolar::VariableSplit;

inline Monomial random_monomial(Rng& rng, const VariableSplit& s, int dx, int du) {
  std::vector<int> e(static_cast<std::size_t>(s.size()), 0);
  for (int t = 0; t < dx; ++t) ++e[static_cast<std::size_t>(rng.uniform(0, s.x_count() - 1))];
  for (int t = 0; t < du; ++t) ++e[static_cast<std::size_t>(s.x_count() + rng.uniform(0, s.u_count() - 1))];
  return Monomial(std::move(e));
}

/// Nonzero bihomogeneous form of bidegree (dx, du) with up to `terms` terms.
inline Polynomial bihomogeneous(Rng& rng, const VariableSplit& s, int dx, int du, int terms) {
  Polynomial f(s);
  while (f.is_zero())
    for (int t = 0; t < terms; ++t) {
      long c = 0;
      while (c == 0) c = rng.uniform(-3, 3);
      f.add_term(random_monomial(rng, s, dx, du), c);
    }
  return f;
}

/// Nonzero homogeneous form of degree d in an all-x split of n variables.
inline Polynomial homogeneous(Rng& rng, int n, int d, int terms) {
  return bihomogeneous(rng, VariableSplit(n, 0), d, 0, terms);
}

}  // namespace gen
