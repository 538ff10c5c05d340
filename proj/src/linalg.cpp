#include "apolar/linalg.hpp"

#include <algorithm>

namespace apolar::linalg {

Rational entry(const SparseVector& v, std::size_t index) {
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const auto& e, std::size_t i) { return e.first < i; });
  return it != v.end() && it->first == index ? it->second : Rational(0);
}

void add_scaled(SparseVector& a, const Rational& scale, const SparseVector& b) {
  if (scale == 0 || b.empty()) return;
  SparseVector out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(std::move(*ia++));
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, scale * ib->second);
      ++ib;
    } else {
      Rational v = ia->second + scale * ib->second;
      if (v != 0) out.emplace_back(ia->first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  a = std::move(out);
}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, const std::vector<SparseVector>& columns) {
  SparseMatrix m;
  m.rows = rows;
  m.cols = columns.size();
  m.row_data.resize(rows);
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [r, v] : columns[c]) m.row_data[r].emplace_back(c, v);
  return m;
}

namespace {

void normalize(SparseVector& v) {
  const Rational lead = v.front().second;
  if (lead == 1) return;
  for (auto& e : v) e.second /= lead;
}

}  // namespace

Echelon reduced_row_echelon(const SparseMatrix& m) {
  std::map<std::size_t, SparseVector> by_pivot;
  for (const auto& input : m.row_data) {
    SparseVector row = input;
    while (!row.empty()) {
      auto it = by_pivot.find(row.front().first);
      if (it == by_pivot.end()) break;
      Rational factor = -row.front().second;
      add_scaled(row, factor, it->second);
    }
    if (row.empty()) continue;
    normalize(row);
    const std::size_t p = row.front().first;
    by_pivot.emplace(p, std::move(row));
  }

  // Back substitution, largest pivot first.
  Echelon e;
  e.cols = m.cols;
  for (auto it = by_pivot.rbegin(); it != by_pivot.rend(); ++it) {
    const std::size_t p = it->first;
    const SparseVector& prow = it->second;
    for (auto jt = by_pivot.begin(); jt->first < p; ++jt) {
      Rational c = entry(jt->second, p);
      if (c != 0) add_scaled(jt->second, -c, prow);
    }
  }
  for (auto& [p, row] : by_pivot) {
    e.pivots.push_back(p);
    e.rows.push_back(std::move(row));
  }
  return e;
}

std::vector<SparseVector> kernel_basis(const Echelon& e) {
  std::vector<char> is_pivot(e.cols, 0);
  for (std::size_t p : e.pivots) is_pivot[p] = 1;
  std::vector<SparseVector> by_free(e.cols);
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    for (const auto& [c, v] : e.rows[r]) {
      if (is_pivot[c]) continue;
      by_free[c].emplace_back(e.pivots[r], -v);
    }
  }
  std::vector<SparseVector> basis;
  for (std::size_t c = 0; c < e.cols; ++c) {
    if (is_pivot[c]) continue;
    SparseVector v = std::move(by_free[c]);
    v.emplace_back(c, 1);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    basis.push_back(std::move(v));
  }
  return basis;
}

SparseVector SpanBuilder::reduce(SparseVector v) const {
  std::size_t cursor = 0;
  while (cursor < v.size()) {
    auto it = rows_.find(v[cursor].first);
    if (it == rows_.end()) {
      ++cursor;
      continue;
    }
    const std::size_t lead = v[cursor].first;
    Rational factor = -v[cursor].second;
    add_scaled(v, factor, it->second);
    cursor = static_cast<std::size_t>(
        std::lower_bound(v.begin(), v.end(), lead,
                         [](const auto& e, std::size_t i) { return e.first < i; }) -
        v.begin());
  }
  return v;
}

bool SpanBuilder::insert(SparseVector v) {
  // Only the leading entry needs clearing for an echelon basis.
  while (!v.empty()) {
    auto it = rows_.find(v.front().first);
    if (it == rows_.end()) break;
    Rational factor = -v.front().second;
    add_scaled(v, factor, it->second);
  }
  if (v.empty()) return false;
  normalize(v);
  const std::size_t lead = v.front().first;
  rows_.emplace(lead, std::move(v));
  return true;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::size_t Matrix::rank() const { return reduced_row_echelon(sparse()).rank(); }

Rational Matrix::determinant() const {
  if (rows_ != cols_) throw ContractError("determinant of a non-square matrix");
  Matrix a(*this);
  const std::size_t n = rows_;
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a(pivot, c) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(pivot, k), a(c, k));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      Rational f = a(r, c) / a(c, c);
      for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return det;
}

SparseMatrix Matrix::sparse() const {
  SparseMatrix m;
  m.rows = rows_;
  m.cols = cols_;
  m.row_data.resize(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0) m.row_data[r].emplace_back(c, (*this)(r, c));
  return m;
}

}  // namespace apolar::linalg
