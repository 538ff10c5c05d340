#include "apolar/kernels.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace apolar::kernels {

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<Polynomial> apply_each(std::span<const Monomial> ops, const Polynomial& f, Exec exec) {
  std::vector<Polynomial> out(ops.size(), Polynomial(f.split()));
  const auto n = static_cast<std::ptrdiff_t>(ops.size());
  if (exec == Exec::serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = apply(ops[i], f);
    return out;
  }
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = apply(ops[i], f);
  return out;
}

std::vector<Polynomial> hessian_entries(std::span<const Monomial> basis, const Polynomial& f,
                                        Exec exec) {
  const std::size_t n = basis.size();
  std::vector<Polynomial> out(n * n, Polynomial(f.split()));
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] = apply(basis[i] * basis[j], f);
    return out;
  }
  // Upper triangle only, mirrored afterwards.
  const auto count = static_cast<std::ptrdiff_t>(n * (n + 1) / 2);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t t = 0; t < count; ++t) {
    std::size_t i = 0;
    std::size_t rem = static_cast<std::size_t>(t);
    while (rem >= n - i) {
      rem -= n - i;
      ++i;
    }
    const std::size_t j = i + rem;
    out[i * n + j] = apply(basis[i] * basis[j], f);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) out[i * n + j] = out[j * n + i];
  return out;
}

std::vector<Rational> evaluate_each(std::span<const Polynomial> polys,
                                    std::span<const Rational> point, Exec exec) {
  std::vector<Rational> out(polys.size());
  const auto n = static_cast<std::ptrdiff_t>(polys.size());
  if (exec == Exec::serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = polys[i].evaluate(point);
    return out;
  }
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = polys[i].evaluate(point);
  return out;
}

namespace {

Polynomial leibniz_determinant(std::span<const Polynomial> entries, std::size_t n) {
  const VariableSplit split = entries.front().split();
  Polynomial det(split);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    Polynomial term(split, inversions % 2 == 0 ? 1 : -1);
    for (std::size_t r = 0; r < n && !term.is_zero(); ++r) term = term * entries[r * n + perm[r]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

Polynomial subset_minor_determinant(std::span<const Polynomial> entries, std::size_t n) {
  const VariableSplit split = entries.front().split();
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<std::optional<Polynomial>> minors(full + 1);
  minors[0] = Polynomial(split, 1);

  std::vector<std::vector<std::size_t>> levels(n + 1);
  for (std::size_t mask = 1; mask <= full; ++mask)
    levels[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);

  for (std::size_t t = 1; t <= n; ++t) {
    const auto& masks = levels[t];
    const auto count = static_cast<std::ptrdiff_t>(masks.size());
    // Rows 0..t-1 against the column set `mask`, expanded along row t-1.
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t idx = 0; idx < count; ++idx) {
      const std::size_t mask = masks[static_cast<std::size_t>(idx)];
      Polynomial acc(split);
      std::size_t pos = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (!(mask >> c & 1)) continue;
        const Polynomial& a = entries[(t - 1) * n + c];
        const Polynomial& sub = *minors[mask & ~(std::size_t{1} << c)];
        if (!a.is_zero() && !sub.is_zero()) {
          Polynomial term = a * sub;
          if ((t - 1 + pos) % 2 == 1) term *= -1;
          acc += term;
        }
        ++pos;
      }
      minors[mask] = std::move(acc);
    }
    if (t >= 2)
      for (std::size_t mask : levels[t - 2]) minors[mask].reset();
  }
  return *minors[full];
}

}  // namespace

Polynomial symbolic_determinant(std::span<const Polynomial> entries, std::size_t n, Exec exec) {
  if (entries.size() != n * n) throw ContractError("determinant needs an n x n matrix");
  if (n == 0) throw ContractError("determinant of an empty matrix");
  if (n > kMaxSymbolicOrder) throw ContractError("matrix too large for symbolic determinant");
  if (exec == Exec::serial) return leibniz_determinant(entries, n);
  return subset_minor_determinant(entries, n);
}

}  // namespace apolar::kernels
