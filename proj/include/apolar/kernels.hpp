#pragma once

// Data-parallel inner loops of the library. Every kernel has a serial
// reference (Exec::serial) that the tests compare against the OpenMP path
// (Exec::parallel). Without OpenMP both paths run on one thread.

#include <cstddef>
#include <span>
#include <vector>

#include "apolar/ring.hpp"

namespace apolar::kernels {

enum class Exec { serial, parallel };

/// op(f) for every monomial operator op.
std::vector<Polynomial> apply_each(std::span<const Monomial> ops, const Polynomial& f,
                                   Exec exec = Exec::parallel);

/// Row-major n x n matrix with entry (i, j) = (basis[i] * basis[j])(f).
std::vector<Polynomial> hessian_entries(std::span<const Monomial> basis, const Polynomial& f,
                                        Exec exec = Exec::parallel);

std::vector<Rational> evaluate_each(std::span<const Polynomial> polys,
                                    std::span<const Rational> point, Exec exec = Exec::parallel);

/// Determinant of a row-major n x n polynomial matrix. The parallel path
/// expands minors over column subsets level by level; the serial reference
/// is the Leibniz permutation sum, usable only for small n.
Polynomial symbolic_determinant(std::span<const Polynomial> entries, std::size_t n,
                                Exec exec = Exec::parallel);

/// Largest n accepted by symbolic_determinant.
inline constexpr std::size_t kMaxSymbolicOrder = 20;

int thread_count();

}  // namespace apolar::kernels
