#pragma once

// Higher Hessians, the Hessian criterion for the strong Lefschetz property
// and rank checks of multiplication maps for the weak one.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apolar/apolarity.hpp"
#include "apolar/linalg.hpp"
#include "apolar/ring.hpp"

namespace apolar {

/// (alpha_i alpha_j (f)) over the coset basis of A_k.
struct HessianMatrix {
  int order = 0;
  std::vector<Monomial> basis;
  /// Row-major, size() x size(); every entry is a form of degree d - 2k.
  std::vector<Polynomial> entries;

  std::size_t size() const { return basis.size(); }
  const Polynomial& operator()(std::size_t i, std::size_t j) const {
    return entries[i * basis.size() + j];
  }
};

HessianMatrix hessian_matrix(const GorensteinAlgebra& algebra, int k);
HessianMatrix hessian_matrix(const Polynomial& f, int k);

/// Scalar determinant of the Hessian at a point (one coordinate per variable).
Rational hessian_at(const HessianMatrix& h, std::span<const Rational> point);

enum class Certainty { certain, probabilistic };

struct ZeroTestOptions {
  std::size_t symbolic_threshold = 8;
  int rounds = 12;
  std::uint64_t seed = 0;
};

struct ZeroTest {
  bool vanishes = false;
  Certainty certainty = Certainty::certain;
  /// Symbolic expansion was used (sigma_k <= threshold).
  bool symbolic = false;
  std::size_t sigma = 0;
  /// Evaluation rounds spent.
  int rounds = 0;
  std::uint64_t seed = 0;
  /// A point with nonzero determinant, when one was found.
  std::optional<std::vector<Rational>> point;
  std::optional<Rational> value;
};

/// Integer points in [-B, B] with B = 2, 4, ..., one per round.
ZeroTest hessian_vanishes(const HessianMatrix& h, const ZeroTestOptions& options = {});
ZeroTest hessian_vanishes(const Polynomial& f, int k, const ZeroTestOptions& options = {});

/// Multiplication by L^p from A_i to A_{i+p} in the coset bases.
struct MultiplicationMap {
  DiffOperator L;
  int power = 0;
  int source_degree = 0;
  std::vector<Monomial> source_basis;
  std::vector<Monomial> target_basis;
  /// target_basis.size() x source_basis.size().
  linalg::Matrix matrix;

  std::size_t rank() const { return matrix.rank(); }
  bool maximal_rank() const {
    return rank() == std::min(source_basis.size(), target_basis.size());
  }
};

MultiplicationMap multiplication_map(const GorensteinAlgebra& algebra, const DiffOperator& L,
                                     int power, int source_degree);
MultiplicationMap multiplication_map(const Polynomial& f, const DiffOperator& L, int power,
                                     int source_degree);

enum class Property { wlp, slp };
enum class Verdict { holds, fails, inconclusive };

std::string to_string(Property p);
std::string to_string(Verdict v);

/// Witness strategy: the canonical element sum X_i alone, or additionally
/// `trials` random forms in all dual variables.
struct Strategy {
  std::size_t trials = 0;

  static Strategy canonical() { return {0}; }
  static Strategy search(std::size_t trials) { return {trials}; }
};

struct LefschetzOptions {
  Strategy strategy = Strategy::search(20);
  std::uint64_t seed = 0;
  std::size_t symbolic_threshold = 8;
  int zero_test_rounds = 12;
};

/// One multiplication map •L^p : A_i -> A_{i+p} checked for a witness.
struct RankEvidence {
  int source_degree = 0;
  int power = 0;
  std::size_t rank = 0;
  std::size_t expected = 0;
  /// The map that decides WLP by itself (i = floor((d-1)/2), p = 1).
  bool middle = false;
};

/// One Hessian order: its value at the witness, or the zero test when no
/// witness was found.
struct HessianEvidence {
  int order = 0;
  std::size_t sigma = 0;
  std::optional<Rational> value;
  std::optional<ZeroTest> zero_test;
};

struct LefschetzReport {
  Property property = Property::wlp;
  Verdict verdict = Verdict::inconclusive;
  std::optional<DiffOperator> witness;
  std::vector<RankEvidence> ranks;
  std::vector<HessianEvidence> hessians;
  std::uint64_t seed = 0;
  /// Random forms drawn (the canonical element is not counted).
  std::size_t trials = 0;
  std::string note;
};

LefschetzReport check_wlp(const Polynomial& f, const LefschetzOptions& options = {});
LefschetzReport check_slp(const Polynomial& f, const LefschetzOptions& options = {});

/// sum of X_i over the x-block.
DiffOperator canonical_element(const VariableSplit& split);

}  // namespace apolar
