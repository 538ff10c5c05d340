#pragma once

// Nagata polynomials f = x_0^{d1} g_0 + ... + x_n^{d1} g_n with g_i forms of
// degree d2 in the u-variables, and the lines they carry.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apolar/ring.hpp"

namespace apolar {

struct NagataForm {
  int order = 0;  // d1
  int u_degree = 0;  // d2
  /// g_0, ..., g_n over the same split as f (u-variables only).
  std::vector<Polynomial> g;
  Polynomial f{VariableSplit(1, 0)};
  /// Side conditions that failed: dependent g_i, u-variables never used.
  std::vector<std::string> warnings;
};

/// The g_i must share one split with x_count == g.size() and be forms of a
/// common degree d2 >= 1 in the u-variables.
NagataForm build_nagata(int order, std::vector<Polynomial> g);

/// Splits f back into its g_i when f has the shape sum x_i^{d1} g_i.
std::optional<NagataForm> recognize_nagata(const Polynomial& f);

/// The line through (0 : a) and (x_bar : 0), parametrised as (lambda x_bar, mu a).
struct LinePencil {
  std::vector<Rational> alpha;  // a_1..a_m
  std::vector<Rational> base;   // x_bar_0..x_bar_n
};

/// c = sum x_bar_i^{d1} g_i(a); f restricted to the line is c lambda^{d1} mu^{d2}.
Rational restrict_to_line(const NagataForm& form, const LinePencil& line);

/// f at the d+1 points (1 : t), t = 0..d, of the line; all zero exactly when
/// the line lies on V(f).
bool line_on_hypersurface(const NagataForm& form, const LinePencil& line);

/// Every first partial of f vanishes on x = 0, i.e. P^{m-1} is singular on V(f).
bool singular_along_u_space(const NagataForm& form);

struct IncidenceSummary {
  std::size_t trials = 0;
  std::size_t on_hypersurface = 0;
  /// Pencils whose value of c disagreed with the pointwise check (expected 0).
  std::size_t criterion_mismatches = 0;
  std::size_t attempts = 0;
  std::uint64_t seed = 0;
  bool singular_locus_check = false;
  /// No solvable sample within the attempt budget.
  bool inconclusive = false;
  /// Free parameters of the construction: the point of P^{m-1}, the point
  /// of P^n = P^{x_count-1} cut by c = 0, and their sum.
  int alpha_parameters = 0;
  int base_parameters = 0;
  int family_parameters = 0;
  std::vector<LinePencil> pencils;
};

inline constexpr std::size_t kSampleAttemptBudget = 10000;

IncidenceSummary sample_line_family(const NagataForm& form, std::size_t trials,
                                    std::uint64_t seed);

}  // namespace apolar
