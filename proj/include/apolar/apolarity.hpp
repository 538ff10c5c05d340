#pragma once

// Macaulay inverse systems: catalecticant maps, the annihilator ideal Ann(f),
// Hilbert data and coset bases of A = Q / Ann(f).
//
// A bihomogeneous f is handled piece by piece over bidegrees (i, j). A form
// that is only homogeneous is handled in the single grading; internally every
// variable is then treated as an x-variable, so a "piece" is (k, 0).

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "apolar/kernels.hpp"
#include "apolar/linalg.hpp"
#include "apolar/ring.hpp"

namespace apolar {

/// Matrix of Q_piece -> R_(socle - piece), alpha -> alpha(f). Column c holds
/// the coordinates of source_basis[c](f) in target_basis; only target
/// monomials that occur are listed.
struct CatalecticantMap {
  std::vector<Monomial> source_basis;
  std::vector<Monomial> target_basis;
  linalg::SparseMatrix matrix;

  std::size_t rank() const;
};

CatalecticantMap catalecticant(const Polynomial& f, Bidegree piece);
/// Single grading: all operators of total degree k.
CatalecticantMap catalecticant(const Polynomial& f, int k);

struct BigradedDimension {
  int i = 0;
  int j = 0;
  std::size_t dim = 0;

  friend bool operator==(const BigradedDimension&, const BigradedDimension&) = default;
};

struct HilbertData {
  int socle_degree = 0;
  std::vector<std::size_t> h;
  /// dim A_(i,j) for 0 <= i <= d1, 0 <= j <= d2, sorted by (i, j); only
  /// present for bihomogeneous f.
  std::optional<std::vector<BigradedDimension>> bigraded;
};

/// Ann(f) restricted to one piece.
struct IdealPiece {
  Bidegree degree;
  /// dim Q_piece.
  std::size_t ambient_dim = 0;
  /// dim I_piece.
  std::size_t dim = 0;
  /// I_piece = Q_piece; the basis is not materialised.
  bool full = false;
  /// Ordered monomial basis of Q_piece (empty when full).
  std::vector<Monomial> source_basis;
  /// Kernel basis in coordinates over source_basis.
  std::vector<linalg::SparseVector> kernel;
  std::vector<DiffOperator> generators;
};

class GradedIdeal {
 public:
  GradedIdeal(VariableSplit split, int socle_degree, bool bigraded, std::vector<IdealPiece> pieces)
      : split_(split), socle_degree_(socle_degree), bigraded_(bigraded), pieces_(std::move(pieces)) {}

  const VariableSplit& split() const { return split_; }
  int socle_degree() const { return socle_degree_; }
  bool bigraded() const { return bigraded_; }
  const std::vector<IdealPiece>& pieces() const { return pieces_; }

  /// In order of increasing degree.
  std::vector<DiffOperator> minimal_generators() const;
  std::size_t dimension(int degree) const;
  /// Kernel basis element as an operator over the original split.
  DiffOperator kernel_element(const IdealPiece& piece, std::size_t index) const;

 private:
  VariableSplit split_;
  int socle_degree_;
  bool bigraded_;
  std::vector<IdealPiece> pieces_;
};

/// The graded algebra A = Q / Ann(f) of a nonzero form f, with the
/// catalecticant data of every piece in 0 <= degree <= d computed eagerly.
class GorensteinAlgebra {
 public:
  explicit GorensteinAlgebra(const Polynomial& f,
                             kernels::Exec exec = kernels::Exec::parallel);
  ~GorensteinAlgebra();
  GorensteinAlgebra(GorensteinAlgebra&&) noexcept;
  GorensteinAlgebra& operator=(GorensteinAlgebra&&) noexcept;

  const Polynomial& dual_generator() const;
  const VariableSplit& split() const;
  int socle_degree() const;
  bool bigraded() const;

  std::size_t dim(int k) const;
  /// dim A_(i,j); 0 outside the socle box. Requires bigraded().
  std::size_t dim(Bidegree piece) const;

  /// Column-pivot monomials of the degree-k catalecticant, in monomial order.
  std::vector<Monomial> coset_basis(int k) const;

  /// Spanning images beta(f) (beta in the coset basis of the complementary
  /// degree): a basis of the degree-k part of the inverse system.
  std::vector<Polynomial> inverse_system(int k) const;

  /// Coordinates of each g (elements of the degree-k inverse system) in the
  /// basis returned by inverse_system(k); one row per input.
  std::vector<std::vector<Rational>> inverse_system_coordinates(
      int k, std::span<const Polynomial> gs) const;

  HilbertData hilbert() const;
  GradedIdeal annihilator() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

GradedIdeal annihilator(const Polynomial& f);
HilbertData hilbert(const Polynomial& f);
std::vector<Monomial> coset_basis(const Polynomial& f, int k);
bool is_annihilated(const Polynomial& f, const DiffOperator& op);

/// The ideal J generated by a finite set of homogeneous operators, queried
/// for dim (Q/J) in one degree. Monomial generators are handled
/// combinatorially; the rest are reduced modulo them and row reduced.
class GeneratedIdeal {
 public:
  /// With bigraded = false every generator only needs to be homogeneous and
  /// pieces are queried by total degree.
  GeneratedIdeal(VariableSplit split, std::vector<DiffOperator> generators, bool bigraded);

  std::size_t quotient_dimension(Bidegree piece) const;
  std::size_t quotient_dimension(int degree) const;

 private:
  std::size_t quotient_dimension_impl(Bidegree piece, const VariableSplit& work) const;

  VariableSplit split_;
  bool bigraded_;
  std::vector<Monomial> monomial_generators_;
  std::vector<std::pair<Bidegree, Polynomial>> other_generators_;
};

}  // namespace apolar
