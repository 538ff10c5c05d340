#pragma once

// Simplicial complexes on vertices u_1..u_m, the simplicial Nagata form
// f = sum_r x_r^k u^{M_r} of a pure k-dimensional complex, and closed-form
// predictions for its Hilbert data and annihilator generators.

#include <cstdint>
#include <string>
#include <vector>

#include "apolar/apolarity.hpp"
#include "apolar/nagata.hpp"
#include "apolar/ring.hpp"

namespace apolar {

/// Vertex sets are bit masks: bit v-1 stands for u_v.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 63;

class SimplicialComplex {
 public:
  SimplicialComplex(int vertices, std::vector<VertexSet> facets, std::vector<std::string> warnings);

  int vertex_count() const { return vertices_; }
  /// Maximal faces in input order (contained ones dropped).
  const std::vector<VertexSet>& facets() const { return facets_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  bool contains(VertexSet face) const;
  /// f_j = number of (j-1)-faces, f_0 = 1 for the empty face.
  const std::vector<std::size_t>& f_vector() const { return f_; }
  bool pure() const { return pure_; }
  int dimension() const { return dimension_; }

  /// Non-faces all of whose proper subsets are faces, ascending by size then mask.
  std::vector<VertexSet> minimal_nonfaces() const;
  /// Facets grouped by chains of nonempty pairwise intersections.
  std::vector<std::vector<std::size_t>> facet_components() const;

 private:
  int vertices_;
  std::vector<VertexSet> facets_;
  std::vector<std::string> warnings_;
  std::vector<std::size_t> f_;
  bool pure_ = true;
  int dimension_ = -1;
};

/// Facets as lists of 1-based vertices.
SimplicialComplex face_complex(const std::vector<std::vector<int>>& facets, int m);

std::vector<int> vertices_of(VertexSet s);
int popcount(VertexSet s);

/// Δ must be pure of dimension k; one x-variable per facet in facet order.
NagataForm complex_to_form(const SimplicialComplex& complex, int k);

/// Reads the facets back from a form whose g_i are square-free monomials.
std::vector<VertexSet> facets_of_form(const NagataForm& form);

struct ComplexPrediction {
  int order = 0;
  /// dim A_(i,j) for 0 <= i <= k, 0 <= j <= k+1, sorted by (i, j).
  std::vector<BigradedDimension> bigraded;
  std::vector<std::size_t> h;
  /// (a) all X-monomials of degree k+1 and every U_v^2.
  std::vector<DiffOperator> powers;
  /// (b) U^S for the minimal non-faces S.
  std::vector<DiffOperator> nonfaces;
  /// (c) X_r^i U^P, 1 <= i <= k, with P a non-face or a face disjoint from M_r.
  std::vector<DiffOperator> mixed;
  /// (d) X_r^k U^{M_r \ S} - X_s^k U^{M_s \ S} for every nonempty S inside M_r ∩ M_s.
  std::vector<DiffOperator> binomials;
  /// Not among (a)-(d) but needed for the ideal: X_r X_s (r != s) when k >= 2,
  /// and one socle binomial X_r^k U^{M_r} - X_s^k U^{M_s} per extra component
  /// of the facet intersection graph.
  std::vector<DiffOperator> completion;
  bool complement_empty = false;

  /// (a)-(d).
  std::vector<DiffOperator> stated() const;
  /// (a)-(d) and the completion.
  std::vector<DiffOperator> all() const;
};

ComplexPrediction predict_hilbert(const SimplicialComplex& complex, int k);
/// predict_hilbert plus the generator families.
ComplexPrediction predict_generators(const SimplicialComplex& complex, int k);

struct DimensionCheck {
  int i = 0;
  int j = 0;
  std::size_t predicted = 0;
  std::size_t computed = 0;
};

struct IdealCheck {
  int i = 0;
  int j = 0;
  /// dim (Q / J)_(i,j) for J generated by the predicted operators.
  std::size_t generated_quotient = 0;
  /// dim A_(i,j).
  std::size_t computed = 0;
};

struct VerificationReport {
  NagataForm form;
  ComplexPrediction prediction;
  HilbertData computed;
  /// Entry-by-entry mismatches only.
  std::vector<DimensionCheck> dimension_mismatches;
  std::size_t dimension_checks = 0;
  /// Predicted operators that do not annihilate f.
  std::vector<std::string> non_annihilating;
  std::size_t generator_checks = 0;
  /// Pieces of degree <= d+1 where the ideal of all predicted operators differs.
  std::vector<IdealCheck> ideal_mismatches;
  /// The same with families (a)-(d) alone.
  std::vector<IdealCheck> stated_ideal_mismatches;
  std::size_t ideal_checks = 0;

  bool dimensions_pass() const { return dimension_mismatches.empty(); }
  bool generators_pass() const { return non_annihilating.empty(); }
  bool ideal_pass() const { return ideal_mismatches.empty(); }
  bool stated_ideal_pass() const { return stated_ideal_mismatches.empty(); }
  bool passed() const { return dimensions_pass() && generators_pass() && ideal_pass(); }
};

VerificationReport verify_prediction(const SimplicialComplex& complex, int k);

}  // namespace apolar
