#pragma once

// Exact sparse polynomials over a bigraded variable split, together with the
// apolarity action of the dual ring of differential operators.
//
// Variables are ordered x0, ..., x_{n}, u1, ..., u_{m}. Inside the library a
// variable is addressed by its position in that list; the asymmetric 0-based /
// 1-based naming only shows up in text.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace apolar {

using Rational = mpq_class;

/// Violated precondition of a public operation.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operands that cannot be combined, e.g. polynomials over different splits.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Bidegree {
  int x = 0;
  int u = 0;

  int total() const { return x + u; }
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

enum class Alphabet { primal, dual };

class VariableSplit {
 public:
  VariableSplit(int x_count, int u_count);

  int x_count() const { return x_count_; }
  int u_count() const { return u_count_; }
  int size() const { return x_count_ + u_count_; }
  bool is_x(int var) const { return var < x_count_; }

  /// `x3`, `u1` in the primal alphabet; `X3`, `U1` in the dual one.
  std::string name(int var, Alphabet alphabet = Alphabet::primal) const;

  friend bool operator==(const VariableSplit&, const VariableSplit&) = default;

 private:
  int x_count_;
  int u_count_;
};

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps);

  static Monomial variable(std::size_t nvars, int var, int power = 1);

  std::size_t size() const { return exps_.size(); }
  int operator[](std::size_t var) const { return exps_[var]; }
  void set(std::size_t var, int exp);
  std::span<const int> exponents() const { return exps_; }

  int degree() const;
  Bidegree bidegree(const VariableSplit& split) const;
  bool is_square_free() const;
  bool is_one() const { return degree() == 0; }
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires `divisor.divides(*this)`.
  Monomial operator/(const Monomial& divisor) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exps_;
};

/// Graded reverse lexicographic order with x0 > x1 > ... > u1 > ... > um.
/// `precedes(a, b)` is true when a comes strictly before b (a is larger).
bool precedes(const Monomial& a, const Monomial& b);

struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const { return precedes(a, b); }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  explicit Polynomial(VariableSplit split) : split_(split) {}
  Polynomial(VariableSplit split, const Rational& constant);

  static Polynomial monomial(VariableSplit split, const Monomial& m, const Rational& coeff = 1);
  static Polynomial variable(VariableSplit split, int var);

  const VariableSplit& split() const { return split_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& coeff);

  /// Common total degree of all terms; absent for the zero polynomial or
  /// inhomogeneous input.
  std::optional<int> degree() const;
  bool is_homogeneous() const { return degree().has_value(); }

  Polynomial derivative(int var) const;
  Polynomial pow(int exponent) const;
  Rational evaluate(std::span<const Rational> point) const;
  /// Substitute zero for every x-variable.
  Polynomial restrict_to_u() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= -1; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  VariableSplit split_;
  TermMap terms_;
};

/// Common bidegree of all terms; (0,0) for nonzero constants, absent for the
/// zero polynomial and for mixed bidegrees.
std::optional<Bidegree> bidegree(const Polynomial& f);

/// A polynomial in the dual variables X0.., U1.. acting by differentiation.
class DiffOperator {
 public:
  explicit DiffOperator(Polynomial poly) : poly_(std::move(poly)) {}

  static DiffOperator monomial(VariableSplit split, const Monomial& m, const Rational& coeff = 1);
  static DiffOperator variable(VariableSplit split, int var);

  const Polynomial& polynomial() const { return poly_; }
  const VariableSplit& split() const { return poly_.split(); }
  bool is_zero() const { return poly_.is_zero(); }

  friend DiffOperator operator+(const DiffOperator& a, const DiffOperator& b) {
    return DiffOperator(a.poly_ + b.poly_);
  }
  friend DiffOperator operator-(const DiffOperator& a, const DiffOperator& b) {
    return DiffOperator(a.poly_ - b.poly_);
  }
  friend DiffOperator operator*(const DiffOperator& a, const DiffOperator& b) {
    return DiffOperator(a.poly_ * b.poly_);
  }
  friend DiffOperator operator*(const Rational& s, const DiffOperator& a) {
    return DiffOperator(a.poly_ * s);
  }
  friend bool operator==(const DiffOperator&, const DiffOperator&) = default;

 private:
  Polynomial poly_;
};

/// op(f): iterated partial differentiation, bilinear in both arguments.
Polynomial apply(const DiffOperator& op, const Polynomial& f);

/// Action of a single dual monomial with unit coefficient.
Polynomial apply(const Monomial& op, const Polynomial& f);

/// The scalar op(g) for op and g of equal degree; mismatched terms contribute 0.
Rational pairing(const Polynomial& op, const Polynomial& g);

/// Monomials of the given bidegree, in `precedes` order.
std::vector<Monomial> monomial_basis(const VariableSplit& split, Bidegree degree);

/// Monomials of one total degree in `nvars` variables, in `precedes` order.
std::vector<Monomial> monomial_basis(std::size_t nvars, int degree);

/// Binomial coefficient as an exact integer; 0 when k < 0 or k > n.
mpz_class binomial(long n, long k);

std::string to_string(const Rational& q);
std::string to_string(const Monomial& m, const VariableSplit& split,
                      Alphabet alphabet = Alphabet::primal);
std::string to_string(const Polynomial& f, Alphabet alphabet = Alphabet::primal);
std::string to_string(const DiffOperator& op);

}  // namespace apolar
