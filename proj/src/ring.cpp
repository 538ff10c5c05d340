#include "apolar/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace apolar {

VariableSplit::VariableSplit(int x_count, int u_count) : x_count_(x_count), u_count_(u_count) {
  if (x_count < 1) throw ContractError("variable split needs at least one x-variable");
  if (u_count < 0) throw ContractError("u-variable count must be non-negative");
}

std::string VariableSplit::name(int var, Alphabet alphabet) const {
  const bool dual = alphabet == Alphabet::dual;
  if (is_x(var)) return (dual ? "X" : "x") + std::to_string(var);
  return (dual ? "U" : "u") + std::to_string(var - x_count_ + 1);
}

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_)
    if (e < 0) throw ContractError("negative exponent in monomial");
}

Monomial Monomial::variable(std::size_t nvars, int var, int power) {
  Monomial m(nvars);
  m.exps_.at(static_cast<std::size_t>(var)) = power;
  return m;
}

void Monomial::set(std::size_t var, int exp) {
  if (exp < 0) throw ContractError("negative exponent in monomial");
  exps_.at(var) = exp;
}

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

Bidegree Monomial::bidegree(const VariableSplit& split) const {
  Bidegree b;
  for (std::size_t v = 0; v < exps_.size(); ++v) {
    if (split.is_x(static_cast<int>(v)))
      b.x += exps_[v];
    else
      b.u += exps_[v];
  }
  return b;
}

bool Monomial::is_square_free() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t v = 0; v < exps_.size(); ++v)
    if (exps_[v] > other.exps_[v]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t v = 0; v < exps_.size(); ++v) r.exps_[v] += other.exps_[v];
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw ContractError("monomial quotient is not exact");
  Monomial r(*this);
  for (std::size_t v = 0; v < exps_.size(); ++v) r.exps_[v] -= divisor.exps_[v];
  return r;
}

bool precedes(const Monomial& a, const Monomial& b) {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da > db;
  for (std::size_t v = a.size(); v-- > 0;) {
    if (a[v] != b[v]) return a[v] < b[v];
  }
  return false;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int e : m.exponents()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(VariableSplit split, const Rational& constant) : split_(split) {
  if (constant != 0) terms_.emplace(Monomial(static_cast<std::size_t>(split.size())), constant);
}

Polynomial Polynomial::monomial(VariableSplit split, const Monomial& m, const Rational& coeff) {
  if (m.size() != static_cast<std::size_t>(split.size()))
    throw StructuralError("monomial length does not match the variable split");
  Polynomial p(split);
  p.add_term(m, coeff);
  return p;
}

Polynomial Polynomial::variable(VariableSplit split, int var) {
  if (var < 0 || var >= split.size()) throw ContractError("variable index out of range");
  return monomial(split, Monomial::variable(static_cast<std::size_t>(split.size()), var));
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<int> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return std::nullopt;
  return d;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial r(split_);
  for (const auto& [m, c] : terms_) {
    const int e = m[static_cast<std::size_t>(var)];
    if (e == 0) continue;
    Monomial q(m);
    q.set(static_cast<std::size_t>(var), e - 1);
    r.terms_.emplace(std::move(q), c * e);
  }
  return r;
}

Polynomial Polynomial::pow(int exponent) const {
  if (exponent < 0) throw ContractError("negative polynomial power");
  Polynomial result(split_, 1);
  Polynomial base(*this);
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != static_cast<std::size_t>(split_.size()))
    throw ContractError("evaluation point has the wrong number of coordinates");
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t v = 0; v < m.size() && t != 0; ++v) {
      for (int e = 0; e < m[v]; ++e) t *= point[v];
    }
    total += t;
  }
  return total;
}

Polynomial Polynomial::restrict_to_u() const {
  Polynomial r(split_);
  for (const auto& [m, c] : terms_)
    if (m.bidegree(split_).x == 0) r.terms_.emplace(m, c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (!(split_ == other.split_)) throw StructuralError("polynomials over different variable splits");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (!(split_ == other.split_)) throw StructuralError("polynomials over different variable splits");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (!(a.split_ == b.split_)) throw StructuralError("polynomials over different variable splits");
  Polynomial r(a.split_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.split_ == b.split_ && a.terms_ == b.terms_;
}

std::optional<Bidegree> bidegree(const Polynomial& f) {
  if (f.is_zero()) return std::nullopt;
  const Bidegree b = f.terms().begin()->first.bidegree(f.split());
  for (const auto& [m, c] : f.terms())
    if (m.bidegree(f.split()) != b) return std::nullopt;
  return b;
}

// ---------------------------------------------------------------------------

DiffOperator DiffOperator::monomial(VariableSplit split, const Monomial& m, const Rational& coeff) {
  return DiffOperator(Polynomial::monomial(split, m, coeff));
}

DiffOperator DiffOperator::variable(VariableSplit split, int var) {
  return DiffOperator(Polynomial::variable(split, var));
}

namespace {

// Coefficient of m/op in op(m): the product of falling factorials.
mpz_class falling_weight(const Monomial& op, const Monomial& m) {
  mpz_class w = 1;
  for (std::size_t v = 0; v < m.size(); ++v)
    for (int e = 0; e < op[v]; ++e) w *= m[v] - e;
  return w;
}

}  // namespace

Polynomial apply(const Monomial& op, const Polynomial& f) {
  if (op.size() != static_cast<std::size_t>(f.split().size()))
    throw StructuralError("operator and polynomial use different variable splits");
  Polynomial r(f.split());
  for (const auto& [m, c] : f.terms()) {
    if (!op.divides(m)) continue;
    r.add_term(m / op, c * Rational(falling_weight(op, m)));
  }
  return r;
}

Polynomial apply(const DiffOperator& op, const Polynomial& f) {
  if (!(op.split() == f.split()))
    throw StructuralError("operator and polynomial use different variable splits");
  Polynomial r(f.split());
  for (const auto& [mo, co] : op.polynomial().terms()) {
    for (const auto& [m, c] : f.terms()) {
      if (!mo.divides(m)) continue;
      r.add_term(m / mo, co * c * Rational(falling_weight(mo, m)));
    }
  }
  return r;
}

Rational pairing(const Polynomial& op, const Polynomial& g) {
  if (!(op.split() == g.split()))
    throw StructuralError("operator and polynomial use different variable splits");
  Rational total = 0;
  const auto& small = op.term_count() <= g.term_count() ? op.terms() : g.terms();
  const Polynomial& other = op.term_count() <= g.term_count() ? g : op;
  for (const auto& [m, c] : small) {
    Rational c2 = other.coefficient(m);
    if (c2 == 0) continue;
    total += c * c2 * Rational(falling_weight(m, m));
  }
  return total;
}

namespace {

void enumerate(std::size_t first, std::size_t last, int degree, Monomial& current,
               std::vector<Monomial>& out) {
  if (first + 1 == last) {
    current.set(first, degree);
    out.push_back(current);
    current.set(first, 0);
    return;
  }
  for (int e = degree; e >= 0; --e) {
    current.set(first, e);
    enumerate(first + 1, last, degree - e, current, out);
  }
  current.set(first, 0);
}

// All monomials of `degree` supported on variables [first, last).
std::vector<Monomial> block_monomials(std::size_t nvars, std::size_t first, std::size_t last,
                                      int degree) {
  std::vector<Monomial> out;
  Monomial current(nvars);
  if (degree < 0) return out;
  if (first == last) {
    if (degree == 0) out.push_back(current);
    return out;
  }
  enumerate(first, last, degree, current, out);
  return out;
}

}  // namespace

std::vector<Monomial> monomial_basis(const VariableSplit& split, Bidegree degree) {
  if (degree.x < 0 || degree.u < 0) return {};
  const auto n = static_cast<std::size_t>(split.size());
  const auto nx = static_cast<std::size_t>(split.x_count());
  const auto xs = block_monomials(n, 0, nx, degree.x);
  const auto us = block_monomials(n, nx, n, degree.u);
  std::vector<Monomial> out;
  out.reserve(xs.size() * us.size());
  for (const auto& a : xs)
    for (const auto& b : us) out.push_back(a * b);
  std::sort(out.begin(), out.end(), precedes);
  return out;
}

std::vector<Monomial> monomial_basis(std::size_t nvars, int degree) {
  auto out = block_monomials(nvars, 0, nvars, degree);
  std::sort(out.begin(), out.end(), precedes);
  return out;
}

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// ---------------------------------------------------------------------------

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Monomial& m, const VariableSplit& split, Alphabet alphabet) {
  std::string s;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    if (!s.empty()) s += '*';
    s += split.name(static_cast<int>(v), alphabet);
    if (m[v] > 1) s += '^' + std::to_string(m[v]);
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const Polynomial& f, Alphabet alphabet) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) s += '-';
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str() + '*';
      s += to_string(m, f.split(), alphabet);
    }
  }
  return s;
}

std::string to_string(const DiffOperator& op) { return to_string(op.polynomial(), Alphabet::dual); }

}  // namespace apolar
