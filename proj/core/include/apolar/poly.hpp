#ifndef APOLAR_POLY_HPP
#define APOLAR_POLY_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "apolar/field.hpp"

namespace apolar {

/// Ordered variable names shared by S and its dual ring T. The ring role is
/// contextual: index i is x_i in S and X_i in T.
class VarSet {
 public:
  VarSet();
  explicit VarSet(std::vector<std::string> names);
  static VarSet indexed(std::string_view prefix, std::size_t count, std::size_t start = 0);

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  VarSet subset(std::span<const std::size_t> indices) const;
  VarSet with_appended(const std::vector<std::string>& extra) const;

  friend bool operator==(const VarSet& a, const VarSet& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exps);
  static Monomial one(std::size_t nvars) { return Monomial(std::vector<unsigned>(nvars, 0)); }
  static Monomial variable(std::size_t nvars, std::size_t i, unsigned power = 1);

  const std::vector<unsigned>& exponents() const { return e_; }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  std::size_t size() const { return e_.size(); }
  unsigned degree() const { return deg_; }

  bool divides(const Monomial& m) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Exact quotient; caller guarantees divisibility.
  friend Monomial operator/(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.e_ <=> b.e_; }

 private:
  std::vector<unsigned> e_;
  unsigned deg_ = 0;
};

// Graded order, lexicographically descending inside a degree: the first key
// is the leading term and the order of monomial_basis.
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.exponents() > b.exponents();
  }
};

/// Number of monomials of degree `degree` in `nvars` variables.
std::size_t monomial_count(std::size_t nvars, unsigned degree);
/// All monomials of degree i, graded-lex order ([x0^2, x0*x1, x1^2] for 2 vars).
std::vector<Monomial> monomial_basis(std::size_t nvars, unsigned degree);
std::vector<Monomial> monomial_basis(const VarSet& vars, unsigned degree);
/// Position of m inside monomial_basis(m.size(), m.degree()).
std::size_t monomial_index(const Monomial& m);

/// Polynomial with exact coefficients over a fixed VarSet.
class Poly {
 public:
  using Terms = std::map<Monomial, FieldElement, TermOrder>;

  Poly() = default;
  explicit Poly(VarSet vars) : vars_(std::move(vars)) {}
  static Poly constant(const VarSet& vars, const FieldElement& c);
  static Poly variable(const VarSet& vars, std::size_t i);
  static Poly term(const VarSet& vars, const Monomial& m, const FieldElement& c);
  // Inverse of dense(): coefficient vector in monomial_basis order.
  static Poly from_dense(const VarSet& vars, unsigned degree, std::span<const FieldElement> coeffs);

  const VarSet& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  // Highest total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  FieldElement coefficient(const Monomial& m) const;
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const FieldElement& leading_coefficient() const { return terms_.begin()->second; }
  FieldRef field() const;
  // Indices of the variables that occur.
  std::vector<std::size_t> support() const;

  void add_term(const Monomial& m, const FieldElement& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const FieldElement& c);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const FieldElement& c) { return a *= c; }
  friend Poly operator*(const FieldElement& c, Poly a) { return a *= c; }
  Poly pow(unsigned k) const;
  friend bool operator==(const Poly& a, const Poly& b);

  // Coefficients of the degree-`degree` part in monomial_basis order.
  std::vector<FieldElement> dense(unsigned degree) const;
  // Same polynomial over a VarSet containing all of this one's names.
  Poly embedded(const VarSet& target) const;
  // Drops the variables not listed; they must not occur.
  Poly restricted(const VarSet& target) const;
  // Divides by the leading coefficient.
  Poly monic() const;

 private:
  VarSet vars_;
  Terms terms_;
};

/// Sum of a_i x_i with not all a_i zero.
struct LinearForm {
  VarSet vars;
  std::vector<FieldElement> coeffs;
  Poly to_poly() const;
};

/// g∘F: g acts through X_i = d/dx_i. Zero when deg g > deg F.
Poly apolar_action(const Poly& g, const Poly& F);

/// Full multinomial expansion of L^d.
Poly power_of_linear(const LinearForm& L, unsigned d);

/// Substitutes x_j -> images[j] (polys over a common target VarSet).
Poly substitute(const Poly& F, const VarSet& target, const std::vector<Poly>& images);

struct Component {
  Poly part;
  std::vector<std::size_t> variables;  // indices into F.vars()
};

/// Connected components of the variable co-occurrence graph. The parts sum to F.
std::vector<Component> split_disjoint(const Poly& F);

enum class Role { S, T };
// Canonical text in the expression grammar. In the T role variable names are
// upper-cased.
std::string to_string(const Poly& p, Role role = Role::S);

}  // namespace apolar

#endif
