#ifndef APOLAR_FIELD_HPP
#define APOLAR_FIELD_HPP

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace apolar {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" into a canonical rational.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// Univariate polynomial over Q, coefficients stored low degree first.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly monomial(const Rational& c, std::size_t k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t k) const;
  const Rational& leading() const { return c_.back(); }

  UniPoly derivative() const;
  UniPoly monic() const;
  Rational evaluate(const Rational& x) const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  std::string to_string(std::string_view var) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Quotient and remainder; throws InvalidInput on division by zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
// Monic gcd (zero if both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

struct ExtendedGcd {
  UniPoly g, s, t;  // g = s*a + t*b, g monic
};
ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b);

/// True iff gcd(p, p') is constant. Throws InvalidInput for p = 0.
bool squarefree_check(const UniPoly& p);

/// The m-th cyclotomic polynomial.
UniPoly cyclotomic(unsigned m);

class ExtensionField;
using FieldRef = std::shared_ptr<const ExtensionField>;

/// Q[z]/(p(z)) for a monic squarefree p. Irreducibility is not checked;
/// zero divisors surface when an inversion fails.
class ExtensionField {
 public:
  static FieldRef make(std::string generator, const UniPoly& minimal);

  const std::string& generator() const { return generator_; }
  const UniPoly& modulus() const { return modulus_; }
  std::size_t degree() const { return static_cast<std::size_t>(modulus_.degree()); }
  bool same_as(const ExtensionField& other) const;

  std::vector<Rational> reduce(const std::vector<Rational>& coords) const;
  std::vector<Rational> multiply(const std::vector<Rational>& a,
                                 const std::vector<Rational>& b) const;

 private:
  ExtensionField(std::string generator, UniPoly modulus);
  std::string generator_;
  UniPoly modulus_;
  // z^(m+k) mod p for k = 0..m-2
  std::vector<std::vector<Rational>> high_powers_;
};

/// Q(zeta_m) presented as Q[z]/(Phi_m). Returns null (plain Q) when phi(m) = 1.
FieldRef cyclotomic_field(unsigned m, std::string generator = "z");

/// Exact scalar in Q or in a declared extension. A null field means Q.
class FieldElement {
 public:
  FieldElement() : coords_(1) {}
  FieldElement(long v) : coords_{Rational(v)} {}  // NOLINT: implicit by design
  FieldElement(const Rational& q) : coords_{q} { coords_[0].canonicalize(); }  // NOLINT
  FieldElement(FieldRef field, std::vector<Rational> coords);

  static FieldElement generator(const FieldRef& field);

  const FieldRef& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // Throws InvalidInput unless is_rational().
  const Rational& rational() const;

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  FieldElement operator-() const;
  FieldElement pow(unsigned k) const;

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  std::string to_string() const;

 private:
  void adopt(const FieldRef& f);
  FieldRef field_;
  std::vector<Rational> coords_;
};

/// Multiplicative inverse. ZeroInversion for 0; NotInvertible (with the
/// discovered factor of the modulus) for a zero divisor.
FieldElement field_invert(const FieldElement& a);

/// The common context of two elements, or FieldMismatch.
FieldRef common_field(const FieldRef& a, const FieldRef& b);

}  // namespace apolar

#endif
