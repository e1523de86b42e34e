#ifndef APOLAR_FAMILIES_HPP
#define APOLAR_FAMILIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apolar/bounds.hpp"

namespace apolar {

enum class Family { Binary, Monomial, XaSumB, XaSumBPlusPower, CIperp, X0aG, Vandermonde, None };
const char* to_string(Family f);

/// Result of syntactic recognition.
///   Monomial:          parameters = exponents of the occurring variables, smallest first
///   XaSumB(+Power):    parameters = (a, b, n)
///   CIperp:            parameters = (a, e, d_1, ..., d_n), q^a the distinguished generator
///   X0aG:              parameters = (a, d_1, ..., d_n) for x_k^a G, d_i the degrees of G^perp
///   Vandermonde:       parameters = (n)
///   Binary:            parameters = (d)
struct FamilyMatch {
  Family tag = Family::None;
  std::vector<long> parameters;
  std::string citation;
  // Monomial: occurring variables sorted by exponent. XaSumB: x0 first, then x1..xn.
  // Vandermonde: x_1..x_n. X0aG: the factored variable.
  std::vector<std::size_t> order;
  std::optional<Poly> q;  // CIperp / X0aG
  int sign = 1;           // Vandermonde: F = sign * V_n
};

struct FamilyOptions {
  unsigned e = 0;  // 0 = family default
  std::uint64_t seed = 1;
  bool vandermonde_large_points = false;  // point witness for n >= 5 (slow)
};

/// Rank of a recognised form. The closed-form value is recorded as [low, high]
/// (equal when the rank is known); the certificate carries the engine-recomputed
/// lower bound and, when one is constructed, the point witness.
struct FamilyRank {
  FamilyMatch match;
  std::size_t low = 0;
  std::size_t high = 0;
  RankCertificate certificate;
  // where an exact rank comes from when the engine lower bound falls short
  std::string lower_source = "engine";
  std::vector<std::string> notes;
  bool exact() const { return low == high; }
  bool engine_matches() const { return exact() && certificate.lower.bound == low; }
};

struct SylvesterResult {
  Poly h1, h2;
  unsigned d1 = 0, d2 = 0;
  bool squarefree_h1 = false;
  std::size_t rank = 0;
  std::optional<LowerBoundWitness> lower;  // rank computed by a linear or radical t
  std::vector<std::string> notes;
};

// Binary forms.
SylvesterResult sylvester(const Poly& F);
/// Binary homogeneous polynomial h(X0, X1) as its dehomogenization h(s, 1) plus
/// the multiplicity of X1. Rational coefficients only.
bool binary_squarefree(const Poly& h);

// Monomials. e defaults to 1 and must satisfy 1 <= e <= (a0 + 1) / 2.
FamilyRank monomial_rank(const Poly& F, unsigned e = 0);
/// Explicit Π(a_i+1) points cut out by X_i^{a_i+1} - X_0^{a_i+1}.
std::vector<Point> monomial_points(const Poly& F, FieldRef& field);

// x0^a (x1^b + ... + xn^b) [+ x0^(a+b)].
Poly xa_sum_b_form(unsigned a, unsigned b, unsigned n, bool plus_power = false);
FamilyRank xa_sum_b_rank(unsigned a, unsigned b, unsigned n, bool plus_power = false,
                         const FamilyOptions& opts = {});
FamilyRank xa_sum_b_rank(const Poly& F, const FamilyMatch& m, const FamilyOptions& opts = {});

// F^perp a complete intersection containing q^a.
FamilyRank ci_rank(const Poly& F, const Poly& q, unsigned a);

/// The Vandermonde determinant Π_{i<j}(x_i - x_j) over x1..xn.
Poly vandermonde_form(unsigned n);
/// σ_1, ..., σ_n in the given variables.
std::vector<Poly> elementary_symmetric(const VarSet& vars);
FamilyRank vandermonde(unsigned n, const FamilyOptions& opts = {});

/// r with r^a = g / lc(g), if it exists; r is monic.
std::optional<Poly> perfect_power_root(const Poly& g, unsigned a);

FamilyMatch classify(const Poly& F);
/// e values at which the matched family has a certificate.
std::vector<unsigned> admissible_e(const Poly& F, const FamilyMatch& m);
/// Closed form plus certificate for the match (None gives engine bounds and
/// the sum of term ranks as upper bound).
FamilyRank certify_family(const Poly& F, const FamilyMatch& m, const FamilyOptions& opts = {});
FamilyRank rank_form(const Poly& F, const FamilyOptions& opts = {});

}  // namespace apolar

#endif
