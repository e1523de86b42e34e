#ifndef APOLAR_BOUNDS_HPP
#define APOLAR_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "apolar/ideal.hpp"

namespace apolar {

enum class Validity { Unconditional, GenericT };
enum class CertStatus { CertifiedEqual, BoundsOnly, CitedUpper };
const char* to_string(Validity v);
const char* to_string(CertStatus s);

/// rk(F) ≥ ceil(Σ HF(T/(F^⊥:I + (t)), i) / e).
struct LowerBoundWitness {
  std::vector<Poly> ideal_generators;
  Poly t;
  unsigned e = 0;
  HFProfile profile;
  std::size_t hf_sum = 0;
  std::size_t bound = 0;
  Validity validity = Validity::Unconditional;
};

/// F = Σ c_i L_{p_i}^d, with zero coefficients pruned.
struct UpperBoundWitness {
  std::vector<Point> points;
  std::vector<FieldElement> coefficients;
  FieldRef field;
  std::size_t count() const { return points.size(); }
};

struct RankCertificate {
  Poly form;
  LowerBoundWitness lower;
  std::optional<UpperBoundWitness> upper;
  CertStatus status = CertStatus::BoundsOnly;
  std::optional<std::size_t> cited_rank;
  std::string citation;
};

/// Lower bound from the ideal (gens) and t ∈ I_e. degree_cap raises the
/// truncation above deg F + 1.
LowerBoundWitness lower_bound(const Poly& F, const std::vector<Poly>& gens, const Poly& t,
                              unsigned degree_cap = 0);
/// Same with t drawn as a seeded integer combination of the generators
/// (coefficients in [-997, 997], five draws, best bound kept).
LowerBoundWitness lower_bound_generic(const Poly& F, const std::vector<Poly>& gens, std::uint64_t seed,
                                      unsigned degree_cap = 0);

std::optional<UpperBoundWitness> upper_bound_from_points(const Poly& F, std::span<const Point> points);

/// certified-equal iff the point witness exists and matches the lower bound.
RankCertificate certify(const Poly& F, const std::vector<Poly>& gens, const Poly& t,
                        std::span<const Point> points);
RankCertificate assemble_certificate(const Poly& F, LowerBoundWitness lower,
                                     std::optional<UpperBoundWitness> upper);

struct IdealEqualityReport {
  bool equal = false;
  std::vector<std::size_t> lhs_dims;  // dim (I_X + (t))_i
  std::vector<std::size_t> rhs_dims;  // dim (F^⊥ + (t))_i
  std::vector<unsigned> differing_degrees;
};
/// Compares I_X + (t) with F^⊥ + (t) degreewise. PointsNotApolar if I_X ⊄ F^⊥.
IdealEqualityReport ideal_equality_check(const Poly& F, std::span<const Point> points, const std::vector<Poly>& gens,
                          const Poly& t);

/// Dual change of coordinates Y = A X that moves (F^⊥)_1 onto the last
/// coordinates; F(x) = G(y) with x = A^T y.
struct EssentialReduction {
  Matrix change;          // A
  Poly reduced;           // G over the first n+1-s new coordinates
  std::size_t removed = 0;  // s = dim (F^⊥)_1
  VarSet coordinates;       // all n+1 new coordinates; reduced uses a prefix
};
EssentialReduction essential_vars(const Poly& F);
/// Applies the inverse change to the reduced form; recovers F.
Poly expand_reduction(const EssentialReduction& r, const VarSet& original);
/// Rewrites a dual form in the reduced coordinates (Y) in the original X.
Poly pull_back_dual(const EssentialReduction& r, const Poly& t, const VarSet& original);

/// Σ HF(T/(F^⊥ + (t)), i) over 0..deg F.
std::size_t perp_plus_sum(const Poly& F, const Poly& t);

/// Coordinate-hyperplane colon sums and sampled perp sums for linear t with
/// at least two nonzero coefficients.
struct LinearComputabilityReport {
  std::size_t rank = 0;
  std::vector<std::size_t> coordinate_sums;  // one per variable, I = (X_j)
  struct Sample {
    std::vector<std::size_t> support;
    std::vector<long> coefficients;
    std::size_t perp_plus_sum = 0;
  };
  std::vector<Sample> samples;
  std::size_t max_sampled_sum = 0;
  bool coordinate_attains_rank = false;
  // no coordinate t computes the rank and every sampled t falls short
  bool rules_out_linear() const { return !coordinate_attains_rank && max_sampled_sum < rank; }
};
LinearComputabilityReport linear_computability_analysis(const Poly& F, std::size_t rank,
                                                        std::size_t samples_per_support, std::uint64_t seed);

/// Integer in [-bound, bound] from a 64-bit draw; platform independent.
long draw_coefficient(std::uint64_t word, long bound);

}  // namespace apolar

#endif
