#ifndef APOLAR_IDEAL_HPP
#define APOLAR_IDEAL_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "apolar/linalg.hpp"
#include "apolar/poly.hpp"

namespace apolar {

/// The map T_i -> S_{d-i}, g -> g∘F, in monomial_basis coordinates.
Matrix catalecticant(const Poly& F, unsigned i);

/// Homogeneous ideal of T truncated at degree D: slices[i] ⊆ T_i.
class GradedIdeal {
 public:
  GradedIdeal(VarSet vars, std::vector<Subspace> slices);
  static GradedIdeal unit(const VarSet& vars, unsigned D);
  static GradedIdeal zero(const VarSet& vars, unsigned D);
  // Ideal generated by homogeneous forms, truncated at D.
  static GradedIdeal generated_by(const VarSet& vars, const std::vector<Poly>& gens, unsigned D);

  const VarSet& vars() const { return vars_; }
  unsigned top_degree() const { return static_cast<unsigned>(slices_.size() - 1); }
  const Subspace& slice(unsigned i) const { return slices_.at(i); }
  const std::vector<Subspace>& slices() const { return slices_; }

  // T_1 * slices[i] ⊆ slices[i+1] for every i < D.
  bool closure_holds() const;
  // Membership of a homogeneous form of degree ≤ D.
  bool contains(const Poly& g) const;

  friend bool operator==(const GradedIdeal& a, const GradedIdeal& b);

 private:
  VarSet vars_;
  std::vector<Subspace> slices_;
};

struct HFProfile {
  std::vector<std::size_t> values;
  bool stabilized = false;  // values[D-1] == values[D]
  std::size_t sum() const;
};

/// F^⊥ truncated at D (D ≥ deg F + 1). ZeroForm for F = 0.
GradedIdeal perp(const Poly& F, unsigned D);
/// (t∘F)^⊥, or the unit ideal when t∘F = 0.
GradedIdeal colon_by_form(const Poly& F, const Poly& t, unsigned D);
/// Intersection of colon_by_form(F, g) over the generators.
GradedIdeal colon_by_ideal(const Poly& F, const std::vector<Poly>& gens, unsigned D);
/// I + (t), degreewise.
GradedIdeal add_principal(const GradedIdeal& I, const Poly& t);
GradedIdeal intersect(const GradedIdeal& a, const GradedIdeal& b);
GradedIdeal sum(const GradedIdeal& a, const GradedIdeal& b);

std::vector<Poly> minimal_generators(const GradedIdeal& I);

HFProfile hf(const GradedIdeal& I);

using Point = std::vector<FieldElement>;
/// First nonzero coordinate scaled to 1.
Point normalize_point(const Point& p);

struct PointIdeal {
  GradedIdeal ideal;
  HFProfile profile;
};
/// Vanishing ideal of distinct projective points up to degree D.
PointIdeal hf_points(const VarSet& vars, std::span<const Point> points, unsigned D);

/// Dense coefficients of t*v, where v is a dense vector of T_degree.
Vector multiply_vector(const VarSet& vars, unsigned degree, std::span<const FieldElement> v, const Poly& t);

}  // namespace apolar

#endif
