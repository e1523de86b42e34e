#include "apolar/bounds.hpp"

#include <algorithm>
#include <random>

#include "apolar/error.hpp"

namespace apolar {

namespace {
constexpr std::string_view kModule = "rank-bounds";
constexpr long kCoefficientBound = 997;
constexpr int kGenericDraws = 5;

void check_form(const Poly& F) {
  if (F.is_zero()) raise(Errc::ZeroForm, kModule, "the zero form has no rank bounds");
  if (!F.is_homogeneous()) raise(Errc::InvalidInput, kModule, "form is not homogeneous");
}

// Validates (gens, t) and returns e.
unsigned check_ideal(const Poly& F, const std::vector<Poly>& gens, const Poly* t) {
  if (gens.empty()) raise(Errc::EmptyGeneratorList, kModule, "the ideal I needs at least one generator");
  const int e = gens.front().degree();
  for (const auto& g : gens) {
    if (!(g.vars() == F.vars())) raise(Errc::VarSetMismatch, kModule, "generator over a different variable list");
    if (g.is_zero() || !g.is_homogeneous() || g.degree() != e)
      raise(Errc::DegreeMismatch, kModule, "generators of I must be nonzero forms of one degree");
  }
  if (t) {
    if (!(t->vars() == F.vars())) raise(Errc::VarSetMismatch, kModule, "t over a different variable list");
    if (t->is_zero()) raise(Errc::TNotInIdeal, kModule, "t must be a nonzero form");
    if (!t->is_homogeneous() || t->degree() != e)
      raise(Errc::DegreeMismatch, kModule, "t must have the degree of the generators");
  }
  if (e < 1) raise(Errc::EOutOfRange, kModule, "e must be at least 1");
  if (e > F.degree())
    raise(Errc::EOutOfRange, kModule,
          "e = " + std::to_string(e) + " exceeds deg F = " + std::to_string(F.degree()));
  return static_cast<unsigned>(e);
}

// The generators' span in T_e, which is I_e because they share degree e.
Echelon generator_span(const std::vector<Poly>& gens, unsigned e) {
  Matrix m(0, monomial_count(gens.front().vars().size(), e));
  for (const auto& g : gens) m.append_row(g.dense(e));
  return row_reduce(m);
}

LowerBoundWitness finish(const std::vector<Poly>& gens, const Poly& t, unsigned e, const GradedIdeal& J,
                         Validity validity) {
  LowerBoundWitness w{gens, t, e, hf(add_principal(J, t)), 0, 0, validity};
  w.hf_sum = w.profile.sum();
  w.bound = (w.hf_sum + e - 1) / e;
  return w;
}

unsigned truncation(const Poly& F, unsigned cap) {
  return std::max(static_cast<unsigned>(F.degree()) + 1, cap);
}
}  // namespace

const char* to_string(Validity v) { return v == Validity::Unconditional ? "unconditional" : "generic-t"; }

const char* to_string(CertStatus s) {
  switch (s) {
    case CertStatus::CertifiedEqual: return "certified-equal";
    case CertStatus::BoundsOnly: return "bounds-only";
    case CertStatus::CitedUpper: return "cited-upper";
  }
  return "bounds-only";
}

long draw_coefficient(std::uint64_t word, long bound) {
  auto span = static_cast<std::uint64_t>(2 * bound + 1);
  return static_cast<long>(word % span) - bound;
}

LowerBoundWitness lower_bound(const Poly& F, const std::vector<Poly>& gens, const Poly& t, unsigned degree_cap) {
  check_form(F);
  const unsigned e = check_ideal(F, gens, &t);
  Echelon span = generator_span(gens, e);
  if (!in_row_space(span, t.dense(e)))
    raise(Errc::TNotInIdeal, kModule, "t = " + to_string(t, Role::T) + " is not in I_e");
  Validity v = span.rank() == 1 ? Validity::Unconditional : Validity::GenericT;
  GradedIdeal J = colon_by_ideal(F, gens, truncation(F, degree_cap));
  return finish(gens, t, e, J, v);
}

LowerBoundWitness lower_bound_generic(const Poly& F, const std::vector<Poly>& gens, std::uint64_t seed,
                                      unsigned degree_cap) {
  check_form(F);
  const unsigned e = check_ideal(F, gens, nullptr);
  Echelon span = generator_span(gens, e);
  GradedIdeal J = colon_by_ideal(F, gens, truncation(F, degree_cap));
  if (span.rank() == 1) return finish(gens, gens.front(), e, J, Validity::Unconditional);
  std::mt19937_64 rng(seed);
  std::optional<LowerBoundWitness> best;
  for (int draw = 0; draw < kGenericDraws; ++draw) {
    Poly t(F.vars());
    for (const auto& g : gens) t += g * FieldElement(draw_coefficient(rng(), kCoefficientBound));
    if (t.is_zero()) continue;
    LowerBoundWitness w = finish(gens, t, e, J, Validity::GenericT);
    if (!best || w.bound > best->bound) best = std::move(w);
  }
  if (!best) raise(Errc::TNotInIdeal, kModule, "every generic draw of t vanished");
  return *best;
}

std::optional<UpperBoundWitness> upper_bound_from_points(const Poly& F, std::span<const Point> points) {
  check_form(F);
  const VarSet& vars = F.vars();
  const unsigned d = static_cast<unsigned>(F.degree());
  FieldRef field = F.field();
  std::vector<Point> norm;
  for (const auto& p : points) {
    if (p.size() != vars.size()) raise(Errc::InvalidInput, kModule, "point has the wrong number of coordinates");
    for (const auto& x : p) field = common_field(field, x.field());
    Point q = normalize_point(p);
    for (const auto& o : norm)
      if (o == q) raise(Errc::DuplicatePoint, kModule, "duplicate point after normalization");
    norm.push_back(std::move(q));
  }
  if (norm.empty()) return std::nullopt;
  const std::size_t rows = monomial_count(vars.size(), d);
  Matrix M(rows, norm.size());
  std::vector<Poly> powers;
  for (std::size_t k = 0; k < norm.size(); ++k) {
    powers.push_back(power_of_linear(LinearForm{vars, norm[k]}, d));
    Vector col = powers.back().dense(d);
    for (std::size_t r = 0; r < rows; ++r) M(r, k) = col[r];
  }
  auto c = solve(M, F.dense(d));
  if (!c) return std::nullopt;
  UpperBoundWitness w;
  w.field = field;
  Poly check(vars);
  for (std::size_t k = 0; k < norm.size(); ++k) {
    if ((*c)[k].is_zero()) continue;
    w.points.push_back(norm[k]);
    w.coefficients.push_back((*c)[k]);
    check += powers[k] * (*c)[k];
  }
  if (!(check == F)) raise(Errc::InvalidInput, kModule, "decomposition failed re-verification");
  return w;
}

RankCertificate assemble_certificate(const Poly& F, LowerBoundWitness lower, std::optional<UpperBoundWitness> upper) {
  RankCertificate c{F, std::move(lower), std::move(upper), CertStatus::BoundsOnly, std::nullopt, {}};
  if (c.upper && c.upper->count() == c.lower.bound) c.status = CertStatus::CertifiedEqual;
  return c;
}

RankCertificate certify(const Poly& F, const std::vector<Poly>& gens, const Poly& t, std::span<const Point> points) {
  LowerBoundWitness lower = lower_bound(F, gens, t);
  return assemble_certificate(F, std::move(lower), upper_bound_from_points(F, points));
}

IdealEqualityReport ideal_equality_check(const Poly& F, std::span<const Point> points, const std::vector<Poly>& gens,
                          const Poly& t) {
  check_form(F);
  const unsigned e = check_ideal(F, gens, &t);
  if (!in_row_space(generator_span(gens, e), t.dense(e)))
    raise(Errc::TNotInIdeal, kModule, "t = " + to_string(t, Role::T) + " is not in I_e");
  const unsigned d = static_cast<unsigned>(F.degree());
  GradedIdeal P = perp(F, d + 1);
  GradedIdeal IX = hf_points(F.vars(), points, d + 1).ideal;
  for (unsigned i = 0; i <= d; ++i)
    if (!P.slice(i).contains(IX.slice(i)))
      raise(Errc::PointsNotApolar, kModule,
            "the points' ideal is not inside F^perp in degree " + std::to_string(i));
  GradedIdeal lhs = add_principal(IX, t);
  GradedIdeal rhs = add_principal(P, t);
  IdealEqualityReport rep;
  rep.equal = true;
  for (unsigned i = 0; i <= d + 1; ++i) {
    rep.lhs_dims.push_back(lhs.slice(i).dim());
    rep.rhs_dims.push_back(rhs.slice(i).dim());
    if (!(lhs.slice(i) == rhs.slice(i))) {
      rep.equal = false;
      rep.differing_degrees.push_back(i);
    }
  }
  return rep;
}

EssentialReduction essential_vars(const Poly& F) {
  check_form(F);
  const VarSet& vars = F.vars();
  const std::size_t n = vars.size();
  Subspace k1 = kernel(catalecticant(F, 1));
  Matrix K = k1.basis();
  std::vector<bool> pivot(n, false);
  for (std::size_t r = 0; r < K.rows(); ++r)
    for (std::size_t j = 0; j < n; ++j)
      if (!K(r, j).is_zero()) {
        pivot[j] = true;
        break;
      }
  Matrix A(0, n);
  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < n; ++j) {
    if (pivot[j]) continue;
    Vector e(n);
    e[j] = FieldElement(1);
    A.append_row(e);
    kept.push_back(j);
  }
  for (std::size_t r = 0; r < K.rows(); ++r) A.append_row(K.row(r));
  const std::size_t keep = kept.size();

  // unit kernel vectors mean F simply omits those variables
  bool plain = true;
  for (std::size_t r = 0; r < K.rows() && plain; ++r) {
    std::size_t nz = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (!K(r, j).is_zero()) ++nz;
    if (nz != 1) plain = false;
  }
  VarSet full_new = plain ? vars.subset(kept).with_appended([&] {
    std::vector<std::string> rest;
    for (std::size_t j = 0; j < n; ++j)
      if (pivot[j]) rest.push_back(vars.name(j));
    return rest;
  }())
                          : VarSet::indexed("y", n);
  // x_j = Σ_i A_ij y_i
  std::vector<Poly> images;
  for (std::size_t j = 0; j < n; ++j) {
    Poly img(full_new);
    for (std::size_t i = 0; i < n; ++i)
      if (!A(i, j).is_zero()) img.add_term(Monomial::variable(n, i), A(i, j));
    images.push_back(std::move(img));
  }
  Poly G = substitute(F, full_new, images);
  std::vector<std::size_t> first(keep);
  for (std::size_t i = 0; i < keep; ++i) first[i] = i;
  VarSet reduced_vars = full_new.subset(first);
  return {A, G.restricted(reduced_vars), n - keep, full_new};
}

Poly expand_reduction(const EssentialReduction& r, const VarSet& original) {
  const std::size_t n = original.size();
  // y = A^{-T} x, so y_i = Σ_j B_ji x_j with B = A^{-1}
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = r.change(i, j);
    aug(i, n + i) = FieldElement(1);
  }
  Echelon e = row_reduce(aug);
  if (e.rank() != n || e.pivots.back() >= n) raise(Errc::InvalidInput, kModule, "coordinate change is singular");
  const std::size_t k = r.reduced.vars().size();
  std::vector<Poly> images;
  for (std::size_t i = 0; i < k; ++i) {
    Poly img(original);
    for (std::size_t j = 0; j < n; ++j) {
      const FieldElement& b = e.rref(j, n + i);  // B_ji
      if (!b.is_zero()) img.add_term(Monomial::variable(n, j), b);
    }
    images.push_back(std::move(img));
  }
  return substitute(r.reduced, original, images);
}

Poly pull_back_dual(const EssentialReduction& r, const Poly& t, const VarSet& original) {
  const std::size_t n = original.size();
  std::vector<Poly> images;
  for (std::size_t i = 0; i < t.vars().size(); ++i) {
    Poly img(original);
    for (std::size_t j = 0; j < n; ++j)
      if (!r.change(i, j).is_zero()) img.add_term(Monomial::variable(n, j), r.change(i, j));
    images.push_back(std::move(img));
  }
  return substitute(t, original, images);
}

std::size_t perp_plus_sum(const Poly& F, const Poly& t) {
  check_form(F);
  GradedIdeal I = add_principal(perp(F, static_cast<unsigned>(F.degree()) + 1), t);
  return hf(I).sum();
}

LinearComputabilityReport linear_computability_analysis(const Poly& F, std::size_t rank,
                                                        std::size_t samples_per_support, std::uint64_t seed) {
  check_form(F);
  const VarSet& vars = F.vars();
  const std::size_t n = vars.size();
  if (n > 12) raise(Errc::InvalidInput, kModule, "case analysis limited to 12 variables");
  LinearComputabilityReport rep;
  rep.rank = rank;
  for (std::size_t j = 0; j < n; ++j) {
    Poly x = Poly::variable(vars, j);
    std::size_t s = lower_bound(F, {x}, x).hf_sum;
    rep.coordinate_sums.push_back(s);
    if (s == rank) rep.coordinate_attains_rank = true;
  }
  std::mt19937_64 rng(seed);
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < n; ++j)
      if (mask & (1U << j)) support.push_back(j);
    if (support.size() < 2) continue;
    for (std::size_t k = 0; k <= samples_per_support; ++k) {
      std::vector<long> coeffs(n, 0);
      Poly t(vars);
      for (auto j : support) {
        long c = 1;
        if (k > 0) {
          do c = draw_coefficient(rng(), kCoefficientBound);
          while (c == 0);
        }
        coeffs[j] = c;
        t.add_term(Monomial::variable(n, j), FieldElement(c));
      }
      std::size_t s = perp_plus_sum(F, t);
      rep.max_sampled_sum = std::max(rep.max_sampled_sum, s);
      rep.samples.push_back({support, coeffs, s});
    }
  }
  return rep;
}

}  // namespace apolar
