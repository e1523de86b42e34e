#include "apolar/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "apolar/error.hpp"

namespace apolar {

namespace {
constexpr std::string_view kModule = "families";
constexpr int kPencilDraws = 20;

Poly dual_var(const VarSet& vars, std::size_t i, unsigned k = 1) {
  return Poly::term(vars, Monomial::variable(vars.size(), i, k), FieldElement(1));
}

// ζ_order^k inside `field` (null field only for order 1 or 2).
FieldElement zeta(const FieldRef& field, unsigned order, long k) {
  long r = ((k % static_cast<long>(order)) + order) % order;
  if (!field) return (order == 2 && r == 1) ? FieldElement(-1) : FieldElement(1);
  return FieldElement::generator(field).pow(static_cast<unsigned>(r));
}

Point zero_point(std::size_t n) { return Point(n, FieldElement(0)); }

bool all_rational(const Poly& F) {
  for (const auto& [m, c] : F.terms())
    if (!c.is_rational()) return false;
  return true;
}

void check_form(const Poly& F) {
  if (F.is_zero()) raise(Errc::ZeroForm, kModule, "the zero form has no rank");
  if (!F.is_homogeneous()) raise(Errc::InvalidInput, kModule, "form is not homogeneous");
}

// Certificate status for a family result: certified-equal when the points
// meet the engine bound, cited-upper when the rank is known, the engine bound
// reaches it and the upper bound rests on a cited argument.
void finalize(FamilyRank& r, const Poly& F, LowerBoundWitness lower, std::optional<UpperBoundWitness> upper,
              const std::string& upper_citation) {
  r.certificate = assemble_certificate(F, std::move(lower), std::move(upper));
  if (r.certificate.status == CertStatus::CertifiedEqual) return;
  if (r.exact() && r.certificate.lower.bound == r.low && !upper_citation.empty()) {
    r.certificate.status = CertStatus::CitedUpper;
    r.certificate.cited_rank = r.low;
    r.certificate.citation = upper_citation;
  }
  if (r.certificate.upper && r.certificate.upper->count() != r.high && r.exact())
    r.notes.push_back("point witness has " + std::to_string(r.certificate.upper->count()) + " points");
}

std::vector<unsigned> divisor_modes(unsigned a, unsigned e) {
  // q^a = (q^k)^(a/k) with a/k >= 2
  std::vector<unsigned> out;
  for (unsigned k = 1; k <= a; ++k)
    if (a % k == 0 && a / k >= 2) out.push_back(e * k);
  return out;
}

UniPoly dehomogenize(const Poly& h, unsigned& x1_multiplicity) {
  std::vector<Rational> c(static_cast<std::size_t>(h.degree()) + 1);
  for (const auto& [m, v] : h.terms()) c[m[0]] = v.rational();
  UniPoly f(std::move(c));
  x1_multiplicity = static_cast<unsigned>(h.degree() - std::max(f.degree(), 0));
  return f;
}

Poly homogenize(const UniPoly& f, const VarSet& vars, unsigned degree) {
  Poly p(vars);
  for (std::size_t k = 0; k < f.coeffs().size(); ++k)
    if (f.coeffs()[k] != 0)
      p.add_term(Monomial(std::vector<unsigned>{static_cast<unsigned>(k), degree - static_cast<unsigned>(k)}),
                 FieldElement(f.coeffs()[k]));
  return p;
}

FieldElement evaluate2(const Poly& h, const FieldElement& x0, const FieldElement& x1) {
  FieldElement s(0);
  for (const auto& [m, c] : h.terms()) s += c * x0.pow(m[0]) * x1.pow(m[1]);
  return s;
}

// HF of a complete intersection with generator degrees `degs`.
std::vector<long> koszul_hf(const std::vector<unsigned>& degs, unsigned upto) {
  std::vector<long> h(upto + 1, 0);
  h[0] = 1;
  for (unsigned d : degs) {
    std::vector<long> next(upto + 1, 0);
    for (unsigned i = 0; i <= upto; ++i)
      for (unsigned k = 0; k < d && i + k <= upto; ++k) next[i + k] += h[i];
    h = std::move(next);
  }
  return h;
}

struct CIShape {
  std::vector<Poly> gens;
  bool complete_intersection = false;
};

CIShape ci_shape(const Poly& F) {
  const unsigned d = static_cast<unsigned>(F.degree());
  GradedIdeal P = perp(F, d + 1);
  CIShape s{minimal_generators(P), false};
  if (s.gens.size() != F.vars().size()) return s;
  std::vector<unsigned> degs;
  for (const auto& g : s.gens) degs.push_back(static_cast<unsigned>(g.degree()));
  auto k = koszul_hf(degs, d + 1);
  HFProfile prof = hf(P);
  for (unsigned i = 0; i <= d + 1; ++i)
    if (static_cast<long>(prof.values[i]) != k[i]) return s;
  s.complete_intersection = true;
  return s;
}

FamilyRank ci_rank_impl(const Poly& F, const Poly& q, unsigned a, const CIShape* known) {
  check_form(F);
  if (a < 2) raise(Errc::HypothesisViolated, kModule, "the power of q must be at least 2, got " + std::to_string(a));
  if (q.is_zero() || !q.is_homogeneous() || q.degree() < 1 || !(q.vars() == F.vars()))
    raise(Errc::InvalidInput, kModule, "q must be a nonzero form of positive degree over F's variables");
  const unsigned e = static_cast<unsigned>(q.degree());
  const unsigned ae = a * e;
  Poly qa = q.pow(a);
  if (!apolar_action(qa, F).is_zero()) raise(Errc::NotCIShape, kModule, "q^a does not annihilate F");
  CIShape local;
  if (!known) {
    local = ci_shape(F);
    known = &local;
  }
  if (!known->complete_intersection)
    raise(Errc::NotCIShape, kModule, "F^perp is not a complete intersection");
  std::vector<Poly> lower_gens;
  std::vector<unsigned> degs;
  bool has_ae = false;
  for (const auto& g : known->gens) {
    unsigned dg = static_cast<unsigned>(g.degree());
    if (dg == ae && !has_ae) {
      has_ae = true;
      continue;
    }
    degs.push_back(dg);
    if (dg < ae) lower_gens.push_back(g);
  }
  if (!has_ae) raise(Errc::NotCIShape, kModule, "no minimal generator has degree a*deg q");
  if (!lower_gens.empty() &&
      GradedIdeal::generated_by(F.vars(), lower_gens, ae).contains(qa))
    raise(Errc::NotCIShape, kModule, "q^a is not a minimal generator of F^perp");
  std::sort(degs.begin(), degs.end());
  if (!degs.empty() && degs.front() < ae)
    raise(Errc::HypothesisViolated, kModule, "a*deg q exceeds the smallest other generator degree");

  FamilyRank r;
  r.match.tag = Family::CIperp;
  r.match.parameters = {static_cast<long>(a), static_cast<long>(e)};
  for (unsigned dg : degs) r.match.parameters.push_back(dg);
  r.match.q = q;
  r.match.citation = "complete-intersection perp (q^a, g_1..g_n), a >= 2, a*deg q <= d_1: rank = prod d_i";
  std::size_t rank = 1;
  for (unsigned dg : degs) rank *= dg;
  r.low = r.high = rank;
  LowerBoundWitness lower = lower_bound(F, {q}, q);
  if (lower.bound != rank)
    r.notes.push_back("engine lower bound " + std::to_string(lower.bound) + " differs from prod d_i");
  finalize(r, F, std::move(lower), std::nullopt,
           "smooth complete intersection of degrees d_1..d_n inside F^perp (Bertini), not constructed");
  return r;
}

std::vector<std::size_t> sorted_by_exponent(const Monomial& m) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] > 0) idx.push_back(i);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return m[x] < m[y]; });
  return idx;
}
}  // namespace

const char* to_string(Family f) {
  switch (f) {
    case Family::Binary: return "binary";
    case Family::Monomial: return "monomial";
    case Family::XaSumB: return "xa_sum_b";
    case Family::XaSumBPlusPower: return "xa_sum_b_plus_power";
    case Family::CIperp: return "ci_perp";
    case Family::X0aG: return "x0a_g";
    case Family::Vandermonde: return "vandermonde";
    case Family::None: return "none";
  }
  return "none";
}

// ---------------------------------------------------------------- binary

bool binary_squarefree(const Poly& h) {
  if (h.vars().size() != 2) raise(Errc::NotBinary, kModule, "expected a form in two variables");
  if (h.is_zero()) raise(Errc::InvalidInput, kModule, "zero form");
  if (!all_rational(h)) raise(Errc::InvalidInput, kModule, "squarefree test needs rational coefficients");
  unsigned mult = 0;
  UniPoly f = dehomogenize(h, mult);
  return mult <= 1 && squarefree_check(f);
}

SylvesterResult sylvester(const Poly& F) {
  check_form(F);
  if (!all_rational(F)) raise(Errc::InvalidInput, kModule, "binary analysis needs rational coefficients");
  const std::size_t n = F.vars().size();
  if (n < 2) raise(Errc::NotBinary, kModule, "a binary form needs two declared variables");
  std::optional<EssentialReduction> red;
  Poly G = F;
  if (n > 2) {
    red = essential_vars(F);
    if (n - red->removed > 2)
      raise(Errc::NotBinary, kModule,
            "F has " + std::to_string(n - red->removed) + " essential variables");
    std::vector<std::size_t> two{0, 1};
    G = red->reduced.embedded(red->coordinates.subset(two));
  }
  auto to_original = [&](const Poly& t) { return red ? pull_back_dual(*red, t, F.vars()) : t; };

  const unsigned d = static_cast<unsigned>(F.degree());
  std::vector<Poly> gens = minimal_generators(perp(G, d + 1));
  if (gens.size() != 2) raise(Errc::NotBinary, kModule, "F^perp is not generated by two forms");
  std::stable_sort(gens.begin(), gens.end(), [](const Poly& x, const Poly& y) { return x.degree() < y.degree(); });
  SylvesterResult r;
  r.h1 = gens[0];
  r.h2 = gens[1];
  r.d1 = static_cast<unsigned>(r.h1.degree());
  r.d2 = static_cast<unsigned>(r.h2.degree());
  r.squarefree_h1 = binary_squarefree(r.h1);
  if (r.d1 == r.d2 && !r.squarefree_h1) {
    Poly a = r.h1, b = r.h2;
    for (int k = 1; k < kPencilDraws; ++k) {
      Poly cand = k == 1 ? b : a + b * FieldElement(static_cast<long>(k - 1));
      if (binary_squarefree(cand)) {
        r.h1 = cand;
        r.h2 = k == 1 ? a : b;
        r.squarefree_h1 = true;
        break;
      }
    }
    if (!r.squarefree_h1)
      r.notes.push_back("no squarefree member among " + std::to_string(kPencilDraws) +
                        " pencil members; using rank d2");
  }
  r.rank = r.squarefree_h1 ? r.d1 : r.d2;

  const VarSet& gv = G.vars();
  if (r.squarefree_h1) {
    // linear t = αX0 + βX1 not dividing h1, i.e. h1(β, -α) != 0
    const long cands[][2] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}, {1, -2}, {2, -1}};
    for (auto [al, be] : cands) {
      if (evaluate2(r.h1, FieldElement(be), FieldElement(-al)).is_zero()) continue;
      Poly t = dual_var(gv, 0) * FieldElement(al) + dual_var(gv, 1) * FieldElement(be);
      Poly tt = to_original(t);
      r.lower = lower_bound(F, {tt}, tt);
      break;
    }
    // more than ten linear factors can exhaust the table
    for (long k = 4; !r.lower && k < static_cast<long>(r.d1) + 8; ++k) {
      if (evaluate2(r.h1, FieldElement(k), FieldElement(-1)).is_zero()) continue;
      Poly t = dual_var(gv, 0) + dual_var(gv, 1) * FieldElement(k);
      Poly tt = to_original(t);
      r.lower = lower_bound(F, {tt}, tt);
    }
  } else {
    unsigned mult = 0;
    UniPoly f = dehomogenize(r.h1, mult);
    UniPoly rad(std::vector<Rational>{Rational(1)});
    if (f.degree() > 0) {
      UniPoly g = gcd(f, f.derivative());
      if (g.degree() > 0) rad = divmod(g, gcd(g, g.derivative())).first.monic();
    }
    const unsigned rd = static_cast<unsigned>(std::max(rad.degree(), 0));
    Poly t = homogenize(rad, gv, rd);
    if (mult >= 2) t = t * dual_var(gv, 1);
    if (t.degree() >= 1 && static_cast<unsigned>(t.degree()) <= d) {
      Poly tt = to_original(t);
      r.lower = lower_bound(F, {tt}, tt);
    }
  }
  if (r.lower && r.lower->bound != r.rank)
    r.notes.push_back("engine lower bound " + std::to_string(r.lower->bound) + " is below the rank");
  return r;
}

// ---------------------------------------------------------------- monomials

std::vector<Point> monomial_points(const Poly& F, FieldRef& field) {
  if (F.size() != 1) raise(Errc::NotMonomial, kModule, "expected a single term");
  const Monomial& m = F.leading_monomial();
  auto idx = sorted_by_exponent(m);
  const std::size_t n = m.size();
  unsigned L = 1;
  for (std::size_t k = 1; k < idx.size(); ++k) L = std::lcm(L, m[idx[k]] + 1);
  field = cyclotomic_field(L);
  std::vector<Point> pts;
  std::vector<unsigned> j(idx.size(), 0);
  for (;;) {
    Point p = zero_point(n);
    p[idx[0]] = FieldElement(1);
    for (std::size_t k = 1; k < idx.size(); ++k)
      p[idx[k]] = zeta(field, L, static_cast<long>(j[k] * (L / (m[idx[k]] + 1))));
    pts.push_back(std::move(p));
    std::size_t k = 1;
    for (; k < idx.size(); ++k) {
      if (++j[k] <= m[idx[k]]) break;
      j[k] = 0;
    }
    if (k >= idx.size()) break;
  }
  return pts;
}

FamilyRank monomial_rank(const Poly& F, unsigned e) {
  check_form(F);
  if (F.size() != 1) raise(Errc::NotMonomial, kModule, "'" + to_string(F) + "' is not a monomial");
  const Monomial& m = F.leading_monomial();
  auto idx = sorted_by_exponent(m);
  const unsigned a0 = m[idx[0]];
  if (e == 0) e = 1;
  if (e > (a0 + 1) / 2)
    raise(Errc::EOutOfRange, kModule,
          "e = " + std::to_string(e) + " outside 1.." + std::to_string((a0 + 1) / 2) + " for least exponent " +
              std::to_string(a0));
  FamilyRank r;
  r.match.tag = Family::Monomial;
  r.match.order = idx;
  for (auto i : idx) r.match.parameters.push_back(m[i]);
  r.match.citation = "monomial x0^a0...xn^an, a0 least: rank = prod_{i>=1}(a_i+1)";
  std::size_t rank = 1;
  for (std::size_t k = 1; k < idx.size(); ++k) rank *= m[idx[k]] + 1;
  r.low = r.high = rank;
  Poly t = dual_var(F.vars(), idx[0], e);
  LowerBoundWitness lower = lower_bound(F, {t}, t);
  FieldRef field;
  auto pts = monomial_points(F, field);
  finalize(r, F, std::move(lower), upper_bound_from_points(F, pts), "");
  return r;
}

// ---------------------------------------------------------------- x0^a (x1^b + ... + xn^b)

Poly xa_sum_b_form(unsigned a, unsigned b, unsigned n, bool plus_power) {
  if (a < 1 || b < 2 || n < 2)
    raise(Errc::ParameterOutOfRange, kModule,
          "need a >= 1, b >= 2, n >= 2; got (" + std::to_string(a) + "," + std::to_string(b) + "," +
              std::to_string(n) + ")");
  VarSet vars = VarSet::indexed("x", n + 1);
  Poly F(vars);
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<unsigned> ex(n + 1, 0);
    ex[0] = a;
    ex[i] = b;
    F.add_term(Monomial(ex), FieldElement(1));
  }
  if (plus_power) F.add_term(Monomial::variable(n + 1, 0, a + b), FieldElement(1));
  return F;
}

namespace {
// Points on the coordinate lines through (1,0,...,0): X0 = 1, X_i = s with
// s^b = 1/c_i and Σ c_i = 0, so X0^b - Σ c_i X_i^b and the X_iX_j lie in F^perp
// whenever b > a. The c_i are roots of unity summing to zero.
std::vector<Point> line_points(unsigned b, const std::vector<std::size_t>& order, std::size_t nvars,
                               FieldRef& field) {
  const unsigned n = static_cast<unsigned>(order.size() - 1);
  unsigned M = 2;
  std::vector<unsigned> g(n);
  if (n % 2 == 0) {
    for (unsigned i = 0; i < n; ++i) g[i] = i % 2;  // c = 1, -1, 1, -1, ...
  } else {
    M = n == 3 ? 3 : 6;
    const unsigned step = M / 3;  // 1, ω, ω²
    for (unsigned i = 0; i < 3; ++i) g[i] = i * step;
    for (unsigned i = 3; i < n; ++i) g[i] = (i % 2 == 1) ? 0 : 3;  // then 1, -1 pairs
  }
  const unsigned L = b * M;
  field = cyclotomic_field(L);
  std::vector<Point> pts;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < b; ++j) {
      Point p = zero_point(nvars);
      p[order[0]] = FieldElement(1);
      p[order[i + 1]] = zeta(field, L, static_cast<long>(M * j) - static_cast<long>(g[i]));
      pts.push_back(std::move(p));
    }
  return pts;
}

// a >= b: each x0^a x_i^b decomposed with X_i = 1, X0 ∈ μ_{a+1}.
std::vector<Point> monomial_line_points(unsigned a, const std::vector<std::size_t>& order, std::size_t nvars,
                                        FieldRef& field) {
  const unsigned L = a + 1;
  field = cyclotomic_field(L);
  std::vector<Point> pts;
  for (std::size_t i = 1; i < order.size(); ++i)
    for (unsigned j = 0; j < L; ++j) {
      Point p = zero_point(nvars);
      p[order[0]] = zeta(field, L, j);
      p[order[i]] = FieldElement(1);
      pts.push_back(std::move(p));
    }
  return pts;
}
}  // namespace

FamilyRank xa_sum_b_rank(const Poly& F, const FamilyMatch& m, const FamilyOptions& opts) {
  check_form(F);
  if ((m.tag != Family::XaSumB && m.tag != Family::XaSumBPlusPower) || m.parameters.size() != 3 ||
      m.order.size() != static_cast<std::size_t>(m.parameters[2]) + 1)
    raise(Errc::InvalidInput, kModule, "match is not an x0^a(x1^b+...+xn^b) match");
  const unsigned a = static_cast<unsigned>(m.parameters[0]);
  const unsigned b = static_cast<unsigned>(m.parameters[1]);
  const unsigned n = static_cast<unsigned>(m.parameters[2]);
  const bool plus = m.tag == Family::XaSumBPlusPower;
  if (a < 1 || b < 2 || n < 2) raise(Errc::ParameterOutOfRange, kModule, "need a >= 1, b >= 2, n >= 2");
  const VarSet& vars = F.vars();
  const unsigned e = opts.e == 0 ? 1 : opts.e;

  FamilyRank r;
  r.match = m;
  const std::string form = plus ? "x0^a(x0^b+x1^b+...+xn^b)" : "x0^a(x1^b+...+xn^b)";
  std::optional<LowerBoundWitness> lower;
  std::optional<UpperBoundWitness> upper;
  std::string upper_citation;
  FieldRef field;

  if (n == 2 && a + 1 < b && plus) {
    // X0∘G keeps the x0^(a+b-1) term, so t = X0 only reaches 2b-1
    if (e != 1) raise(Errc::EOutOfRange, kModule, "only e = 1 is available here");
    Poly t = dual_var(vars, m.order[0]);
    lower = lower_bound(F, {t}, t);
    r.low = lower->bound;
    r.high = 2 * b;
    r.match.citation = form + ", n = 2, a+1 < b: at most 2b points on X1X2 = 0";
    r.notes.push_back("t = X0 gives " + std::to_string(lower->bound) + ", short of 2b; bounds only");
  } else if (n == 2 && a + 1 <= b && !plus) {
    // rank 2b, computed by t = X0^e for 2e <= a+1
    if (2 * e > a + 1)
      raise(Errc::EOutOfRange, kModule, "this region needs 2e <= a+1, got e = " + std::to_string(e));
    r.low = r.high = 2 * b;
    r.match.citation = form + ", n = 2, a+1 <= b: rank 2b";
    Poly t = dual_var(vars, m.order[0], e);
    lower = lower_bound(F, {t}, t);
    upper = upper_bound_from_points(F, line_points(b, m.order, vars.size(), field));
  } else if (a + 1 >= b) {
    // rank (a+1)n, computed by I = (X1^e..Xn^e) and a general t, 2e <= b
    if (2 * e > b)
      raise(Errc::EOutOfRange, kModule, "this region needs 2e <= b, got e = " + std::to_string(e));
    r.low = r.high = static_cast<std::size_t>(a + 1) * n;
    r.match.citation = form + ", a+1 >= b: rank (a+1)n";
    std::vector<Poly> gens;
    for (unsigned i = 1; i <= n; ++i) gens.push_back(dual_var(vars, m.order[i], e));
    lower = lower_bound_generic(F, gens, opts.seed);
    if (plus) {
      upper_citation = "(a+1)n points on the lines X_iX_j = 0 from a general pencil member (Bertini)";
    } else {
      auto pts = a >= b ? monomial_line_points(a, m.order, vars.size(), field)
                        : line_points(b, m.order, vars.size(), field);
      upper = upper_bound_from_points(F, pts);
    }
  } else {
    // n >= 3, a+1 < b; the engine reaches bn-n+2 with t = X0
    if (e != 1) raise(Errc::EOutOfRange, kModule, "only e = 1 is available for n >= 3, a+1 < b");
    Poly t = dual_var(vars, m.order[0]);
    lower = lower_bound(F, {t}, t);
    if (plus) {
      r.low = lower->bound;
      r.high = static_cast<std::size_t>(b) * n + 1;
      r.match.citation = form + ", n >= 3, a+1 < b: bn for the sum plus one for x0^(a+b)";
      r.notes.push_back("outside the certified families; bounds only");
    } else {
      r.low = static_cast<std::size_t>(b) * n - n + 3;
      r.high = static_cast<std::size_t>(b) * n;
      r.lower_source = "counting argument on the lines X_iX_j = 0 (rank > bn-n+2)";
      r.match.citation = n == 3 ? form + ", n = 3, a+1 <= b: rank 3b"
                                : form + ", n >= 3, a+1 <= b: bn-n+3 <= rank <= bn";
      upper = upper_bound_from_points(F, line_points(b, m.order, vars.size(), field));
    }
  }
  finalize(r, F, std::move(*lower), std::move(upper), upper_citation);
  return r;
}

FamilyRank xa_sum_b_rank(unsigned a, unsigned b, unsigned n, bool plus_power, const FamilyOptions& opts) {
  Poly F = xa_sum_b_form(a, b, n, plus_power);
  FamilyMatch m;
  m.tag = plus_power ? Family::XaSumBPlusPower : Family::XaSumB;
  m.parameters = {static_cast<long>(a), static_cast<long>(b), static_cast<long>(n)};
  for (std::size_t i = 0; i <= n; ++i) m.order.push_back(i);
  return xa_sum_b_rank(F, m, opts);
}

// ---------------------------------------------------------------- complete intersections

FamilyRank ci_rank(const Poly& F, const Poly& q, unsigned a) { return ci_rank_impl(F, q, a, nullptr); }

std::optional<Poly> perfect_power_root(const Poly& g, unsigned a) {
  if (g.is_zero() || !g.is_homogeneous() || a == 0) return std::nullopt;
  if (a == 1) return g.monic();
  const unsigned dg = static_cast<unsigned>(g.degree());
  if (dg % a != 0) return std::nullopt;
  Poly target = g.monic();
  const Monomial& lm = target.leading_monomial();
  std::vector<unsigned> ex(lm.size());
  for (std::size_t i = 0; i < lm.size(); ++i) {
    if (lm[i] % a != 0) return std::nullopt;
    ex[i] = lm[i] / a;
  }
  Monomial m0(ex);
  Monomial lead_pow = Monomial::one(lm.size());
  for (unsigned k = 1; k < a; ++k) lead_pow = lead_pow * m0;
  Poly r = Poly::term(g.vars(), m0, FieldElement(1));
  const std::size_t limit = monomial_count(lm.size(), dg / a) + 1;
  for (std::size_t it = 0; it < limit; ++it) {
    Poly rem = target - r.pow(a);
    if (rem.is_zero()) return r;
    const Monomial& mu = rem.leading_monomial();
    if (!lead_pow.divides(mu)) return std::nullopt;
    Monomial nu = mu / lead_pow;
    if (!TermOrder{}(m0, nu)) return std::nullopt;  // must come after m0
    r.add_term(nu, rem.leading_coefficient() / FieldElement(static_cast<long>(a)));
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- Vandermonde

Poly vandermonde_form(unsigned n) {
  if (n < 2) raise(Errc::NOutOfRange, kModule, "n must be at least 2");
  VarSet vars = VarSet::indexed("x", n, 1);
  Poly V = Poly::constant(vars, FieldElement(1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) V = V * (Poly::variable(vars, i) - Poly::variable(vars, j));
  return V;
}

std::vector<Poly> elementary_symmetric(const VarSet& vars) {
  const std::size_t n = vars.size();
  // e_k via the generating product Π(1 + x_i u), tracked degree by degree
  std::vector<Poly> e(n + 1, Poly(vars));
  e[0] = Poly::constant(vars, FieldElement(1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k >= 1; --k) e[k] += e[k - 1] * Poly::variable(vars, i);
  e.erase(e.begin());
  return e;
}

namespace {
FamilyRank vandermonde_on(const Poly& F, const FamilyMatch& m, const FamilyOptions& opts) {
  const unsigned n = static_cast<unsigned>(m.parameters.at(0));
  if (n < 3 || n > 6) raise(Errc::NOutOfRange, kModule, "Vandermonde certificates cover 3 <= n <= 6");
  const VarSet& vars = F.vars();
  std::vector<Poly> sig = elementary_symmetric(vars.subset(m.order));
  for (std::size_t k = 0; k < sig.size(); ++k)
    if (!apolar_action(sig[k].embedded(vars), F).is_zero())
      raise(Errc::InvalidInput, kModule, "sigma_" + std::to_string(k + 1) + " does not annihilate V_n");
  FamilyRank r;
  r.match = m;
  r.match.citation = "Vandermonde determinant V_n: rank (n-1)!, computed by X_1";
  std::size_t fact = 1;
  for (unsigned k = 2; k < n; ++k) fact *= k;
  r.low = r.high = fact;
  Poly t = dual_var(vars, m.order[0]);
  LowerBoundWitness lower = lower_bound(F, {t}, t);
  std::optional<UpperBoundWitness> upper;
  if (n <= 4 || opts.vandermonde_large_points) {
    // (1, ζ^π(1), ..., ζ^π(n-1)): the roots of t^(n-1)+...+t+1 in every order
    FieldRef field = cyclotomic_field(n);
    std::vector<unsigned> perm(n - 1);
    std::iota(perm.begin(), perm.end(), 1U);
    std::vector<Point> pts;
    do {
      Point p = zero_point(vars.size());
      p[m.order[0]] = FieldElement(1);
      for (unsigned k = 0; k + 1 < n; ++k) p[m.order[k + 1]] = zeta(field, n, perm[k]);
      pts.push_back(std::move(p));
    } while (std::next_permutation(perm.begin(), perm.end()));
    upper = upper_bound_from_points(F, pts);
  }
  finalize(r, F, std::move(lower), std::move(upper),
           upper ? "" : "(n-1)! points cut out by sigma_1..sigma_(n-1) (not expanded for n >= 5)");
  return r;
}
}  // namespace

FamilyRank vandermonde(unsigned n, const FamilyOptions& opts) {
  if (n < 3 || n > 6) raise(Errc::NOutOfRange, kModule, "Vandermonde certificates cover 3 <= n <= 6, got " + std::to_string(n));
  Poly V = vandermonde_form(n);
  FamilyMatch m;
  m.tag = Family::Vandermonde;
  m.parameters = {static_cast<long>(n)};
  for (std::size_t i = 0; i < n; ++i) m.order.push_back(i);
  return vandermonde_on(V, m, opts);
}

// ---------------------------------------------------------------- classification

namespace {
std::optional<FamilyMatch> match_xa_sum_b(const Poly& F) {
  if (F.size() < 2) return std::nullopt;
  const std::size_t nv = F.vars().size();
  const FieldElement c = F.terms().begin()->second;
  // the common variable
  std::vector<std::size_t> common;
  for (std::size_t k = 0; k < nv; ++k) {
    bool all = true;
    for (const auto& [m, v] : F.terms())
      if (m[k] == 0) all = false;
    if (all) common.push_back(k);
  }
  if (common.size() != 1) return std::nullopt;
  const std::size_t k = common[0];
  long a = -1, b = -1;
  bool plus = false;
  std::vector<std::size_t> others;
  for (const auto& [m, v] : F.terms()) {
    if (!(v == c)) return std::nullopt;
    std::vector<std::size_t> supp;
    for (std::size_t i = 0; i < nv; ++i)
      if (m[i] > 0) supp.push_back(i);
    if (supp.size() == 1) {
      if (plus) return std::nullopt;
      plus = true;
      continue;
    }
    if (supp.size() != 2) return std::nullopt;
    std::size_t o = supp[0] == k ? supp[1] : supp[0];
    if (a == -1) {
      a = m[k];
      b = m[o];
    }
    if (static_cast<long>(m[k]) != a || static_cast<long>(m[o]) != b) return std::nullopt;
    others.push_back(o);
  }
  if (others.size() < 2 || a < 1 || b < 2) return std::nullopt;
  if (plus) {
    Monomial pure = Monomial::variable(nv, k, static_cast<unsigned>(a + b));
    if (F.coefficient(pure).is_zero()) return std::nullopt;
  }
  std::sort(others.begin(), others.end());
  FamilyMatch m;
  m.tag = plus ? Family::XaSumBPlusPower : Family::XaSumB;
  m.parameters = {a, b, static_cast<long>(others.size())};
  m.order.push_back(k);
  m.order.insert(m.order.end(), others.begin(), others.end());
  return m;
}

std::optional<FamilyMatch> match_vandermonde(const Poly& F) {
  auto supp = F.support();
  const std::size_t n = supp.size();
  if (n < 3 || n > 6) return std::nullopt;
  if (static_cast<std::size_t>(F.degree()) != n * (n - 1) / 2) return std::nullopt;
  const VarSet& vars = F.vars();
  Poly V = Poly::constant(vars, FieldElement(1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      V = V * (Poly::variable(vars, supp[i]) - Poly::variable(vars, supp[j]));
  int sign = 0;
  if (F == V) sign = 1;
  else if (F == -V) sign = -1;
  if (sign == 0) return std::nullopt;
  FamilyMatch m;
  m.tag = Family::Vandermonde;
  m.parameters = {static_cast<long>(n)};
  m.order = supp;
  m.sign = sign;
  return m;
}

std::optional<FamilyMatch> match_x0a_g(const Poly& F, const CIShape& shape) {
  const std::size_t nv = F.vars().size();
  for (std::size_t k = 0; k < nv; ++k) {
    unsigned a = F.terms().begin()->first[k];
    if (a == 0) continue;
    bool same = true, other_vars = false;
    for (const auto& [m, v] : F.terms()) {
      if (m[k] != a) same = false;
      if (m.degree() > a) other_vars = true;
    }
    if (!same || !other_vars) continue;
    try {
      FamilyRank r = ci_rank_impl(F, dual_var(F.vars(), k), a + 1, &shape);
      FamilyMatch m = r.match;
      m.tag = Family::X0aG;
      m.parameters.erase(m.parameters.begin(), m.parameters.begin() + 2);
      m.parameters.insert(m.parameters.begin(), static_cast<long>(a));
      m.order = {k};
      return m;
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

std::optional<FamilyMatch> match_ci(const Poly& F, const CIShape& shape) {
  if (!shape.complete_intersection) return std::nullopt;
  int low = shape.gens.front().degree();
  for (const auto& g : shape.gens) low = std::min(low, g.degree());
  for (const auto& g : shape.gens) {
    if (g.degree() != low || !all_rational(g)) continue;
    for (unsigned a = static_cast<unsigned>(low); a >= 2; --a) {
      if (static_cast<unsigned>(low) % a != 0) continue;
      auto q = perfect_power_root(g, a);
      if (!q) continue;
      try {
        return ci_rank_impl(F, *q, a, &shape).match;
      } catch (const Error&) {
      }
    }
  }
  return std::nullopt;
}
}  // namespace

FamilyMatch classify(const Poly& F) {
  check_form(F);
  FamilyMatch none;
  none.citation = "no family matched";
  auto supp = F.support();
  // work on the occurring variables, report indices into F.vars()
  Poly Fs = F.restricted(F.vars().subset(supp));
  auto lift = [&](FamilyMatch m) {
    for (auto& i : m.order) i = supp[i];
    if (m.q) m.q = m.q->embedded(F.vars());
    return m;
  };
  if (Fs.size() == 1) {
    const Monomial& mono = Fs.leading_monomial();
    FamilyMatch m;
    m.tag = Family::Monomial;
    m.order = sorted_by_exponent(mono);
    for (auto i : m.order) m.parameters.push_back(mono[i]);
    m.citation = "monomial x0^a0...xn^an, a0 least: rank = prod_{i>=1}(a_i+1)";
    return lift(m);
  }
  if (auto m = match_xa_sum_b(Fs)) {
    m->citation = m->tag == Family::XaSumB ? "x0^a(x1^b+...+xn^b)" : "x0^a(x0^b+x1^b+...+xn^b)";
    return lift(*m);
  }
  if (auto m = match_vandermonde(Fs)) {
    m->citation = "Vandermonde determinant V_n: rank (n-1)!, computed by X_1";
    return lift(*m);
  }
  const bool rational = all_rational(Fs);
  if (rational && (Fs.vars().size() <= 2 || Fs.vars().size() - essential_vars(Fs).removed <= 2)) {
    FamilyMatch m;
    m.tag = Family::Binary;
    m.parameters = {Fs.degree()};
    m.citation = "Sylvester: rank d1 if h1 is squarefree, else d2";
    return m;
  }
  if (!rational) return none;
  CIShape shape = ci_shape(Fs);
  if (shape.complete_intersection) {
    if (auto m = match_x0a_g(Fs, shape)) {
      m->citation = "x_k^a G with G^perp a complete intersection in degrees >= a+1";
      return lift(*m);
    }
    if (auto m = match_ci(Fs, shape)) return lift(*m);
  }
  return none;
}

std::vector<unsigned> admissible_e(const Poly& F, const FamilyMatch& m) {
  std::vector<unsigned> out;
  switch (m.tag) {
    case Family::Monomial: {
      const unsigned a0 = static_cast<unsigned>(m.parameters.front());
      for (unsigned e = 1; 2 * e <= a0 + 1; ++e) out.push_back(e);
      break;
    }
    case Family::Binary: {
      SylvesterResult s = sylvester(F);
      if (s.lower && s.lower->bound == s.rank) out.push_back(s.lower->e);
      break;
    }
    case Family::XaSumB:
    case Family::XaSumBPlusPower: {
      const long a = m.parameters[0], b = m.parameters[1], n = m.parameters[2];
      const bool plus = m.tag == Family::XaSumBPlusPower;
      if (n == 2 && a + 1 <= b && !plus) {
        for (long e = 1; 2 * e <= a + 1; ++e) out.push_back(static_cast<unsigned>(e));
      } else if (a + 1 >= b) {
        for (long e = 1; 2 * e <= b; ++e) out.push_back(static_cast<unsigned>(e));
      } else {
        out.push_back(1);
      }
      break;
    }
    case Family::CIperp:
      out = divisor_modes(static_cast<unsigned>(m.parameters[0]), static_cast<unsigned>(m.parameters[1]));
      break;
    case Family::X0aG:
      out = divisor_modes(static_cast<unsigned>(m.parameters[0]) + 1, 1);
      break;
    case Family::Vandermonde:
      out.push_back(1);
      break;
    case Family::None:
      break;
  }
  return out;
}

namespace {
FamilyRank none_bounds(const Poly& F, const FamilyMatch& m, const FamilyOptions& opts) {
  FamilyRank r;
  r.match = m;
  const VarSet& vars = F.vars();
  std::optional<LowerBoundWitness> best;
  std::vector<Poly> all;
  for (auto j : F.support()) {
    Poly t = dual_var(vars, j);
    all.push_back(t);
    LowerBoundWitness w = lower_bound(F, {t}, t);
    if (!best || w.bound > best->bound) best = std::move(w);
  }
  if (all.size() > 1) {
    LowerBoundWitness w = lower_bound_generic(F, all, opts.seed);
    if (w.bound > best->bound) best = std::move(w);
  }
  std::size_t upper = 0;
  for (const auto& [mono, c] : F.terms()) {
    auto idx = sorted_by_exponent(mono);
    std::size_t p = 1;
    for (std::size_t k = 1; k < idx.size(); ++k) p *= mono[idx[k]] + 1;
    upper += p;
  }
  r.low = best->bound;
  r.high = std::max(upper, r.low);
  r.match.citation = "lower bound by the engine; upper bound = sum of the monomial ranks of the terms";
  r.notes.push_back("no family matched; bounds only");
  finalize(r, F, std::move(*best), std::nullopt, r.exact() ? "sum of monomial ranks of the terms" : "");
  return r;
}
}  // namespace

FamilyRank certify_family(const Poly& F, const FamilyMatch& m, const FamilyOptions& opts) {
  check_form(F);
  switch (m.tag) {
    case Family::Monomial:
      return monomial_rank(F, opts.e);
    case Family::XaSumB:
    case Family::XaSumBPlusPower:
      return xa_sum_b_rank(F, m, opts);
    case Family::Vandermonde: {
      if (opts.e > 1) raise(Errc::EOutOfRange, kModule, "Vandermonde certificates use e = 1");
      return vandermonde_on(F, m, opts);
    }
    case Family::CIperp:
    case Family::X0aG: {
      unsigned a = static_cast<unsigned>(m.parameters[0]);
      Poly q = *m.q;
      if (m.tag == Family::X0aG) a += 1;
      const unsigned e0 = static_cast<unsigned>(q.degree());
      if (opts.e != 0 && opts.e != e0) {
        if (opts.e % e0 != 0 || a % (opts.e / e0) != 0 || a / (opts.e / e0) < 2)
          raise(Errc::EOutOfRange, kModule, "e must be deg q times a divisor k of a with a/k >= 2");
        const unsigned k = opts.e / e0;
        q = q.pow(k);
        a /= k;
      }
      FamilyRank r = ci_rank(F, q, a);
      FamilyMatch keep = m;
      keep.citation = r.match.citation;
      r.match = keep;
      return r;
    }
    case Family::Binary: {
      SylvesterResult s = sylvester(F);
      FamilyRank r;
      r.match = m;
      r.match.citation = "Sylvester: rank d1 if h1 is squarefree, else d2";
      r.low = r.high = s.rank;
      r.notes = s.notes;
      if (opts.e != 0 && (!s.lower || s.lower->e != opts.e))
        raise(Errc::EOutOfRange, kModule, "the binary certificate uses e = " +
                                              std::to_string(s.lower ? s.lower->e : 1));
      LowerBoundWitness lower = s.lower ? *s.lower : [&] {
        Poly t = dual_var(F.vars(), F.support().front());
        return lower_bound(F, {t}, t);
      }();
      if (lower.bound != s.rank) r.lower_source = "Sylvester's theorem";
      finalize(r, F, std::move(lower), std::nullopt, "Sylvester: roots of the squarefree generator");
      return r;
    }
    case Family::None:
      return none_bounds(F, m, opts);
  }
  return none_bounds(F, m, opts);
}

FamilyRank rank_form(const Poly& F, const FamilyOptions& opts) {
  check_form(F);
  auto supp = F.support();
  Poly Fs = F.restricted(F.vars().subset(supp));
  FamilyMatch m = classify(Fs);
  return certify_family(Fs, m, opts);
}

}  // namespace apolar
