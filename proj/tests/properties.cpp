#include "properties.hpp"

#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "apolar/bounds.hpp"
#include "oracle.hpp"

namespace props {

using namespace apolar;

namespace {
using Rng = std::mt19937_64;

long pick(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

long nonzero(Rng& rng, long bound) {
  long v = 0;
  while (v == 0) v = pick(rng, -bound, bound);
  return v;
}

Monomial random_monomial(Rng& rng, std::size_t n, unsigned d) {
  std::vector<unsigned> e(n, 0);
  for (unsigned k = 0; k < d; ++k) ++e[static_cast<std::size_t>(pick(rng, 0, static_cast<long>(n) - 1))];
  return Monomial(e);
}

Poly random_form(Rng& rng, const VarSet& vars, unsigned d, int terms, long bound = 5) {
  Poly p(vars);
  while (p.is_zero())
    for (int k = 0; k < terms; ++k) p.add_term(random_monomial(rng, vars.size(), d), FieldElement(nonzero(rng, bound)));
  return p;
}

FieldElement eval(const Poly& g, const std::vector<FieldElement>& a) {
  FieldElement s(0);
  for (const auto& [m, c] : g.terms()) {
    FieldElement t = c;
    for (std::size_t i = 0; i < m.size(); ++i) t *= a[i].pow(m[i]);
    s += t;
  }
  return s;
}

// Runs body `cases` times; body returns an empty string on success.
Outcome drive(std::string name, std::size_t cases, std::uint64_t seed, const std::function<std::string(Rng&)>& body) {
  Outcome out{std::move(name), cases, 0, {}};
  Rng rng(seed);
  for (std::size_t k = 0; k < cases; ++k) {
    std::string msg;
    try {
      msg = body(rng);
    } catch (const std::exception& e) {
      msg = std::string("exception: ") + e.what();
    }
    if (!msg.empty()) {
      if (out.failures++ == 0) out.first_failure = "case " + std::to_string(k) + ": " + msg;
    }
  }
  return out;
}
}  // namespace

Outcome contraction(std::size_t cases, std::uint64_t seed) {
  return drive("apolarity contraction g∘L^d", cases, seed, [](Rng& rng) -> std::string {
    const auto n = static_cast<std::size_t>(pick(rng, 1, 4));
    const auto d = static_cast<unsigned>(pick(rng, 1, 6));
    const auto delta = static_cast<unsigned>(pick(rng, 0, d));
    VarSet X = VarSet::indexed("x", n);
    LinearForm L{X, {}};
    for (std::size_t i = 0; i < n; ++i) L.coeffs.emplace_back(pick(rng, -3, 3));
    if (std::all_of(L.coeffs.begin(), L.coeffs.end(), [](const FieldElement& c) { return c.is_zero(); }))
      L.coeffs[0] = FieldElement(1);
    Poly g = random_form(rng, X, delta, static_cast<int>(pick(rng, 1, 4)));
    Poly lhs = apolar_action(g, power_of_linear(L, d));
    Rational scale(factorial(d), factorial(d - delta));
    Poly rhs = power_of_linear(L, d - delta) * (FieldElement(scale) * eval(g, L.coeffs));
    if (!(lhs == rhs)) return "library identity fails for " + to_string(g) + " d=" + std::to_string(d) + " lhs " + to_string(lhs) + " rhs " + to_string(rhs);
    oracle::OPoly o = oracle::act(oracle::from(g), oracle::power(oracle::from(L.to_poly()), static_cast<int>(d), n));
    if (!oracle::same(o, lhs)) return "oracle disagrees for " + to_string(g);
    return {};
  });
}

Outcome bilinearity(std::size_t cases, std::uint64_t seed) {
  return drive("bilinearity", cases, seed, [](Rng& rng) -> std::string {
    const auto n = static_cast<std::size_t>(pick(rng, 1, 4));
    const auto d = static_cast<unsigned>(pick(rng, 0, 5));
    const auto k = static_cast<unsigned>(pick(rng, 0, d));
    VarSet X = VarSet::indexed("x", n);
    Poly F1 = random_form(rng, X, d, 3), F2 = random_form(rng, X, d, 3);
    Poly g1 = random_form(rng, X, k, 2), g2 = random_form(rng, X, k, 2);
    FieldElement a(Rational(pick(rng, -7, 7), static_cast<unsigned long>(pick(rng, 1, 5))));
    FieldElement b(pick(rng, -7, 7));
    Poly left = apolar_action(g1 * a + g2 * b, F1);
    Poly right = apolar_action(g1, F1) * a + apolar_action(g2, F1) * b;
    if (!(left == right)) return "linearity in g " + to_string(left) + " vs " + to_string(right) + " g1 " + to_string(g1) + " g2 " + to_string(g2) + " F1 " + to_string(F1) + " a " + a.to_string() + " b " + b.to_string();
    left = apolar_action(g1, F1 * a + F2 * b);
    right = apolar_action(g1, F1) * a + apolar_action(g1, F2) * b;
    if (!(left == right)) return "linearity in F";
    return {};
  });
}

Outcome composition(std::size_t cases, std::uint64_t seed) {
  return drive("composition (gh)∘F = g∘(h∘F)", cases, seed, [](Rng& rng) -> std::string {
    const auto n = static_cast<std::size_t>(pick(rng, 1, 4));
    const auto d = static_cast<unsigned>(pick(rng, 0, 6));
    const auto p = static_cast<unsigned>(pick(rng, 0, d));
    const auto q = static_cast<unsigned>(pick(rng, 0, d - p));
    VarSet X = VarSet::indexed("x", n);
    Poly F = random_form(rng, X, d, 4), g = random_form(rng, X, p, 2), h = random_form(rng, X, q, 2);
    Poly lhs = apolar_action(g * h, F);
    if (!(lhs == apolar_action(g, apolar_action(h, F)))) return "composition fails";
    if (!oracle::same(oracle::act(oracle::mul(oracle::from(g), oracle::from(h)), oracle::from(F)), lhs))
      return "oracle disagrees";
    return {};
  });
}

Outcome gorenstein_symmetry(std::size_t cases, std::uint64_t seed) {
  return drive("Gorenstein HF symmetry", cases, seed, [](Rng& rng) -> std::string {
    const auto n = static_cast<std::size_t>(pick(rng, 1, 4));
    const auto d = static_cast<unsigned>(pick(rng, 1, n >= 4 ? 4 : 5));
    VarSet X = VarSet::indexed("x", n);
    Poly F = random_form(rng, X, d, static_cast<int>(pick(rng, 1, 5)));
    HFProfile h = hf(perp(F, d + 1));
    for (unsigned i = 0; i <= d; ++i)
      if (h.values[i] != h.values[d - i]) return "asymmetric for " + to_string(F);
    if (h.values[d + 1] != 0) return "nonzero above the socle degree";
    auto o = oracle::hf_perp(oracle::from(F), n);
    if (!std::equal(o.begin(), o.end(), h.values.begin())) return "oracle HF differs for " + to_string(F);
    return {};
  });
}

Outcome colon_two_ways(std::size_t cases, std::uint64_t seed) {
  return drive("F^perp : (g) = (g∘F)^perp", cases, seed, [](Rng& rng) -> std::string {
    const auto n = static_cast<std::size_t>(pick(rng, 1, 3));
    const auto d = static_cast<unsigned>(pick(rng, 1, 5));
    const auto e = static_cast<unsigned>(pick(rng, 1, d));
    VarSet X = VarSet::indexed("x", n);
    Poly F = random_form(rng, X, d, 3);
    Poly g = pick(rng, 0, 2) == 0 ? Poly::variable(X, static_cast<std::size_t>(pick(rng, 0, static_cast<long>(n) - 1))).pow(e)
                                  : random_form(rng, X, e, 2);
    GradedIdeal C = colon_by_form(F, g, d + 1);
    // direct: h in T_i belongs iff (h*g)∘F = 0, product taken first
    oracle::OPoly of = oracle::from(F), og = oracle::from(g);
    for (unsigned i = 0; i <= d + 1; ++i) {
      auto basis = oracle::monomials(n, static_cast<int>(i));
      std::set<oracle::Exps> targets;
      std::vector<oracle::OPoly> images;
      for (const auto& m : basis) {
        images.push_back(oracle::act(oracle::mul(oracle::mono(m), og), of));
        for (const auto& [k, c] : images.back()) targets.insert(k);
      }
      oracle::Mat M;
      for (const auto& t : targets) {
        oracle::Row r;
        for (const auto& img : images) {
          auto it = img.find(t);
          r.push_back(it == img.end() ? mpq_class(0) : it->second);
        }
        M.push_back(r);
      }
      const std::size_t direct = basis.size() - oracle::rank(M);
      if (C.slice(i).dim() != direct)
        return "degree " + std::to_string(i) + ": " + std::to_string(C.slice(i).dim()) + " vs " +
               std::to_string(direct);
    }
    return {};
  });
}

Outcome multiplicity_identity(std::size_t cases, std::uint64_t seed) {
  return drive("e·|X| = Σ HF(T/(I_X + (t)))", cases, seed, [](Rng& rng) -> std::string {
    const auto n = static_cast<std::size_t>(pick(rng, 2, 4));
    const auto count = static_cast<std::size_t>(pick(rng, 1, 12));
    VarSet X = VarSet::indexed("x", n);
    std::vector<Point> pts;
    std::set<std::vector<Rational>> seen;
    while (pts.size() < count) {
      Point p;
      for (std::size_t j = 0; j < n; ++j) p.emplace_back(pick(rng, -4, 4));
      if (std::all_of(p.begin(), p.end(), [](const FieldElement& c) { return c.is_zero(); })) continue;
      Point q = normalize_point(p);
      std::vector<Rational> key;
      for (const auto& c : q) key.push_back(c.rational());
      if (seen.insert(key).second) pts.push_back(q);
    }
    const auto e = static_cast<unsigned>(pick(rng, 1, 2));
    // t is a product of linear forms missing every point
    Poly t = Poly::constant(X, FieldElement(1));
    for (unsigned k = 0; k < e; ++k) {
      for (;;) {
        Poly l(X);
        for (std::size_t j = 0; j < n; ++j) l += Poly::variable(X, j) * FieldElement(pick(rng, -5, 5));
        if (l.is_zero()) continue;
        bool misses = true;
        for (const auto& p : pts) misses = misses && !eval(l, p).is_zero();
        if (!misses) continue;
        t = t * l;
        break;
      }
    }
    unsigned D = 2;
    PointIdeal P = hf_points(X, pts, D);
    while (P.profile.values.back() != pts.size()) P = hf_points(X, pts, ++D);
    P = hf_points(X, pts, D + e + 1);
    HFProfile h = hf(add_principal(P.ideal, t));
    if (h.values.back() != 0) return "quotient by t not yet zero at the top degree";
    if (h.sum() != e * pts.size())
      return std::to_string(h.sum()) + " != " + std::to_string(e) + "*" + std::to_string(pts.size());
    return {};
  });
}

Outcome embedding_invariance(std::size_t cases, std::uint64_t seed) {
  return drive("embedding invariance", cases, seed, [](Rng& rng) -> std::string {
    const auto n = static_cast<std::size_t>(pick(rng, 1, 3));
    const auto extra = static_cast<std::size_t>(pick(rng, 1, 2));
    const auto d = static_cast<unsigned>(pick(rng, 1, 4));
    VarSet X = VarSet::indexed("x", n);
    VarSet Y = X.with_appended(extra == 1 ? std::vector<std::string>{"u"} : std::vector<std::string>{"u", "v"});
    Poly F = random_form(rng, X, d, 3);
    Poly G = F.embedded(Y);
    HFProfile a = hf(perp(F, d + 1)), b = hf(perp(G, d + 1));
    if (a.values != b.values) return "HF of T/F^perp changes under embedding";
    const auto k = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(n) - 1));
    Poly t = Poly::variable(X, k);
    if (apolar_action(t, F).is_zero()) return {};
    auto w1 = lower_bound(F, {t}, t);
    auto w2 = lower_bound(G, {t.embedded(Y)}, t.embedded(Y));
    if (w1.bound != w2.bound || w1.hf_sum != w2.hf_sum) return "lower bound changes under embedding";
    return {};
  });
}

Outcome essential_round_trip(std::size_t cases, std::uint64_t seed) {
  return drive("essential_vars round trip", cases, seed, [](Rng& rng) -> std::string {
    const auto m = static_cast<std::size_t>(pick(rng, 1, 3));
    const auto n = static_cast<std::size_t>(pick(rng, static_cast<long>(m), 4));
    const auto d = static_cast<unsigned>(pick(rng, 2, 4));
    VarSet Z = VarSet::indexed("z", m), X = VarSet::indexed("x", n);
    Poly G = random_form(rng, Z, d, 3);
    std::vector<Poly> images;
    for (std::size_t i = 0; i < m; ++i) {
      Poly l(X);
      for (std::size_t j = 0; j < n; ++j) l += Poly::variable(X, j) * FieldElement(pick(rng, -2, 2));
      images.push_back(l);
    }
    Poly F = substitute(G, X, images);
    if (F.is_zero()) return {};
    EssentialReduction r = essential_vars(F);
    const std::size_t essential = oracle::rank(oracle::catalecticant(oracle::from(F), n, 1));
    if (r.reduced.vars().size() != essential) return "wrong essential count for " + to_string(F);
    if (!(expand_reduction(r, X) == F)) return "round trip fails for " + to_string(F);
    if (kernel(catalecticant(r.reduced, 1)).dim() != 0) return "reduced form still has linear apolar forms";
    return {};
  });
}

Outcome grassmann_dimension(std::size_t cases, std::uint64_t seed) {
  return drive("dim(U+W) + dim(U∩W) = dim U + dim W", cases, seed, [](Rng& rng) -> std::string {
    const auto n = static_cast<std::size_t>(pick(rng, 1, 6));
    auto random_matrix = [&](std::size_t rows) {
      std::vector<Vector> rs;
      oracle::Mat om;
      for (std::size_t r = 0; r < rows; ++r) {
        Vector v;
        oracle::Row o;
        for (std::size_t j = 0; j < n; ++j) {
          long x = pick(rng, -2, 2);
          v.emplace_back(x);
          o.emplace_back(x);
        }
        rs.push_back(v);
        om.push_back(o);
      }
      return std::make_pair(Matrix::from_rows(n, rs), om);
    };
    auto [A, oa] = random_matrix(static_cast<std::size_t>(pick(rng, 0, static_cast<long>(n))));
    auto [B, ob] = random_matrix(static_cast<std::size_t>(pick(rng, 0, static_cast<long>(n))));
    Subspace U = pick(rng, 0, 1) ? Subspace::span(A) : Subspace::solutions_of(A);
    Subspace W = Subspace::span(B);
    Subspace S = subspace_sum(U, W), I = subspace_intersect(U, W);
    if (S.dim() + I.dim() != U.dim() + W.dim()) return "dimension formula fails";
    if (!S.contains(U) || !S.contains(W) || !U.contains(I) || !W.contains(I)) return "containment fails";
    if (!U.has_equation_form()) {
      oracle::Mat both = oa;
      both.insert(both.end(), ob.begin(), ob.end());
      if (S.dim() != oracle::rank(both)) return "oracle rank of the stacked spans differs";
    }
    return {};
  });
}

std::vector<Outcome> run_all(std::uint64_t seed) {
  return {
      contraction(1500, seed + 1),        bilinearity(1000, seed + 2),
      composition(1000, seed + 3),        gorenstein_symmetry(1000, seed + 4),
      colon_two_ways(1000, seed + 5),     multiplicity_identity(1000, seed + 6),
      embedding_invariance(1000, seed + 7), essential_round_trip(1000, seed + 8),
      grassmann_dimension(1500, seed + 9),
  };
}

}  // namespace props
