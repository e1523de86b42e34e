#include "apolar/ideal.hpp"

#include <algorithm>
#include <map>

#include "apolar/error.hpp"

namespace apolar {

namespace {
constexpr std::string_view kModule = "apolar-calculus";

void check_homogeneous(const Poly& p, const char* what) {
  if (!p.is_homogeneous()) raise(Errc::InvalidInput, kModule, std::string(what) + " is not homogeneous");
}

// Calls f(alpha) for every alpha ≤ beta with |alpha| = i.
template <class Fn>
void sub_exponents(const Monomial& beta, unsigned i, Fn&& f) {
  std::vector<unsigned> cur(beta.size(), 0);
  auto rec = [&](auto&& self, std::size_t pos, unsigned left) -> void {
    if (pos == beta.size()) {
      if (left == 0) f(Monomial(cur));
      return;
    }
    unsigned rest = 0;
    for (std::size_t k = pos + 1; k < beta.size(); ++k) rest += beta[k];
    unsigned lo = left > rest ? left - rest : 0;
    unsigned hi = std::min(left, beta[pos]);
    for (unsigned v = lo; v <= hi; ++v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, i);
}

Rational falling(const Monomial& beta, const Monomial& alpha) {
  Integer k = 1;
  for (std::size_t j = 0; j < beta.size(); ++j)
    for (unsigned s = 0; s < alpha[j]; ++s) k *= beta[j] - s;
  return Rational(k);
}

// Rows of Cat_i restricted to the S-monomials that actually occur.
Matrix compact_catalecticant(const Poly& F, unsigned i) {
  const std::size_t cols = monomial_count(F.vars().size(), i);
  std::map<Monomial, Vector, TermOrder> rows;
  for (const auto& [beta, c] : F.terms()) {
    sub_exponents(beta, i, [&](const Monomial& alpha) {
      auto [it, fresh] = rows.try_emplace(beta / alpha);
      if (fresh) it->second.assign(cols, FieldElement());
      it->second[monomial_index(alpha)] += c * FieldElement(falling(beta, alpha));
    });
  }
  Matrix m(0, cols);
  for (const auto& [mono, row] : rows) m.append_row(row);
  return m;
}

// d/dX_j acting on dual vectors: (D_j y)[m] = y[X_j m], m in T_{i-1}.
Vector shift_dual(const std::vector<Monomial>& lower, std::span<const FieldElement> y, std::size_t j) {
  Vector out(lower.size());
  for (std::size_t k = 0; k < lower.size(); ++k) {
    Monomial up = lower[k] * Monomial::variable(lower[k].size(), j);
    out[k] = y[monomial_index(up)];
  }
  return out;
}

// T_1 * S for a subspace S of T_{i-1}, as a subspace of T_i.
Subspace times_linear(const VarSet& vars, unsigned i, const Subspace& S) {
  const std::size_t n = vars.size();
  const std::size_t Ni = monomial_count(n, i);
  if (S.is_zero()) return Subspace::zero(Ni);
  if (S.is_full()) return Subspace::full(Ni);
  if (!S.has_equation_form() || S.dim() <= S.codim()) {
    Matrix B = S.basis();
    auto lower = monomial_basis(n, i - 1);
    Matrix prod(0, Ni);
    for (std::size_t r = 0; r < B.rows(); ++r)
      for (std::size_t j = 0; j < n; ++j) {
        Vector v(Ni);
        for (std::size_t k = 0; k < lower.size(); ++k)
          if (!B(r, k).is_zero()) v[monomial_index(lower[k] * Monomial::variable(n, j))] = B(r, k);
        prod.append_row(v);
      }
    return Subspace::span(prod);
  }
  // Dual description: W^perp = {y : D_j y ∈ rowspace(E) for all j}.
  const Matrix E = S.equations();
  const std::size_t r = E.rows();
  auto upper = monomial_basis(n, i);
  Matrix cons(0, n * r);
  for (const auto& m : upper) {
    std::optional<std::size_t> first;
    for (std::size_t j = 0; j < n; ++j) {
      if (!m[j]) continue;
      std::size_t col_j = monomial_index(m / Monomial::variable(n, j));
      if (!first) {
        first = j;
        continue;
      }
      std::size_t col_f = monomial_index(m / Monomial::variable(n, *first));
      Vector row(n * r);
      for (std::size_t rho = 0; rho < r; ++rho) {
        row[*first * r + rho] = E(rho, col_f);
        row[j * r + rho] = -E(rho, col_j);
      }
      cons.append_row(row);
    }
  }
  Matrix K = kernel_vectors(row_reduce(cons), n * r);
  Matrix Y(K.rows(), Ni);
  for (std::size_t q = 0; q < K.rows(); ++q) {
    for (std::size_t k = 0; k < upper.size(); ++k) {
      const Monomial& m = upper[k];
      std::size_t j = 0;
      while (!m[j]) ++j;
      std::size_t col = monomial_index(m / Monomial::variable(n, j));
      FieldElement s;
      for (std::size_t rho = 0; rho < r; ++rho)
        if (!K(q, j * r + rho).is_zero() && !E(rho, col).is_zero()) s += K(q, j * r + rho) * E(rho, col);
      Y(q, k) = s;
    }
  }
  return Subspace::solutions_of(Y);
}

std::vector<Vector> complement(const Subspace& A, const Subspace& W) {
  std::vector<Vector> out;
  if (A.dim() == W.dim()) return out;
  const std::size_t N = A.ambient();
  if (!W.has_equation_form()) {
    Matrix cur = W.basis();
    Echelon ech = row_reduce(cur);
    Matrix B = A.basis();
    for (std::size_t r = 0; r < B.rows() && out.size() < A.dim() - W.dim(); ++r) {
      if (in_row_space(ech, B.row(r))) continue;
      out.emplace_back(B.row(r).begin(), B.row(r).end());
      cur.append_row(B.row(r));
      ech = row_reduce(cur);
    }
    return out;
  }
  Matrix EA = A.equations();
  Matrix Y = W.equations();
  Matrix sys = EA;
  Echelon ech = row_reduce(sys);
  std::vector<std::size_t> chosen;
  for (std::size_t r = 0; r < Y.rows(); ++r) {
    if (in_row_space(ech, Y.row(r))) continue;
    chosen.push_back(r);
    sys.append_row(Y.row(r));
    ech = row_reduce(sys);
  }
  for (std::size_t l = 0; l < chosen.size(); ++l) {
    Vector rhs(sys.rows());
    rhs[EA.rows() + l] = FieldElement(1);
    auto g = solve(sys, rhs);
    if (!g) raise(Errc::InvalidInput, kModule, "inconsistent complement system");
    out.push_back(std::move(*g));
  }
  (void)N;
  return out;
}

Vector evaluate_monomials(const std::vector<Monomial>& basis, const Point& p) {
  const std::size_t n = p.size();
  unsigned deg = basis.empty() ? 0 : basis.front().degree();
  std::vector<std::vector<FieldElement>> pw(n);
  for (std::size_t j = 0; j < n; ++j) {
    pw[j].emplace_back(1);
    for (unsigned k = 1; k <= deg; ++k) pw[j].push_back(pw[j].back() * p[j]);
  }
  Vector row(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    FieldElement v(1);
    for (std::size_t j = 0; j < n && !v.is_zero(); ++j)
      if (basis[k][j]) v *= pw[j][basis[k][j]];
    row[k] = v;
  }
  return row;
}
}  // namespace

Matrix catalecticant(const Poly& F, unsigned i) {
  check_homogeneous(F, "form");
  const std::size_t n = F.vars().size();
  const int d = F.degree();
  if (d < 0 || static_cast<int>(i) > d) {
    return Matrix(0, monomial_count(n, i));
  }
  Matrix m(monomial_count(n, static_cast<unsigned>(d) - i), monomial_count(n, i));
  for (const auto& [beta, c] : F.terms()) {
    sub_exponents(beta, i, [&](const Monomial& alpha) {
      m(monomial_index(beta / alpha), monomial_index(alpha)) += c * FieldElement(falling(beta, alpha));
    });
  }
  return m;
}

// ------------------------------------------------------------ GradedIdeal

GradedIdeal::GradedIdeal(VarSet vars, std::vector<Subspace> slices)
    : vars_(std::move(vars)), slices_(std::move(slices)) {
  if (slices_.empty()) raise(Errc::InvalidInput, kModule, "an ideal needs at least the degree-0 slice");
  for (unsigned i = 0; i < slices_.size(); ++i)
    if (slices_[i].ambient() != monomial_count(vars_.size(), i))
      raise(Errc::AmbientMismatch, kModule, "slice " + std::to_string(i) + " has the wrong ambient dimension");
}

GradedIdeal GradedIdeal::unit(const VarSet& vars, unsigned D) {
  std::vector<Subspace> s;
  for (unsigned i = 0; i <= D; ++i) s.push_back(Subspace::full(monomial_count(vars.size(), i)));
  return GradedIdeal(vars, std::move(s));
}

GradedIdeal GradedIdeal::zero(const VarSet& vars, unsigned D) {
  std::vector<Subspace> s;
  for (unsigned i = 0; i <= D; ++i) s.push_back(Subspace::zero(monomial_count(vars.size(), i)));
  return GradedIdeal(vars, std::move(s));
}

GradedIdeal GradedIdeal::generated_by(const VarSet& vars, const std::vector<Poly>& gens, unsigned D) {
  GradedIdeal I = zero(vars, D);
  for (const auto& g : gens) {
    if (!(g.vars() == vars)) raise(Errc::VarSetMismatch, kModule, "generator over a different variable list");
    check_homogeneous(g, "generator");
    if (g.is_zero()) continue;
    I = add_principal(I, g);
  }
  return I;
}

bool GradedIdeal::closure_holds() const {
  const std::size_t n = vars_.size();
  for (unsigned i = 0; i + 1 < slices_.size(); ++i) {
    const Subspace& lo = slices_[i];
    const Subspace& hi = slices_[i + 1];
    if (lo.is_zero() || hi.is_full()) continue;
    if (!lo.has_equation_form()) {
      auto basis = monomial_basis(n, i);
      Matrix B = lo.basis();
      for (std::size_t r = 0; r < B.rows(); ++r)
        for (std::size_t j = 0; j < n; ++j) {
          Poly x = Poly::variable(vars_, j);
          if (!hi.contains(multiply_vector(vars_, i, B.row(r), x))) return false;
        }
      continue;
    }
    Echelon lo_eq = row_reduce(lo.equations());
    Matrix hi_eq = hi.equations();
    auto lower = monomial_basis(n, i);
    for (std::size_t r = 0; r < hi_eq.rows(); ++r)
      for (std::size_t j = 0; j < n; ++j)
        if (!in_row_space(lo_eq, shift_dual(lower, hi_eq.row(r), j))) return false;
  }
  return true;
}

bool GradedIdeal::contains(const Poly& g) const {
  check_homogeneous(g, "form");
  if (g.is_zero()) return true;
  unsigned i = static_cast<unsigned>(g.degree());
  if (i > top_degree()) raise(Errc::InvalidInput, kModule, "membership asked above the truncation degree");
  return slices_[i].contains(g.dense(i));
}

bool operator==(const GradedIdeal& a, const GradedIdeal& b) {
  return a.vars_ == b.vars_ && a.slices_ == b.slices_;
}

std::size_t HFProfile::sum() const {
  std::size_t s = 0;
  for (auto v : values) s += v;
  return s;
}

// ------------------------------------------------------------- operations

namespace {
GradedIdeal perp_any(const Poly& F, unsigned D) {
  const VarSet& vars = F.vars();
  if (F.is_zero()) return GradedIdeal::unit(vars, D);
  const unsigned d = static_cast<unsigned>(F.degree());
  std::vector<Subspace> slices;
  for (unsigned i = 0; i <= D; ++i) {
    if (i > d) {
      slices.push_back(Subspace::full(monomial_count(vars.size(), i)));
      continue;
    }
    slices.push_back(Subspace::solutions_of(compact_catalecticant(F, i)));
  }
  return GradedIdeal(vars, std::move(slices));
}
}  // namespace

GradedIdeal perp(const Poly& F, unsigned D) {
  if (F.is_zero()) raise(Errc::ZeroForm, kModule, "the apolar ideal of the zero form is undefined");
  check_homogeneous(F, "form");
  if (static_cast<int>(D) < F.degree() + 1)
    raise(Errc::InvalidInput, kModule, "truncation degree must be at least deg F + 1");
  return perp_any(F, D);
}

GradedIdeal colon_by_form(const Poly& F, const Poly& t, unsigned D) {
  check_homogeneous(F, "form");
  check_homogeneous(t, "colon form");
  if (static_cast<int>(D) < F.degree() + 1)
    raise(Errc::InvalidInput, kModule, "truncation degree must be at least deg F + 1");
  return perp_any(apolar_action(t, F), D);
}

GradedIdeal colon_by_ideal(const Poly& F, const std::vector<Poly>& gens, unsigned D) {
  if (gens.empty()) raise(Errc::EmptyGeneratorList, kModule, "colon by an ideal with no generators");
  int e = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != e || !g.is_homogeneous())
      raise(Errc::DegreeMismatch, kModule, "ideal generators must be homogeneous of one degree");
  GradedIdeal J = colon_by_form(F, gens.front(), D);
  for (std::size_t k = 1; k < gens.size(); ++k) J = intersect(J, colon_by_form(F, gens[k], D));
  return J;
}

Vector multiply_vector(const VarSet& vars, unsigned degree, std::span<const FieldElement> v, const Poly& t) {
  const std::size_t n = vars.size();
  unsigned e = static_cast<unsigned>(std::max(t.degree(), 0));
  Vector out(monomial_count(n, degree + e));
  auto basis = monomial_basis(n, degree);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (v[k].is_zero()) continue;
    for (const auto& [g, c] : t.terms()) out[monomial_index(basis[k] * g)] += c * v[k];
  }
  return out;
}

GradedIdeal add_principal(const GradedIdeal& I, const Poly& t) {
  if (!(t.vars() == I.vars())) raise(Errc::VarSetMismatch, kModule, "form over a different variable list");
  check_homogeneous(t, "form");
  if (t.is_zero()) return I;
  const unsigned e = static_cast<unsigned>(t.degree());
  const unsigned D = I.top_degree();
  const std::size_t n = I.vars().size();
  std::vector<Subspace> slices = I.slices();
  for (unsigned i = e; i <= D; ++i) {
    Subspace& S = slices[i];
    if (S.is_full()) continue;
    auto lower = monomial_basis(n, i - e);
    if (S.has_equation_form()) {
      const Matrix& E = S.stored().rref;
      const std::size_t r = E.rows();
      // lambda with (lambda E)(t m) = 0 for every monomial m of degree i-e
      Matrix A(lower.size(), r);
      for (std::size_t k = 0; k < lower.size(); ++k)
        for (const auto& [g, c] : t.terms()) {
          std::size_t col = monomial_index(lower[k] * g);
          for (std::size_t rho = 0; rho < r; ++rho)
            if (!E(rho, col).is_zero()) A(k, rho) += c * E(rho, col);
        }
      Matrix lambda = kernel_vectors(row_reduce(A), r);
      Matrix neweq(lambda.rows(), E.cols());
      for (std::size_t q = 0; q < lambda.rows(); ++q)
        for (std::size_t rho = 0; rho < r; ++rho) {
          const FieldElement& l = lambda(q, rho);
          if (l.is_zero()) continue;
          for (std::size_t j = 0; j < E.cols(); ++j)
            if (!E(rho, j).is_zero()) neweq(q, j) += l * E(rho, j);
        }
      S = Subspace::solutions_of(neweq);
    } else {
      Matrix rows = S.stored().rref;
      for (std::size_t k = 0; k < lower.size(); ++k) {
        Vector v(lower.size());
        v[k] = FieldElement(1);
        rows.append_row(multiply_vector(I.vars(), i - e, v, t));
      }
      S = Subspace::span(rows);
    }
  }
  return GradedIdeal(I.vars(), std::move(slices));
}

GradedIdeal intersect(const GradedIdeal& a, const GradedIdeal& b) {
  if (!(a.vars() == b.vars()) || a.top_degree() != b.top_degree())
    raise(Errc::VarSetMismatch, kModule, "ideals over different rings or truncations");
  std::vector<Subspace> s;
  for (unsigned i = 0; i <= a.top_degree(); ++i) s.push_back(subspace_intersect(a.slice(i), b.slice(i)));
  return GradedIdeal(a.vars(), std::move(s));
}

GradedIdeal sum(const GradedIdeal& a, const GradedIdeal& b) {
  if (!(a.vars() == b.vars()) || a.top_degree() != b.top_degree())
    raise(Errc::VarSetMismatch, kModule, "ideals over different rings or truncations");
  std::vector<Subspace> s;
  for (unsigned i = 0; i <= a.top_degree(); ++i) s.push_back(subspace_sum(a.slice(i), b.slice(i)));
  return GradedIdeal(a.vars(), std::move(s));
}

std::vector<Poly> minimal_generators(const GradedIdeal& I) {
  std::vector<Poly> gens;
  const VarSet& vars = I.vars();
  if (I.slice(0).is_full()) {
    gens.push_back(Poly::constant(vars, FieldElement(1)));
    return gens;
  }
  for (unsigned i = 1; i <= I.top_degree(); ++i) {
    const Subspace& A = I.slice(i);
    if (A.is_zero()) continue;
    Subspace W = times_linear(vars, i, I.slice(i - 1));
    auto comp = complement(A, W);
    if (comp.empty()) continue;
    Matrix G(0, A.ambient());
    for (auto& v : comp) {
      if (!W.has_equation_form()) {
        // drop the pivot positions of T_1 * I_{i-1}
        const Echelon& w = W.stored();
        for (std::size_t r = 0; r < w.rank(); ++r) {
          FieldElement f = v[w.pivots[r]];
          if (f.is_zero()) continue;
          for (std::size_t j = w.pivots[r]; j < v.size(); ++j)
            if (!w.rref(r, j).is_zero()) v[j] -= f * w.rref(r, j);
        }
      }
      G.append_row(v);
    }
    Echelon red = row_reduce(G);
    for (std::size_t r = 0; r < red.rank(); ++r) gens.push_back(Poly::from_dense(vars, i, red.rref.row(r)));
  }
  return gens;
}

HFProfile hf(const GradedIdeal& I) {
  HFProfile p;
  for (const auto& s : I.slices()) p.values.push_back(s.codim());
  std::size_t D = p.values.size() - 1;
  p.stabilized = D >= 1 && p.values[D - 1] == p.values[D];
  return p;
}

Point normalize_point(const Point& p) {
  auto it = std::find_if(p.begin(), p.end(), [](const FieldElement& x) { return !x.is_zero(); });
  if (it == p.end()) raise(Errc::InvalidInput, kModule, "the zero vector is not a projective point");
  FieldElement inv = field_invert(*it);
  Point q;
  for (const auto& x : p) q.push_back(x * inv);
  return q;
}

PointIdeal hf_points(const VarSet& vars, std::span<const Point> points, unsigned D) {
  std::vector<Point> norm;
  for (const auto& p : points) {
    if (p.size() != vars.size()) raise(Errc::InvalidInput, kModule, "point has the wrong number of coordinates");
    Point q = normalize_point(p);
    for (const auto& o : norm)
      if (o == q) raise(Errc::DuplicatePoint, kModule, "duplicate point after normalization");
    norm.push_back(std::move(q));
  }
  std::vector<Subspace> slices;
  for (unsigned i = 0; i <= D; ++i) {
    auto basis = monomial_basis(vars, i);
    Matrix ev(0, basis.size());
    for (const auto& p : norm) ev.append_row(evaluate_monomials(basis, p));
    slices.push_back(Subspace::solutions_of(ev));
  }
  GradedIdeal I(vars, std::move(slices));
  HFProfile prof = hf(I);
  return {std::move(I), std::move(prof)};
}

}  // namespace apolar
