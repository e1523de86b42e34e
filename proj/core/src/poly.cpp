#include "apolar/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "apolar/error.hpp"

namespace apolar {

namespace {
constexpr std::string_view kModule = "poly-core";

void check_same_vars(const VarSet& a, const VarSet& b) {
  if (!(a == b)) raise(Errc::VarSetMismatch, kModule, "polynomials live over different variable lists");
}
}  // namespace

// ------------------------------------------------------------------ VarSet

VarSet::VarSet() : names_(std::make_shared<const std::vector<std::string>>()) {}

VarSet::VarSet(std::vector<std::string> names) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) raise(Errc::InvalidInput, kModule, "empty variable name");
    if (!seen.insert(n).second) raise(Errc::InvalidInput, kModule, "duplicate variable name '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

VarSet VarSet::indexed(std::string_view prefix, std::size_t count, std::size_t start) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < count; ++i) v.push_back(std::string(prefix) + std::to_string(start + i));
  return VarSet(std::move(v));
}

std::optional<std::size_t> VarSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return i;
  return std::nullopt;
}

VarSet VarSet::subset(std::span<const std::size_t> indices) const {
  std::vector<std::string> v;
  for (auto i : indices) v.push_back(name(i));
  return VarSet(std::move(v));
}

VarSet VarSet::with_appended(const std::vector<std::string>& extra) const {
  std::vector<std::string> v = names();
  v.insert(v.end(), extra.begin(), extra.end());
  return VarSet(std::move(v));
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<unsigned> exps) : e_(std::move(exps)) {
  deg_ = std::accumulate(e_.begin(), e_.end(), 0U);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i, unsigned power) {
  std::vector<unsigned> e(nvars, 0);
  e[i] = power;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& m) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > m.e_[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
  r.deg_ += b.deg_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
  r.deg_ -= b.deg_;
  return r;
}

namespace {
constexpr std::size_t kTableVars = 13;
constexpr unsigned kTableDeg = 64;

struct CountTable {
  std::size_t v[kTableVars][kTableDeg + 1];
  CountTable() {
    for (std::size_t n = 0; n < kTableVars; ++n)
      for (unsigned d = 0; d <= kTableDeg; ++d)
        v[n][d] = n == 0 ? (d == 0) : binomial(static_cast<unsigned>(n - 1 + d), d).get_ui();
  }
};
}  // namespace

std::size_t monomial_count(std::size_t nvars, unsigned degree) {
  static const CountTable table;
  if (nvars < kTableVars && degree <= kTableDeg) return table.v[nvars][degree];
  if (nvars == 0) return degree == 0 ? 1 : 0;
  return binomial(static_cast<unsigned>(nvars - 1 + degree), degree).get_ui();
}

namespace {
void enumerate(std::size_t nvars, unsigned remaining, std::vector<unsigned>& cur, std::size_t pos,
               std::vector<Monomial>& out) {
  if (pos + 1 == nvars) {
    cur[pos] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (unsigned v = remaining + 1; v-- > 0;) {
    cur[pos] = v;
    enumerate(nvars, remaining - v, cur, pos + 1, out);
  }
  cur[pos] = 0;
}
}  // namespace

std::vector<Monomial> monomial_basis(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(std::vector<unsigned>{});
    return out;
  }
  out.reserve(monomial_count(nvars, degree));
  std::vector<unsigned> cur(nvars, 0);
  enumerate(nvars, degree, cur, 0, out);
  return out;
}

std::vector<Monomial> monomial_basis(const VarSet& vars, unsigned degree) {
  return monomial_basis(vars.size(), degree);
}

std::size_t monomial_index(const Monomial& m) {
  std::size_t n = m.size();
  unsigned remaining = m.degree();
  std::size_t idx = 0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    unsigned e = m[k];
    // monomials whose exponent at k exceeds e come first
    if (e < remaining) idx += monomial_count(n - k, remaining - e - 1);
    remaining -= e;
  }
  return idx;
}

// -------------------------------------------------------------------- Poly

Poly Poly::constant(const VarSet& vars, const FieldElement& c) {
  Poly p(vars);
  p.add_term(Monomial::one(vars.size()), c);
  return p;
}

Poly Poly::variable(const VarSet& vars, std::size_t i) {
  Poly p(vars);
  p.add_term(Monomial::variable(vars.size(), i), FieldElement(1));
  return p;
}

Poly Poly::term(const VarSet& vars, const Monomial& m, const FieldElement& c) {
  Poly p(vars);
  p.add_term(m, c);
  return p;
}

Poly Poly::from_dense(const VarSet& vars, unsigned degree, std::span<const FieldElement> coeffs) {
  auto basis = monomial_basis(vars, degree);
  if (basis.size() != coeffs.size())
    raise(Errc::InvalidInput, kModule, "dense vector length does not match the monomial count");
  Poly p(vars);
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!coeffs[k].is_zero()) p.terms_.emplace_hint(p.terms_.end(), basis[k], coeffs[k]);
  return p;
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.begin()->first.degree());
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

FieldElement Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? FieldElement(0) : it->second;
}

FieldRef Poly::field() const {
  FieldRef f;
  for (const auto& [m, c] : terms_) f = common_field(f, c.field());
  return f;
}

std::vector<std::size_t> Poly::support() const {
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) used[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < used.size(); ++i)
    if (used[i]) out.push_back(i);
  return out;
}

void Poly::add_term(const Monomial& m, const FieldElement& c) {
  if (m.size() != vars_.size()) raise(Errc::VarSetMismatch, kModule, "monomial length does not match variables");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  check_same_vars(vars_, o.vars_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same_vars(vars_, o.vars_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const FieldElement& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  check_same_vars(a.vars_, b.vars_);
  Poly r(a.vars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly acc = constant(vars_, FieldElement(1));
  for (unsigned i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

bool operator==(const Poly& a, const Poly& b) {
  if (!(a.vars_ == b.vars_) || a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [m, c] : a.terms_) {
    if (!(m == it->first) || !(c == it->second)) return false;
    ++it;
  }
  return true;
}

std::vector<FieldElement> Poly::dense(unsigned degree) const {
  std::vector<FieldElement> v(monomial_count(vars_.size(), degree));
  for (const auto& [m, c] : terms_)
    if (m.degree() == degree) v[monomial_index(m)] = c;
  return v;
}

Poly Poly::embedded(const VarSet& target) const {
  std::vector<std::size_t> map(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto j = target.index_of(vars_.name(i));
    if (!j) raise(Errc::VarSetMismatch, kModule, "variable '" + vars_.name(i) + "' missing from target");
    map[i] = *j;
  }
  Poly r(target);
  for (const auto& [m, c] : terms_) {
    std::vector<unsigned> e(target.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) e[map[i]] += m[i];
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

Poly Poly::restricted(const VarSet& target) const {
  std::vector<std::optional<std::size_t>> map(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) map[i] = target.index_of(vars_.name(i));
  Poly r(target);
  for (const auto& [m, c] : terms_) {
    std::vector<unsigned> e(target.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (!map[i]) raise(Errc::VarSetMismatch, kModule, "variable '" + vars_.name(i) + "' occurs but is dropped");
      e[*map[i]] = m[i];
    }
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r = *this;
  r *= field_invert(leading_coefficient());
  return r;
}

Poly LinearForm::to_poly() const {
  Poly p(vars);
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(Monomial::variable(vars.size(), i), coeffs[i]);
  return p;
}

// ------------------------------------------------------------ operations

Poly apolar_action(const Poly& g, const Poly& F) {
  check_same_vars(g.vars(), F.vars());
  Poly r(F.vars());
  for (const auto& [mg, cg] : g.terms()) {
    for (const auto& [mf, cf] : F.terms()) {
      if (!mg.divides(mf)) continue;
      Integer k = 1;
      for (std::size_t i = 0; i < mg.size(); ++i)
        for (unsigned j = 0; j < mg[i]; ++j) k *= mf[i] - j;
      r.add_term(mf / mg, cg * cf * FieldElement(Rational(k)));
    }
  }
  return r;
}

Poly power_of_linear(const LinearForm& L, unsigned d) {
  const std::size_t n = L.vars.size();
  if (L.coeffs.size() != n) raise(Errc::InvalidInput, kModule, "linear form has the wrong number of coefficients");
  if (std::all_of(L.coeffs.begin(), L.coeffs.end(), [](const FieldElement& a) { return a.is_zero(); }))
    raise(Errc::InvalidInput, kModule, "linear form is zero");
  std::vector<std::vector<FieldElement>> pw(n);
  for (std::size_t i = 0; i < n; ++i) {
    pw[i].reserve(d + 1);
    pw[i].emplace_back(1);
    for (unsigned k = 1; k <= d; ++k) pw[i].push_back(pw[i].back() * L.coeffs[i]);
  }
  Integer dfact = factorial(d);
  Poly r(L.vars);
  for (const auto& m : monomial_basis(n, d)) {
    FieldElement c(1);
    Integer denom = 1;
    bool zero = false;
    for (std::size_t i = 0; i < n && !zero; ++i) {
      if (!m[i]) continue;
      if (L.coeffs[i].is_zero()) zero = true;
      c *= pw[i][m[i]];
      denom *= factorial(m[i]);
    }
    if (zero) continue;
    c *= FieldElement(Rational(Integer(dfact / denom)));
    r.add_term(m, c);
  }
  return r;
}

Poly substitute(const Poly& F, const VarSet& target, const std::vector<Poly>& images) {
  if (images.size() != F.vars().size())
    raise(Errc::InvalidInput, kModule, "substitution needs one image per variable");
  std::vector<std::vector<Poly>> cache(images.size());
  auto power = [&](std::size_t i, unsigned k) -> const Poly& {
    auto& c = cache[i];
    if (c.empty()) c.push_back(Poly::constant(target, FieldElement(1)));
    while (c.size() <= k) c.push_back(c.back() * images[i]);
    return c[k];
  };
  Poly r(target);
  for (const auto& [m, c] : F.terms()) {
    Poly t = Poly::constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) t = t * power(i, m[i]);
    r += t;
  }
  return r;
}

std::vector<Component> split_disjoint(const Poly& F) {
  const std::size_t n = F.vars().size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [m, c] : F.terms()) {
    std::optional<std::size_t> first;
    for (std::size_t i = 0; i < n; ++i) {
      if (!m[i]) continue;
      if (!first) first = i;
      else parent[find(i)] = find(*first);
    }
  }
  std::vector<std::size_t> support = F.support();
  std::vector<Component> out;
  std::map<std::size_t, std::size_t> slot;
  for (auto i : support) {
    auto root = find(i);
    auto [it, fresh] = slot.try_emplace(root, out.size());
    if (fresh) out.push_back({Poly(F.vars()), {}});
    out[it->second].variables.push_back(i);
  }
  for (const auto& [m, c] : F.terms()) {
    std::optional<std::size_t> v;
    for (std::size_t i = 0; i < n && !v; ++i)
      if (m[i]) v = i;
    if (!v) {
      // constant term: only possible for degree-0 input
      if (out.empty()) out.push_back({Poly(F.vars()), {}});
      out[0].part.add_term(m, c);
      continue;
    }
    out[slot[find(*v)]].part.add_term(m, c);
  }
  return out;
}

namespace {
std::string role_name(const std::string& name, Role role) {
  if (role == Role::S) return name;
  std::string up = name;
  for (auto& ch : up) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return up;
}
}  // namespace

std::string to_string(const Poly& p, Role role) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    std::ostringstream mono;
    bool any = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (any) mono << "*";
      any = true;
      mono << role_name(p.vars().name(i), role);
      if (m[i] > 1) mono << "^" << m[i];
    }
    if (c.is_rational()) {
      const Rational& q = c.coords()[0];
      if (first) {
        if (q < 0) os << "-";
      } else {
        os << (q < 0 ? " - " : " + ");
      }
      Rational mag = abs(q);
      if (!any) os << mag.get_str();
      else if (mag == 1) os << mono.str();
      else os << mag.get_str() << "*" << mono.str();
    } else {
      if (!first) os << " + ";
      os << "(" << c.to_string() << ")";
      if (any) os << "*" << mono.str();
    }
    first = false;
  }
  return os.str();
}

}  // namespace apolar
