#include "apolar/field.hpp"

#include <algorithm>
#include <sstream>

#include "apolar/error.hpp"

namespace apolar {

namespace {
constexpr std::string_view kModule = "exact-fields";
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) {
    raise(Errc::InvalidInput, kModule, "not a rational literal: '" + s + "'");
  }
  if (q.get_den() == 0) raise(Errc::InvalidInput, kModule, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UniPoly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  std::vector<Rational> d(c_);
  Rational lc = c_.back();
  for (auto& x : d) x /= lc;
  return UniPoly(std::move(d));
}

Rational UniPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) + b.coeff(k);
  return UniPoly(std::move(r));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) - b.coeff(k);
  return UniPoly(std::move(r));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(r));
}

std::string UniPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) raise(Errc::InvalidInput, kModule, "polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {UniPoly(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational& lb = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    Rational c = rem[static_cast<std::size_t>(k)] / lb;
    if (c == 0) continue;
    quo[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly r0 = a, r1 = b;
  UniPoly s0({Rational(1)}), s1, t0, t1({Rational(1)});
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UniPoly s2 = s0 - q * s1;
    UniPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  UniPoly inv_lc({1 / r0.leading()});
  return {r0 * inv_lc, s0 * inv_lc, t0 * inv_lc};
}

bool squarefree_check(const UniPoly& p) {
  if (p.is_zero()) raise(Errc::InvalidInput, kModule, "squarefree check of the zero polynomial");
  return gcd(p, p.derivative()).degree() == 0;
}

UniPoly cyclotomic(unsigned m) {
  if (m == 0) raise(Errc::InvalidInput, kModule, "cyclotomic index must be positive");
  std::vector<Rational> v(m + 1);
  v[0] = -1;
  v[m] = 1;
  UniPoly num(std::move(v));
  for (unsigned d = 1; d < m; ++d) {
    if (m % d == 0) num = divmod(num, cyclotomic(d)).first;
  }
  return num;
}

// ----------------------------------------------------------- ExtensionField

ExtensionField::ExtensionField(std::string generator, UniPoly modulus)
    : generator_(std::move(generator)), modulus_(std::move(modulus)) {
  std::size_t m = degree();
  if (m >= 2) {
    std::vector<Rational> cur(m);
    // z^m = -(c_0 + c_1 z + ... + c_{m-1} z^{m-1})
    for (std::size_t k = 0; k < m; ++k) cur[k] = -modulus_.coeffs()[k];
    high_powers_.push_back(cur);
    for (std::size_t step = 1; step + 1 < m; ++step) {
      std::vector<Rational> next(m);
      Rational top = cur[m - 1];
      for (std::size_t k = m - 1; k > 0; --k) next[k] = cur[k - 1];
      next[0] = 0;
      if (top != 0)
        for (std::size_t k = 0; k < m; ++k) next[k] += top * high_powers_[0][k];
      high_powers_.push_back(next);
      cur = std::move(next);
    }
  }
}

FieldRef ExtensionField::make(std::string generator, const UniPoly& minimal) {
  if (minimal.degree() < 1)
    raise(Errc::InvalidInput, kModule, "minimal polynomial must have degree at least 1");
  UniPoly p = minimal.monic();
  if (!squarefree_check(p))
    raise(Errc::InvalidInput, kModule,
          "minimal polynomial " + p.to_string(generator) + " is not squarefree");
  return FieldRef(new ExtensionField(std::move(generator), std::move(p)));
}

bool ExtensionField::same_as(const ExtensionField& other) const {
  return this == &other || (generator_ == other.generator_ && modulus_ == other.modulus_);
}

std::vector<Rational> ExtensionField::reduce(const std::vector<Rational>& coords) const {
  std::size_t m = degree();
  std::vector<Rational> out(m);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k] == 0) continue;
    if (k < m) {
      out[k] += coords[k];
    } else if (m == 1) {
      // z = -c_0
      Rational zval = -modulus_.coeffs()[0];
      Rational pw = 1;
      for (std::size_t j = 0; j < k; ++j) pw *= zval;
      out[0] += coords[k] * pw;
    } else if (k - m < high_powers_.size()) {
      const auto& hp = high_powers_[k - m];
      for (std::size_t j = 0; j < m; ++j)
        if (hp[j] != 0) out[j] += coords[k] * hp[j];
    } else {
      UniPoly r = divmod(UniPoly::monomial(coords[k], k), modulus_).second;
      for (std::size_t j = 0; j < r.coeffs().size(); ++j) out[j] += r.coeffs()[j];
    }
  }
  return out;
}

std::vector<Rational> ExtensionField::multiply(const std::vector<Rational>& a,
                                               const std::vector<Rational>& b) const {
  std::size_t m = degree();
  std::vector<Rational> prod(2 * m - 1);
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j)
      if (b[j] != 0) prod[i + j] += a[i] * b[j];
  }
  return reduce(prod);
}

namespace {
unsigned euler_phi(unsigned m) {
  unsigned r = m, x = m;
  for (unsigned p = 2; p * p <= x; ++p) {
    if (x % p == 0) {
      while (x % p == 0) x /= p;
      r -= r / p;
    }
  }
  if (x > 1) r -= r / x;
  return r;
}
}  // namespace

FieldRef cyclotomic_field(unsigned m, std::string generator) {
  if (euler_phi(m) == 1) return nullptr;
  return ExtensionField::make(std::move(generator), cyclotomic(m));
}

// ------------------------------------------------------------ FieldElement

FieldElement::FieldElement(FieldRef field, std::vector<Rational> coords) : field_(std::move(field)) {
  for (auto& c : coords) c.canonicalize();
  if (field_) {
    coords_ = field_->reduce(coords);
  } else {
    if (coords.size() > 1)
      for (std::size_t k = 1; k < coords.size(); ++k)
        if (coords[k] != 0) raise(Errc::InvalidInput, kModule, "rational element with extra coordinates");
    coords_ = {coords.empty() ? Rational(0) : coords[0]};
  }
}

FieldElement FieldElement::generator(const FieldRef& field) {
  if (!field) raise(Errc::InvalidInput, kModule, "the rational field has no generator");
  return FieldElement(field, {Rational(0), Rational(1)});
}

bool FieldElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
}

bool FieldElement::is_one() const {
  if (coords_[0] != 1) return false;
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& q) { return q == 0; });
}

bool FieldElement::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& q) { return q == 0; });
}

const Rational& FieldElement::rational() const {
  if (!is_rational()) raise(Errc::InvalidInput, kModule, "element " + to_string() + " is not rational");
  return coords_[0];
}

FieldRef common_field(const FieldRef& a, const FieldRef& b) {
  if (!a) return b;
  if (!b) return a;
  if (a == b || a->same_as(*b)) return a;
  raise(Errc::FieldMismatch, kModule,
        "elements of Q[" + a->generator() + "]/(" + a->modulus().to_string(a->generator()) +
            ") and Q[" + b->generator() + "]/(" + b->modulus().to_string(b->generator()) + ") mixed");
}

void FieldElement::adopt(const FieldRef& f) {
  if (field_ == f) return;
  FieldRef target = common_field(field_, f);
  if (field_ == target || (field_ && target && field_->same_as(*target))) return;
  field_ = target;
  coords_.resize(target->degree());
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  adopt(o.field_);
  for (std::size_t k = 0; k < o.coords_.size(); ++k) coords_[k] += o.coords_[k];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  adopt(o.field_);
  for (std::size_t k = 0; k < o.coords_.size(); ++k) coords_[k] -= o.coords_[k];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  if (!o.field_ || o.is_rational()) {
    adopt(o.field_);
    const Rational& s = o.coords_[0];
    for (auto& c : coords_) c *= s;
    return *this;
  }
  if (!field_ || is_rational()) {
    Rational s = coords_[0];
    coords_ = o.coords_;
    field_ = common_field(field_, o.field_);
    for (auto& c : coords_) c *= s;
    return *this;
  }
  field_ = common_field(field_, o.field_);
  coords_ = field_->multiply(coords_, o.coords_);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= field_invert(o); }

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

FieldElement FieldElement::pow(unsigned k) const {
  FieldElement base = *this, acc(1);
  while (k) {
    if (k & 1U) acc *= base;
    k >>= 1U;
    if (k) base *= base;
  }
  return acc;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.field_ && b.field_ && a.field_ != b.field_ && !a.field_->same_as(*b.field_)) return false;
  std::size_t n = std::max(a.coords_.size(), b.coords_.size());
  for (std::size_t k = 0; k < n; ++k) {
    const Rational zero = 0;
    const Rational& x = k < a.coords_.size() ? a.coords_[k] : zero;
    const Rational& y = k < b.coords_.size() ? b.coords_[k] : zero;
    if (x != y) return false;
  }
  return true;
}

std::string FieldElement::to_string() const {
  if (!field_ || is_rational()) return coords_[0].get_str();
  return UniPoly(coords_).to_string(field_->generator());
}

FieldElement field_invert(const FieldElement& a) {
  if (a.is_zero()) raise(Errc::ZeroInversion, kModule, "inversion of zero");
  if (!a.field() || a.is_rational()) {
    Rational inv = 1 / a.coords()[0];
    return FieldElement(a.field(), {inv});
  }
  const FieldRef& f = a.field();
  ExtendedGcd eg = extended_gcd(UniPoly(a.coords()), f->modulus());
  if (eg.g.degree() != 0) {
    raise(Errc::NotInvertible, kModule,
          "element " + a.to_string() + " is a zero divisor; modulus has factor " +
              eg.g.to_string(f->generator()));
  }
  return FieldElement(f, eg.s.coeffs());
}

}  // namespace apolar
