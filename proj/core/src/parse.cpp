#include "apolar/parse.hpp"

#include <cctype>

#include "apolar/error.hpp"

namespace apolar {

namespace {
constexpr std::string_view kModule = "cli";
constexpr unsigned kMaxExponent = 1000;

class Parser {
 public:
  Parser(std::string_view text, const FieldRef& ext) : s_(text), ext_(ext) {}

  Expr parse() {
    Expr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    raise(Errc::SyntaxError, kModule, what + " at position " + std::to_string(pos_ + 1));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr expr() {
    Expr sum;
    sum.kind = Expr::Kind::Sum;
    skip();
    sum.position = pos_;
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    sum.children.push_back(term());
    sum.negated.push_back(neg);
    for (;;) {
      if (accept('+')) neg = false;
      else if (accept('-')) neg = true;
      else break;
      sum.children.push_back(term());
      sum.negated.push_back(neg);
    }
    if (sum.children.size() == 1 && !sum.negated[0]) return std::move(sum.children[0]);
    return sum;
  }

  Expr term() {
    Expr prod;
    prod.kind = Expr::Kind::Product;
    skip();
    prod.position = pos_;
    prod.children.push_back(factor());
    while (accept('*')) prod.children.push_back(factor());
    if (prod.children.size() == 1) return std::move(prod.children[0]);
    return prod;
  }

  Expr factor() {
    Expr b = base();
    if (!accept('^')) return b;
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer exponent");
    std::string digits(s_.substr(start, pos_ - start));
    if (digits.size() > 4 || std::stoul(digits) > kMaxExponent) {
      pos_ = start;
      fail("exponent too large");
    }
    Expr p;
    p.kind = Expr::Kind::Power;
    p.position = b.position;
    p.exponent = static_cast<unsigned>(std::stoul(digits));
    p.children.push_back(std::move(b));
    return p;
  }

  Expr base() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    Expr e;
    e.position = pos_;
    if (c == '(') {
      ++pos_;
      e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        std::size_t dstart = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (dstart == pos_) fail("expected a denominator");
      }
      std::string lit(s_.substr(start, pos_ - start));
      e.kind = Expr::Kind::Literal;
      e.value.set_str(lit, 10);
      if (e.value.get_den() == 0) {
        pos_ = start;
        fail("zero denominator");
      }
      e.value.canonicalize();
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      e.name = std::string(s_.substr(start, pos_ - start));
      e.kind = (ext_ && e.name == ext_->generator()) ? Expr::Kind::Generator : Expr::Kind::Variable;
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  FieldRef ext_;
  std::size_t pos_ = 0;
};

void collect_vars(const Expr& e, std::vector<std::string>& out) {
  if (e.kind == Expr::Kind::Variable) {
    for (const auto& n : out)
      if (n == e.name) return;
    out.push_back(e.name);
    return;
  }
  for (const auto& c : e.children) collect_vars(c, out);
}

std::string upper(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return s;
}

std::optional<std::size_t> resolve(const VarSet& vars, const std::string& name, Role role) {
  if (auto i = vars.index_of(name)) return i;
  if (role == Role::T)
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (upper(vars.name(i)) == name) return i;
  return std::nullopt;
}

Poly evaluate(const Expr& e, const VarSet& vars, const FieldRef& ext, Role role) {
  switch (e.kind) {
    case Expr::Kind::Literal:
      return Poly::constant(vars, FieldElement(e.value));
    case Expr::Kind::Generator:
      return Poly::constant(vars, FieldElement::generator(ext));
    case Expr::Kind::Variable: {
      auto i = resolve(vars, e.name, role);
      if (!i)
        raise(Errc::UnknownVariable, kModule,
              "unknown variable '" + e.name + "' at position " + std::to_string(e.position + 1));
      return Poly::variable(vars, *i);
    }
    case Expr::Kind::Power:
      return evaluate(e.children[0], vars, ext, role).pow(e.exponent);
    case Expr::Kind::Product: {
      Poly p = evaluate(e.children[0], vars, ext, role);
      for (std::size_t k = 1; k < e.children.size(); ++k) p = p * evaluate(e.children[k], vars, ext, role);
      return p;
    }
    case Expr::Kind::Sum: {
      Poly p(vars);
      for (std::size_t k = 0; k < e.children.size(); ++k) {
        Poly t = evaluate(e.children[k], vars, ext, role);
        if (e.negated[k]) p -= t;
        else p += t;
      }
      return p;
    }
  }
  return Poly(vars);
}

std::vector<std::pair<std::string_view, std::size_t>> split_top(std::string_view text, char sep) {
  std::vector<std::pair<std::string_view, std::size_t>> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= text.size(); ++k) {
    if (k == text.size() || (text[k] == sep && depth == 0)) {
      parts.emplace_back(text.substr(start, k - start), start);
      start = k + 1;
      continue;
    }
    if (text[k] == '(') ++depth;
    if (text[k] == ')') --depth;
  }
  return parts;
}
}  // namespace

Expr parse_expr(std::string_view text, const FieldRef& ext) { return Parser(text, ext).parse(); }

Poly parse_poly(std::string_view text, const ParseOptions& opts) {
  Expr e = parse_expr(text, opts.ext);
  VarSet vars;
  if (opts.vars) {
    vars = *opts.vars;
  } else {
    std::vector<std::string> names;
    collect_vars(e, names);
    vars = VarSet(std::move(names));
  }
  Poly p = evaluate(e, vars, opts.ext, opts.role);
  if (opts.require_homogeneous && !p.is_homogeneous())
    raise(Errc::NonHomogeneous, kModule, "'" + std::string(text) + "' is not homogeneous");
  return p;
}

std::vector<Poly> parse_poly_list(std::string_view text, const ParseOptions& opts) {
  if (!opts.vars) raise(Errc::InvalidInput, kModule, "a form list needs a declared variable order");
  std::vector<Poly> out;
  for (auto [part, offset] : split_top(text, ',')) {
    try {
      out.push_back(parse_poly(part, opts));
    } catch (const Error& err) {
      if (err.code() != Errc::SyntaxError) throw;
      raise(Errc::SyntaxError, kModule, std::string(err.what()) + " of item starting at " + std::to_string(offset + 1));
    }
  }
  return out;
}

FieldRef parse_extension(std::string_view decl) {
  auto colon = decl.find(':');
  if (colon == std::string_view::npos)
    raise(Errc::SyntaxError, kModule, "extension must look like 'z: z^2+1'");
  std::string name(decl.substr(0, colon));
  while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
  while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front()))) name.erase(name.begin());
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])))
    raise(Errc::SyntaxError, kModule, "bad extension generator name");
  ParseOptions o;
  o.vars = VarSet({name});
  Poly p = parse_poly(decl.substr(colon + 1), o);
  std::vector<Rational> coeffs(static_cast<std::size_t>(std::max(p.degree(), 0)) + 1);
  for (const auto& [m, c] : p.terms()) coeffs[m[0]] = c.rational();
  return ExtensionField::make(name, UniPoly(std::move(coeffs)));
}

FieldElement parse_scalar(std::string_view text, const FieldRef& ext) {
  ParseOptions o;
  o.vars = VarSet();
  o.ext = ext;
  Poly p = parse_poly(text, o);
  if (p.is_zero()) return FieldElement(0);
  return p.terms().begin()->second;
}

namespace {

// "(a, b)" -> "a, b" when the first parenthesis closes at the end.
std::string_view strip_parens(std::string_view part) {
  while (!part.empty() && std::isspace(static_cast<unsigned char>(part.front()))) part.remove_prefix(1);
  while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back()))) part.remove_suffix(1);
  if (part.size() < 2 || part.front() != '(' || part.back() != ')') return part;
  int depth = 0;
  for (std::size_t k = 0; k < part.size(); ++k) {
    depth += part[k] == '(' ? 1 : part[k] == ')' ? -1 : 0;
    if (depth == 0 && k + 1 < part.size()) return part;
  }
  return part.substr(1, part.size() - 2);
}

}  // namespace

std::vector<Point> parse_points(std::string_view text, std::size_t nvars, const FieldRef& ext) {
  std::vector<Point> pts;
  for (auto [part, offset] : split_top(text, ';')) {
    bool blank = true;
    for (char c : part)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    Point p;
    for (auto [coord, off2] : split_top(strip_parens(part), ',')) p.push_back(parse_scalar(coord, ext));
    if (p.size() != nvars)
      raise(Errc::InvalidInput, kModule,
            "point at position " + std::to_string(offset + 1) + " has " + std::to_string(p.size()) +
                " coordinates, expected " + std::to_string(nvars));
    pts.push_back(std::move(p));
  }
  return pts;
}

}  // namespace apolar
