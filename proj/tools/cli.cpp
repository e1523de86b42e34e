#include "cli.hpp"

#include <algorithm>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "apolar/error.hpp"
#include "apolar/parse.hpp"
#include "apolar/report.hpp"

namespace apolar::cli {

namespace {
using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kBounds = 2;
constexpr int kRefuted = 3;

struct Options {
  std::string form;
  std::string vars;
  std::string ext;
  std::string ideal;
  std::string t;
  std::string points;
  unsigned degree_cap = 0;
  unsigned e = 0;
  int degree = -1;
  unsigned n = 0;
  std::uint64_t seed = 1;
  bool json = false;
  bool large_points = false;
};

std::string trim(std::string s) {
  const auto ws = " \t\r\n";
  s.erase(0, s.find_first_not_of(ws));
  s.erase(s.find_last_not_of(ws) + 1);
  return s;
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

class Context {
 public:
  Context(Options o, Streams io) : o_(std::move(o)), io_(io) {
    if (!o_.ext.empty()) field_ = parse_extension(o_.ext);
  }

  Poly form(bool homogeneous) {
    std::string text = o_.form;
    if (text == "-") {
      text.assign(std::istreambuf_iterator<char>(io_.in), std::istreambuf_iterator<char>());
      text = trim(text);
    }
    ParseOptions po;
    if (!o_.vars.empty()) po.vars = VarSet(split_names(o_.vars));
    po.ext = field_;
    po.require_homogeneous = homogeneous;
    return parse_poly(text, po);
  }

  std::vector<Poly> ideal(const Poly& F) const {
    return parse_poly_list(o_.ideal, dual(F));
  }
  Poly t(const Poly& F) const { return parse_poly(o_.t, dual(F)); }
  std::vector<Point> points(const Poly& F) const {
    return parse_points(o_.points, F.vars().size(), field_);
  }

  unsigned top(const Poly& F) const {
    return std::max(o_.degree_cap, static_cast<unsigned>(F.degree()) + 1);
  }

  const Options& opt() const { return o_; }
  std::ostream& out() { return io_.out; }

  std::string paint(const std::string& word, int code) const {
    if (!io_.color) return word;
    const char* c = code == kOk ? "32" : code == kBounds ? "33" : "31";
    return std::string("\033[") + c + "m" + word + "\033[0m";
  }

  void emit(const Json& j) { io_.out << j.dump(2) << "\n"; }

 private:
  ParseOptions dual(const Poly& F) const {
    ParseOptions po;
    po.vars = F.vars();
    po.ext = field_;
    po.role = Role::T;
    po.require_homogeneous = true;
    return po;
  }

  Options o_;
  Streams io_;
  FieldRef field_;
};

Json poly_list(const std::vector<Poly>& ps, Role role) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(to_string(p, role));
  return a;
}

std::string join_polys(const std::vector<Poly>& ps, Role role) {
  std::string s;
  for (const auto& p : ps) s += (s.empty() ? "" : ", ") + to_string(p, role);
  return s;
}

// ---------------------------------------------------------------- verbs

int do_perp(Context& c) {
  Poly F = c.form(true);
  GradedIdeal I = perp(F, c.top(F));
  std::vector<std::size_t> dims;
  for (const auto& s : I.slices()) dims.push_back(s.dim());
  HFProfile h = hf(I);
  auto gens = minimal_generators(I);
  if (c.opt().json) {
    Json j;
    j["form"] = to_string(F);
    j["perp_dims"] = dims;
    j["hf_profile"] = h.values;
    j["generators"] = poly_list(gens, Role::T);
    c.emit(j);
    return kOk;
  }
  c.out() << "form  " << to_string(F) << "\n";
  c.out() << "dim (F^perp)_i\n" << hf_rows(dims);
  c.out() << "HF of T/F^perp\n" << hf_rows(h.values);
  c.out() << "generators  " << gens.size() << "\n";
  for (const auto& g : gens) c.out() << "  [" << g.degree() << "] " << to_string(g, Role::T) << "\n";
  return kOk;
}

int do_gens(Context& c) {
  Poly F = c.form(true);
  auto gens = minimal_generators(perp(F, c.top(F)));
  std::vector<int> degs;
  for (const auto& g : gens) degs.push_back(g.degree());
  if (c.opt().json) {
    Json j;
    j["form"] = to_string(F);
    j["generators"] = poly_list(gens, Role::T);
    j["degrees"] = degs;
    c.emit(j);
    return kOk;
  }
  for (const auto& g : gens) c.out() << g.degree() << ": " << to_string(g, Role::T) << "\n";
  return kOk;
}

int do_hf(Context& c) {
  Poly F = c.form(true);
  const unsigned D = c.top(F);
  std::vector<Poly> gens;
  std::optional<Poly> t;
  GradedIdeal J = perp(F, D);
  if (!c.opt().ideal.empty()) {
    gens = c.ideal(F);
    J = colon_by_ideal(F, gens, D);
  }
  if (!c.opt().t.empty()) {
    t = c.t(F);
    J = add_principal(J, *t);
  }
  HFProfile h = hf(J);
  if (c.opt().json) {
    Json j;
    j["form"] = to_string(F);
    j["ideal_generators"] = poly_list(gens, Role::T);
    j["t"] = t ? Json(to_string(*t, Role::T)) : Json(nullptr);
    j["hf_profile"] = h.values;
    j["hf_sum"] = h.sum();
    c.emit(j);
    return kOk;
  }
  c.out() << hf_rows(h.values, "") << "sum: " << h.sum() << "\n";
  return kOk;
}

int do_cat(Context& c) {
  Poly F = c.form(true);
  const unsigned d = static_cast<unsigned>(F.degree());
  const unsigned i = c.opt().degree >= 0 ? static_cast<unsigned>(c.opt().degree) : d / 2;
  if (i > d) raise(Errc::ParameterOutOfRange, "cli", "catalecticant degree " + std::to_string(i) + " exceeds deg F");
  Matrix M = catalecticant(F, i);
  const std::size_t r = rank(M);
  if (c.opt().json) {
    Json rows = Json::array();
    for (std::size_t a = 0; a < M.rows(); ++a) {
      Json row = Json::array();
      for (std::size_t b = 0; b < M.cols(); ++b) row.push_back(M(a, b).to_string());
      rows.push_back(row);
    }
    Json j;
    j["form"] = to_string(F);
    j["degree"] = i;
    j["rows"] = M.rows();
    j["cols"] = M.cols();
    j["rank"] = r;
    j["kernel_dim"] = M.cols() - r;
    j["matrix"] = rows;
    c.emit(j);
    return kOk;
  }
  std::vector<std::vector<std::string>> cells(M.rows(), std::vector<std::string>(M.cols()));
  std::size_t w = 1;
  for (std::size_t a = 0; a < M.rows(); ++a)
    for (std::size_t b = 0; b < M.cols(); ++b) {
      cells[a][b] = M(a, b).to_string();
      w = std::max(w, cells[a][b].size());
    }
  c.out() << "Cat_" << i << ": " << M.rows() << " x " << M.cols() << ", rank " << r << ", kernel " << M.cols() - r
          << "\n";
  for (const auto& row : cells) {
    for (std::size_t b = 0; b < row.size(); ++b)
      c.out() << (b ? " " : "  ") << std::string(w - row[b].size(), ' ') << row[b];
    c.out() << "\n";
  }
  return kOk;
}

LowerBoundWitness compute_lower(Context& c, const Poly& F) {
  if (c.opt().ideal.empty()) raise(Errc::InvalidInput, "cli", "--ideal is required");
  auto gens = c.ideal(F);
  if (c.opt().t.empty()) return lower_bound_generic(F, gens, c.opt().seed, c.opt().degree_cap);
  return lower_bound(F, gens, c.t(F), c.opt().degree_cap);
}

int do_lb(Context& c) {
  Poly F = c.form(true);
  LowerBoundWitness w = compute_lower(c, F);
  if (c.opt().json) {
    c.out() << lower_bound_json(F, w);
    return kOk;
  }
  c.out() << "form         " << to_string(F) << "\n";
  c.out() << "ideal I      (" << join_polys(w.ideal_generators, Role::T) << ")\n";
  c.out() << "t            " << to_string(w.t, Role::T) << "  (e = " << w.e << ", " << to_string(w.validity) << ")\n";
  c.out() << "HF of T/(F^perp:I + (t))\n" << hf_rows(w.profile.values);
  c.out() << "sum          " << w.hf_sum << "\n";
  c.out() << "lower bound  " << w.bound << "\n";
  return kOk;
}

int do_ub(Context& c) {
  Poly F = c.form(true);
  if (c.opt().points.empty()) raise(Errc::InvalidInput, "cli", "--points is required");
  auto pts = c.points(F);
  auto w = upper_bound_from_points(F, pts);
  if (c.opt().json) {
    c.out() << upper_bound_json(F, w);
    return w ? kOk : kRefuted;
  }
  if (!w) {
    c.out() << c.paint("refuted", kRefuted) << ": F is not a combination of the given powers\n";
    return kRefuted;
  }
  c.out() << "upper bound  " << w->count() << "\n";
  for (std::size_t k = 0; k < w->points.size(); ++k)
    c.out() << "  " << w->coefficients[k].to_string() << " * L" << point_text(w->points[k]) << "^" << F.degree() << "\n";
  return kOk;
}

int do_certify(Context& c) {
  Poly F = c.form(true);
  LowerBoundWitness lower = compute_lower(c, F);
  std::optional<UpperBoundWitness> upper;
  bool refuted = false;
  if (!c.opt().points.empty()) {
    auto pts = c.points(F);
    upper = upper_bound_from_points(F, pts);
    refuted = !upper;
  }
  RankCertificate cert = assemble_certificate(F, std::move(lower), std::move(upper));
  const int code = refuted ? kRefuted : cert.status == CertStatus::CertifiedEqual ? kOk : kBounds;
  if (c.opt().json) {
    c.out() << certificate_json(cert);
    return code;
  }
  c.out() << certificate_text(cert);
  if (refuted) c.out() << c.paint("refuted", kRefuted) << ": the points do not decompose F\n";
  return code;
}

FamilyOptions family_options(const Context& c) {
  FamilyOptions fo;
  fo.e = c.opt().e;
  fo.seed = c.opt().seed;
  fo.vandermonde_large_points = c.opt().large_points;
  return fo;
}

int show_family(Context& c, const FamilyRank& r) {
  const int code = r.exact() ? kOk : kBounds;
  if (c.opt().json) {
    c.out() << family_json(r);
    return code;
  }
  std::string text = family_text(r);
  const auto nl = text.find('\n');
  c.out() << c.paint(text.substr(0, nl), code) << text.substr(nl);
  return code;
}

int do_rank(Context& c) { return show_family(c, rank_form(c.form(true), family_options(c))); }

int do_vandermonde(Context& c) { return show_family(c, vandermonde(c.opt().n, family_options(c))); }

int do_sylvester(Context& c) {
  Poly F = c.form(true);
  SylvesterResult s = sylvester(F);
  if (c.opt().json) {
    c.out() << sylvester_json(F, s);
    return kOk;
  }
  c.out() << c.paint("rank = " + std::to_string(s.rank), kOk) << " (binary, Sylvester)\n" << sylvester_text(s);
  return kOk;
}

int do_strassen(Context& c) {
  Poly F = c.form(false);
  StrassenOptions so;
  so.e = c.opt().e;
  so.seed = c.opt().seed;
  StrassenReport r = strassen_rank(F, so);
  int code = r.verdict == Verdict::Certified ? kOk : kBounds;
  if (r.joint_check && !r.joint_check->holds) code = kRefuted;
  if (c.opt().json) {
    c.out() << strassen_json(r);
    return code;
  }
  std::string head;
  if (r.single_block)
    head = "additivity refused: one variable block (family rank " + std::to_string(r.interval_low) +
           (r.interval_low == r.interval_high ? "" : ".." + std::to_string(r.interval_high)) + ", term sum " +
           std::to_string(r.naive_term_sum.value_or(0)) + ")";
  else if (r.total_rank)
    head = "total rank = " + std::to_string(*r.total_rank) + " (" + to_string(r.verdict) + ")";
  else
    head = "rank in [" + std::to_string(r.interval_low) + ", " + std::to_string(r.interval_high) + "] (" +
           to_string(r.verdict) + ")";
  c.out() << c.paint(head, code) << "\n" << strassen_text(r);
  return code;
}

int do_split(Context& c) {
  Poly F = c.form(false);
  auto comps = split_disjoint(F);
  if (c.opt().json) {
    Json blocks = Json::array();
    for (const auto& comp : comps) {
      Json b;
      Json names = Json::array();
      for (auto v : comp.variables) names.push_back(F.vars().name(v));
      b["variables"] = names;
      b["form"] = to_string(comp.part);
      blocks.push_back(b);
    }
    Json j;
    j["form"] = to_string(F);
    j["blocks"] = blocks;
    c.emit(j);
    return kOk;
  }
  for (std::size_t k = 0; k < comps.size(); ++k) {
    std::string names;
    for (auto v : comps[k].variables) names += (names.empty() ? "" : ",") + F.vars().name(v);
    c.out() << "block " << k + 1 << "  {" << names << "}  " << to_string(comps[k].part) << "\n";
  }
  return kOk;
}

int do_reduce(Context& c) {
  Poly F = c.form(true);
  EssentialReduction r = essential_vars(F);
  const VarSet& X = F.vars();
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < r.change.rows(); ++i) {
    Poly y(X);
    for (std::size_t j = 0; j < r.change.cols(); ++j)
      if (!r.change(i, j).is_zero()) y += Poly::variable(X, j) * r.change(i, j);
    rows.push_back(to_string(y, Role::T));
  }
  const std::size_t essential = X.size() - r.removed;
  if (c.opt().json) {
    Json j;
    j["form"] = to_string(F);
    j["essential"] = essential;
    j["removed"] = r.removed;
    j["coordinates"] = r.coordinates.names();
    j["change"] = rows;
    j["reduced"] = to_string(r.reduced);
    c.emit(j);
    return kOk;
  }
  c.out() << "essential variables  " << essential << " of " << X.size() << "\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string name = r.coordinates.name(i);
    std::transform(name.begin(), name.end(), name.begin(), ::toupper);
    c.out() << "  " << name << " = " << rows[i] << "\n";
  }
  c.out() << "reduced  " << to_string(r.reduced) << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, Streams io) {
  CLI::App app{"Waring rank certificates via apolarity", "apolar"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* s) {
    s->add_option("--vars", o.vars, "variable order, comma separated");
    s->add_option("--ext", o.ext, "extension field, e.g. \"z: z^2+z+1\"");
    s->add_option("--degree-cap", o.degree_cap, "truncation degree (at least deg F + 1)");
    s->add_option("--seed", o.seed, "seed for generic choices");
    s->add_option("--e", o.e, "certificate degree");
    s->add_flag("--json", o.json, "JSON output");
  };
  auto with_form = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("form", o.form, "homogeneous form, or - for stdin")->required();
    common(s);
    return s;
  };

  std::vector<std::pair<CLI::App*, int (*)(Context&)>> verbs;
  verbs.emplace_back(with_form("perp", "apolar ideal dimensions, Hilbert function, generators"), do_perp);
  verbs.emplace_back(with_form("gens", "minimal generators of F^perp"), do_gens);
  auto* hf_cmd = with_form("hf", "Hilbert function of T/F^perp or T/(F^perp:I + (t))");
  hf_cmd->add_option("--ideal", o.ideal, "generators of I, comma separated");
  hf_cmd->add_option("--t", o.t, "form t");
  verbs.emplace_back(hf_cmd, do_hf);
  auto* cat_cmd = with_form("cat", "catalecticant matrix");
  cat_cmd->add_option("--degree", o.degree, "degree i of the source space T_i");
  verbs.emplace_back(cat_cmd, do_cat);
  auto* lb_cmd = with_form("lb", "lower bound from I and t");
  lb_cmd->add_option("--ideal", o.ideal, "generators of I, comma separated");
  lb_cmd->add_option("--t", o.t, "t in I_e; a seeded combination when omitted");
  verbs.emplace_back(lb_cmd, do_lb);
  auto* ub_cmd = with_form("ub", "upper bound from points");
  ub_cmd->add_option("--points", o.points, "points separated by ';', coordinates by ','");
  verbs.emplace_back(ub_cmd, do_ub);
  auto* cert_cmd = with_form("certify", "lower and upper bound together");
  cert_cmd->add_option("--ideal", o.ideal, "generators of I, comma separated");
  cert_cmd->add_option("--t", o.t, "t in I_e");
  cert_cmd->add_option("--points", o.points, "points separated by ';'");
  verbs.emplace_back(cert_cmd, do_certify);
  auto* rank_cmd = with_form("rank", "recognise a family and certify its rank");
  rank_cmd->add_flag("--large-points", o.large_points, "build Vandermonde point witnesses for n >= 5");
  verbs.emplace_back(rank_cmd, do_rank);
  verbs.emplace_back(with_form("sylvester", "rank of a binary form"), do_sylvester);
  verbs.emplace_back(with_form("strassen", "additivity over disjoint variable blocks"), do_strassen);
  auto* vand = app.add_subcommand("vandermonde", "rank of the Vandermonde determinant V_n");
  vand->add_option("n", o.n, "number of variables")->required();
  vand->add_flag("--large-points", o.large_points, "build point witnesses for n >= 5");
  common(vand);
  verbs.emplace_back(vand, do_vandermonde);
  verbs.emplace_back(with_form("split", "disjoint variable blocks"), do_split);
  verbs.emplace_back(with_form("reduce", "essential variables"), do_reduce);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    auto parsed = app.get_subcommands();
    io.out << (parsed.empty() ? app.help() : parsed.front()->help());
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    io.out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    io.err << "error [cli]: Usage: " << e.what() << "\n";
    return kError;
  }

  try {
    Context ctx(o, io);
    for (auto& [sub, fn] : verbs)
      if (sub->parsed()) return fn(ctx);
  } catch (const Error& e) {
    io.err << "error [" << e.module() << "]: " << errc_name(e.code()) << ": " << e.what() << "\n";
    return kError;
  }
  io.err << "error [cli]: Usage: no command\n";
  return kError;
}

}  // namespace apolar::cli
