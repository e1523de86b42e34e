#include "apolar/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace apolar {

namespace {
using Json = nlohmann::ordered_json;

Json element(const FieldElement& x, std::size_t degree) {
  Json a = Json::array();
  const auto& c = x.coords();
  for (std::size_t k = 0; k < std::max<std::size_t>(degree, 1); ++k)
    a.push_back(k < c.size() ? to_string(c[k]) : std::string("0"));
  return a;
}

Json field_json(const FieldRef& f) {
  if (!f) return nullptr;
  Json j;
  j["generator"] = f->generator();
  j["minimal_polynomial"] = f->modulus().to_string(f->generator());
  return j;
}

Json polys(const std::vector<Poly>& ps, Role role) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(to_string(p, role));
  return a;
}

Json lower_json(const LowerBoundWitness& w) {
  Json j;
  j["e"] = w.e;
  j["ideal_generators"] = polys(w.ideal_generators, Role::T);
  j["t"] = to_string(w.t, Role::T);
  j["hf_profile"] = w.profile.values;
  j["hf_sum"] = w.hf_sum;
  j["lower_bound"] = w.bound;
  j["validity"] = to_string(w.validity);
  return j;
}

Json upper_json(const std::optional<UpperBoundWitness>& w) {
  Json j;
  if (!w) {
    j["points"] = Json::array();
    j["coefficients"] = Json::array();
    j["field"] = nullptr;
    return j;
  }
  const std::size_t deg = w->field ? w->field->degree() : 1;
  Json pts = Json::array();
  for (const auto& p : w->points) {
    Json row = Json::array();
    for (const auto& x : p) row.push_back(element(x, deg));
    pts.push_back(row);
  }
  Json cs = Json::array();
  for (const auto& c : w->coefficients) cs.push_back(element(c, deg));
  j["points"] = pts;
  j["coefficients"] = cs;
  j["field"] = field_json(w->field);
  return j;
}

Json cert_json(const RankCertificate& c) {
  Json j;
  j["form"] = to_string(c.form);
  Json lo = lower_json(c.lower);
  for (auto it = lo.begin(); it != lo.end(); ++it) j[it.key()] = it.value();
  Json up = upper_json(c.upper);
  for (auto it = up.begin(); it != up.end(); ++it) j[it.key()] = it.value();
  j["status"] = to_string(c.status);
  j["cited_rank"] = c.cited_rank ? Json(*c.cited_rank) : Json(nullptr);
  j["citation"] = c.citation.empty() ? Json(nullptr) : Json(c.citation);
  return j;
}

Json match_json(const FamilyMatch& m, const VarSet& vars) {
  Json j;
  j["tag"] = to_string(m.tag);
  j["parameters"] = m.parameters;
  Json order = Json::array();
  for (auto i : m.order) order.push_back(vars.name(i));
  j["variables"] = order;
  if (m.q) j["q"] = to_string(*m.q, Role::T);
  j["citation"] = m.citation;
  return j;
}

Json family_obj(const FamilyRank& r) {
  Json j = cert_json(r.certificate);
  j["family"] = match_json(r.match, r.certificate.form.vars());
  Json rank;
  rank["low"] = r.low;
  rank["high"] = r.high;
  rank["exact"] = r.exact();
  rank["lower_source"] = r.lower_source;
  j["rank"] = rank;
  j["notes"] = r.notes;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string status_word(const FamilyRank& r) {
  switch (r.certificate.status) {
    case CertStatus::CertifiedEqual: return "certified";
    case CertStatus::CitedUpper: return "certified lower bound, cited upper bound";
    case CertStatus::BoundsOnly: break;
  }
  if (r.exact()) return "cited lower bound";
  return "bounds only";
}
}  // namespace

std::string certificate_json(const RankCertificate& c) { return dump(cert_json(c)); }
std::string family_json(const FamilyRank& r) { return dump(family_obj(r)); }

std::string lower_bound_json(const Poly& F, const LowerBoundWitness& w) {
  Json j;
  j["form"] = to_string(F);
  Json lo = lower_json(w);
  for (auto it = lo.begin(); it != lo.end(); ++it) j[it.key()] = it.value();
  return dump(j);
}

std::string upper_bound_json(const Poly& F, const std::optional<UpperBoundWitness>& w) {
  Json j;
  j["form"] = to_string(F);
  j["consistent"] = w.has_value();
  j["count"] = w ? Json(w->count()) : Json(nullptr);
  Json up = upper_json(w);
  for (auto it = up.begin(); it != up.end(); ++it) j[it.key()] = it.value();
  return dump(j);
}

std::string sylvester_json(const Poly& F, const SylvesterResult& s) {
  Json j;
  j["form"] = to_string(F);
  j["h1"] = to_string(s.h1, Role::T);
  j["h2"] = to_string(s.h2, Role::T);
  j["d1"] = s.d1;
  j["d2"] = s.d2;
  j["squarefree_h1"] = s.squarefree_h1;
  j["rank"] = s.rank;
  j["lower"] = s.lower ? lower_json(*s.lower) : Json(nullptr);
  j["notes"] = s.notes;
  return dump(j);
}

std::string strassen_json(const StrassenReport& r) {
  Json j;
  j["form"] = to_string(r.form);
  Json sums = Json::array();
  Json checks = Json::array();
  for (const auto& s : r.summands) {
    Json o;
    o["form"] = to_string(s.part);
    o["variables"] = s.part.vars().names();
    o["reduced"] = to_string(s.reduced);
    o["pure_power"] = s.pure_power;
    o["admissible_e"] = s.admissible;
    Json rank;
    rank["low"] = s.low;
    rank["high"] = s.high;
    o["rank"] = rank;
    o["certificate"] = (s.family && s.family->certificate.lower.e > 0) ? family_obj(*s.family) : Json(nullptr);
    sums.push_back(o);
    Json c;
    c["disjoint"] = s.checks.disjoint;
    c["e_computable_certified"] = s.checks.e_computable_certified;
    c["perp_e_zero"] = s.checks.perp_e_zero ? Json(*s.checks.perp_e_zero) : Json(nullptr);
    c["essential_vars_reduced"] = s.checks.essential_vars_reduced;
    checks.push_back(c);
  }
  j["summands"] = sums;
  j["shared_e"] = r.shared_e ? Json(r.shared_e) : Json(nullptr);
  j["checks"] = checks;
  if (r.total_rank) {
    j["total_rank"] = *r.total_rank;
  } else {
    Json iv;
    iv["low"] = r.interval_low;
    iv["high"] = r.interval_high;
    j["interval"] = iv;
  }
  j["verdict"] = to_string(r.verdict);
  j["single_block"] = r.single_block;
  j["naive_term_sum"] = r.naive_term_sum ? Json(*r.naive_term_sum) : Json(nullptr);
  if (r.joint_check) {
    Json l;
    l["holds"] = r.joint_check->holds;
    l["intersection_profile"] = r.joint_check->intersection_profile;
    l["intersection_sum"] = r.joint_check->intersection_sum;
    l["summand_sums"] = r.joint_check->summand_sums;
    l["expected"] = r.joint_check->expected;
    j["joint_check"] = l;
  } else {
    j["joint_check"] = nullptr;
  }
  j["citations"] = r.citations;
  j["notes"] = r.notes;
  return dump(j);
}

// ---------------------------------------------------------------- text

std::string hf_rows(const std::vector<std::size_t>& values, const std::string& indent) {
  std::ostringstream os;
  const int w = static_cast<int>(std::to_string(values.empty() ? 0 : values.size() - 1).size());
  for (std::size_t i = 0; i < values.size(); ++i)
    os << indent << std::setw(w) << i << ": " << values[i] << "\n";
  return os.str();
}

std::string point_text(const Point& p) {
  std::string s = "(";
  for (std::size_t k = 0; k < p.size(); ++k) s += (k ? ", " : "") + p[k].to_string();
  return s + ")";
}

std::string certificate_text(const RankCertificate& c) {
  std::ostringstream os;
  const auto& w = c.lower;
  os << "form         " << to_string(c.form) << "\n";
  os << "ideal I      (" ;
  for (std::size_t k = 0; k < w.ideal_generators.size(); ++k)
    os << (k ? ", " : "") << to_string(w.ideal_generators[k], Role::T);
  os << ")\n";
  os << "t            " << to_string(w.t, Role::T) << "  (e = " << w.e << ", " << to_string(w.validity) << ")\n";
  os << "HF of T/(F^perp:I + (t))\n" << hf_rows(w.profile.values);
  os << "lower bound  " << w.bound << "  (sum " << w.hf_sum << ")\n";
  if (c.upper) {
    os << "upper bound  " << c.upper->count() << " points";
    if (c.upper->field)
      os << " over Q[" << c.upper->field->generator() << "]/("
         << c.upper->field->modulus().to_string(c.upper->field->generator()) << ")";
    os << "\n";
  } else if (c.cited_rank) {
    os << "upper bound  " << *c.cited_rank << " (cited: " << c.citation << ")\n";
  } else {
    os << "upper bound  none\n";
  }
  os << "status       " << to_string(c.status) << "\n";
  return os.str();
}

std::string family_headline(const FamilyRank& r) {
  std::ostringstream os;
  if (r.exact()) os << "rank = " << r.low;
  else os << "rank in [" << r.low << ", " << r.high << "]";
  os << " (" << to_string(r.match.tag) << ", " << status_word(r) << ")";
  return os.str();
}

std::string family_text(const FamilyRank& r) {
  std::ostringstream os;
  os << family_headline(r) << "\n";
  os << "family       " << to_string(r.match.tag);
  if (!r.match.parameters.empty()) {
    os << " (";
    for (std::size_t k = 0; k < r.match.parameters.size(); ++k) os << (k ? ", " : "") << r.match.parameters[k];
    os << ")";
  }
  os << "\n";
  os << "citation     " << r.match.citation << "\n";
  if (r.lower_source != "engine") os << "lower from   " << r.lower_source << "\n";
  os << certificate_text(r.certificate);
  for (const auto& n : r.notes) os << "note         " << n << "\n";
  return os.str();
}

std::string sylvester_text(const SylvesterResult& s) {
  std::ostringstream os;
  os << "h1           " << to_string(s.h1, Role::T) << "  (degree " << s.d1 << ", "
     << (s.squarefree_h1 ? "squarefree" : "not squarefree") << ")\n";
  os << "h2           " << to_string(s.h2, Role::T) << "  (degree " << s.d2 << ")\n";
  os << "rank         " << s.rank << "\n";
  if (s.lower)
    os << "lower bound  " << s.lower->bound << "  (t = " << to_string(s.lower->t, Role::T) << ", e = " << s.lower->e
       << ")\n";
  for (const auto& n : s.notes) os << "note         " << n << "\n";
  return os.str();
}

std::string strassen_text(const StrassenReport& r) {
  std::ostringstream os;
  std::size_t width = 4;
  for (const auto& s : r.summands) width = std::max(width, to_string(s.part).size());
  os << std::left << std::setw(static_cast<int>(width)) << "summand"
     << "  family               rank      cert  perp_e\n";
  for (const auto& s : r.summands) {
    std::string fam = s.pure_power ? "pure power" : to_string(s.family->match.tag);
    std::string rank = s.low == s.high ? std::to_string(s.low)
                                       : "[" + std::to_string(s.low) + "," + std::to_string(s.high) + "]";
    std::string perp = s.checks.perp_e_zero ? (*s.checks.perp_e_zero ? "yes" : "no") : "-";
    os << std::left << std::setw(static_cast<int>(width)) << to_string(s.part) << "  " << std::setw(20) << fam
       << " " << std::setw(9) << rank << " " << std::setw(5) << (s.checks.e_computable_certified ? "yes" : "no")
       << " " << perp << "\n";
  }
  os << "shared e     " << (r.shared_e ? std::to_string(r.shared_e) : "none") << "\n";
  if (r.total_rank) os << "total rank   " << *r.total_rank << "\n";
  else os << "interval     [" << r.interval_low << ", " << r.interval_high << "]\n";
  if (r.naive_term_sum) os << "term sum     " << *r.naive_term_sum << "\n";
  if (r.joint_check)
    os << "joint HF     " << r.joint_check->intersection_sum << " (expected " << r.joint_check->expected << ")\n";
  os << "verdict      " << to_string(r.verdict) << "\n";
  for (const auto& n : r.notes) os << "note         " << n << "\n";
  return os.str();
}

}  // namespace apolar
