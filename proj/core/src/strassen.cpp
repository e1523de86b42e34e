#include "apolar/strassen.hpp"

#include <algorithm>
#include <set>

#include "apolar/error.hpp"

namespace apolar {

namespace {
constexpr std::string_view kModule = "strassen";

std::size_t term_rank(const Monomial& m) {
  std::vector<unsigned> ex;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] > 0) ex.push_back(m[i]);
  std::sort(ex.begin(), ex.end());
  std::size_t p = 1;
  for (std::size_t k = 1; k < ex.size(); ++k) p *= ex[k] + 1;
  return p;
}

bool certified(const FamilyRank& r) {
  return r.engine_matches() && (r.certificate.status == CertStatus::CertifiedEqual ||
                                r.certificate.status == CertStatus::CitedUpper);
}

std::string join(const std::vector<unsigned>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s.empty() ? "none" : s;
}
}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "certified";
    case Verdict::Conditional: return "conditional";
    case Verdict::Failed: return "failed";
  }
  return "failed";
}

JointHFReport joint_hf_check(const VarSet& joint, const std::vector<Poly>& parts,
                               const std::vector<LowerBoundWitness>& witnesses) {
  if (parts.empty() || parts.size() != witnesses.size())
    raise(Errc::InvalidInput, kModule, "one witness per summand is required");
  unsigned d = 0;
  for (const auto& p : parts) d = std::max(d, static_cast<unsigned>(p.degree()));
  const unsigned D = d + 1;
  JointHFReport rep;
  std::optional<GradedIdeal> cap;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    Poly Fi = parts[i].embedded(joint);
    std::vector<Poly> gens;
    for (const auto& g : witnesses[i].ideal_generators) gens.push_back(g.embedded(joint));
    GradedIdeal J = add_principal(colon_by_ideal(Fi, gens, D), witnesses[i].t.embedded(joint));
    rep.summand_sums.push_back(hf(J).sum());
    cap = cap ? intersect(*cap, J) : J;
  }
  HFProfile prof = hf(*cap);
  rep.intersection_profile = prof.values;
  rep.intersection_sum = prof.sum();
  std::size_t total = 0;
  for (auto s : rep.summand_sums) total += s;
  rep.expected = total + 1 - parts.size();
  rep.holds = rep.intersection_sum == rep.expected;
  return rep;
}

StrassenReport strassen_rank(const Poly& F, const StrassenOptions& opts) {
  if (F.is_zero()) raise(Errc::ZeroForm, kModule, "the zero form has no rank");
  auto comps = split_disjoint(F);
  if (!F.is_homogeneous()) {
    std::string degs;
    for (const auto& c : comps) degs += (degs.empty() ? "" : ", ") + std::to_string(c.part.degree());
    raise(Errc::MixedDegrees, kModule, "summands of unequal degree (" + degs + ")");
  }
  StrassenReport rep;
  rep.form = F;
  const VarSet& vars = F.vars();
  std::set<std::size_t> seen;

  for (const auto& c : comps) {
    Summand s;
    s.variables = c.variables;
    s.part = c.part.restricted(vars.subset(c.variables));
    s.checks.disjoint = true;
    for (auto v : c.variables)
      if (!seen.insert(v).second) s.checks.disjoint = false;
    EssentialReduction red = essential_vars(s.part);
    s.reduced = red.reduced;
    s.checks.essential_vars_reduced = kernel(catalecticant(s.reduced, 1)).dim() == 0;
    s.pure_power = s.reduced.vars().size() == 1;
    if (s.pure_power) {
      s.low = s.high = 1;
      s.admissible = {};
    } else {
      FamilyMatch m = classify(s.part);
      s.admissible = admissible_e(s.part, m);
      s.family = FamilyRank{};
      s.family->match = m;
    }
    rep.summands.push_back(std::move(s));
  }

  // one block with several terms: the sum has a common factor or shared
  // variables, and additivity over its terms is not available
  if (rep.summands.size() == 1 && !rep.summands[0].pure_power && rep.summands[0].part.size() > 1) {
    Summand& s = rep.summands[0];
    rep.single_block = true;
    FamilyOptions fo;
    fo.e = opts.e;
    fo.seed = opts.seed;
    s.family = certify_family(s.part, s.family->match, fo);
    s.low = s.family->low;
    s.high = s.family->high;
    s.checks.e_computable_certified = certified(*s.family);
    std::size_t naive = 0;
    for (const auto& [m, c] : s.part.terms()) naive += term_rank(m);
    rep.naive_term_sum = naive;
    rep.interval_low = s.low;
    rep.interval_high = s.high;
    rep.shared_e = s.family->certificate.lower.e;
    rep.verdict = Verdict::Failed;
    rep.notes.push_back("single variable block: additivity over its terms does not apply");
    rep.notes.push_back("family rank [" + std::to_string(s.low) + ", " + std::to_string(s.high) +
                        "] against the term-by-term sum " + std::to_string(naive));
    rep.citations.push_back(s.family->match.citation);
    return rep;
  }

  // shared e
  std::vector<unsigned> common;
  bool first = true;
  for (const auto& s : rep.summands) {
    if (s.pure_power) continue;
    if (first) {
      common = s.admissible;
      first = false;
      continue;
    }
    std::vector<unsigned> next;
    std::set_intersection(common.begin(), common.end(), s.admissible.begin(), s.admissible.end(),
                          std::back_inserter(next));
    common = std::move(next);
  }
  if (first) common = {1};  // only pure powers
  unsigned e = 0;
  if (opts.e != 0) {
    if (std::find(common.begin(), common.end(), opts.e) != common.end()) e = opts.e;
    else rep.notes.push_back("requested e = " + std::to_string(opts.e) + " is not admissible for every summand");
  } else if (!common.empty()) {
    e = common.front();
  }
  rep.shared_e = e;

  bool all_ok = e != 0;
  bool gap = false;
  for (auto& s : rep.summands) {
    if (s.pure_power) {
      s.checks.e_computable_certified = true;
      rep.citations.push_back("adding d-th power of a new variable raises the rank by one");
      continue;
    }
    FamilyOptions fo;
    fo.seed = opts.seed;
    // without a common e, certify each summand at its own smallest e
    fo.e = e != 0 ? e : (s.admissible.empty() ? 0 : s.admissible.front());
    s.family = certify_family(s.part, s.family->match, fo);
    s.low = s.family->low;
    s.high = s.family->high;
    s.checks.e_computable_certified = certified(*s.family);
    if (e != 0) s.checks.perp_e_zero = kernel(catalecticant(s.reduced, e)).dim() == 0;
    if (!s.checks.e_computable_certified) gap = true;
    if (!s.checks.e_computable_certified || !s.checks.disjoint || !s.checks.essential_vars_reduced ||
        (s.checks.perp_e_zero && !*s.checks.perp_e_zero))
      all_ok = false;
    rep.citations.push_back(s.family->match.citation);
  }
  for (const auto& s : rep.summands) {
    rep.interval_low += s.low;
    rep.interval_high += s.high;
  }
  if (all_ok) {
    rep.verdict = Verdict::Certified;
    rep.total_rank = rep.interval_low;
    rep.citations.push_back("additivity for e-computable summands with (F_i^perp)_e = 0");
  } else if (e == 0 && !gap) {
    rep.verdict = Verdict::Conditional;
    std::vector<std::string> per;
    for (const auto& s : rep.summands)
      if (!s.pure_power) per.push_back(join(s.admissible));
    std::string list;
    for (const auto& p : per) list += (list.empty() ? "{" : ", {") + p + "}";
    rep.notes.push_back("no common e: summand certificates exist at e in " + list);
    rep.notes.push_back("the interval is the sum of summand ranks and assumes additivity");
    rep.notes.push_back("open: whether each summand is e-computable at a common e");
  } else {
    rep.verdict = Verdict::Failed;
    rep.notes.push_back(gap ? "some summand has bounds only; interval is the sum of summand bounds"
                            : "a hypothesis check failed at e = " + std::to_string(e));
  }

  // internal consistency in the joint ring
  std::vector<Poly> parts;
  std::vector<LowerBoundWitness> wits;
  for (const auto& s : rep.summands)
    if (!s.pure_power && s.family) {
      parts.push_back(s.part);
      wits.push_back(s.family->certificate.lower);
    }
  if (rep.verdict == Verdict::Certified && parts.size() >= 2 && F.degree() >= 0 &&
      monomial_count(vars.size(), static_cast<unsigned>(F.degree()) + 1) <= opts.joint_check_limit) {
    rep.joint_check = joint_hf_check(vars, parts, wits);
    if (!rep.joint_check->holds) {
      rep.verdict = Verdict::Failed;
      rep.total_rank.reset();
      rep.notes.push_back("joint-ring Hilbert function identity failed");
    }
  }
  return rep;
}

}  // namespace apolar
