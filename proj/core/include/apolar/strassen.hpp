#ifndef APOLAR_STRASSEN_HPP
#define APOLAR_STRASSEN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apolar/families.hpp"

namespace apolar {

enum class Verdict { Certified, Conditional, Failed };
const char* to_string(Verdict v);

struct SummandChecks {
  bool disjoint = false;
  bool e_computable_certified = false;
  std::optional<bool> perp_e_zero;  // not checked for pure powers
  bool essential_vars_reduced = false;
};

struct Summand {
  Poly part;                        // over its own variable block
  std::vector<std::size_t> variables;  // indices into F.vars()
  Poly reduced;                     // after essential_vars
  bool pure_power = false;
  std::optional<FamilyRank> family;  // absent for pure powers
  std::vector<unsigned> admissible;  // e values with a family certificate
  std::size_t low = 0, high = 0;
  SummandChecks checks;
};

struct JointHFReport {
  bool holds = false;
  std::vector<std::size_t> intersection_profile;  // HF(T / J_1 ∩ ... ∩ J_m)
  std::size_t intersection_sum = 0;
  std::vector<std::size_t> summand_sums;          // Σ HF(T / J_i)
  std::size_t expected = 0;                       // Σ summand_sums - m + 1
};

struct StrassenReport {
  Poly form;
  std::vector<Summand> summands;
  unsigned shared_e = 0;  // 0 when the summands admit no common e
  std::optional<std::size_t> total_rank;
  std::size_t interval_low = 0, interval_high = 0;
  Verdict verdict = Verdict::Failed;
  // one variable block with several terms: additivity is not applicable
  bool single_block = false;
  std::optional<std::size_t> naive_term_sum;
  std::optional<JointHFReport> joint_check;
  std::vector<std::string> citations;
  std::vector<std::string> notes;
};

struct StrassenOptions {
  unsigned e = 0;  // 0 = smallest common admissible e
  std::uint64_t seed = 1;
  // Hilbert function check in the joint ring; skipped when dim T_{d+1} exceeds this
  std::size_t joint_check_limit = 2500;
};

StrassenReport strassen_rank(const Poly& F, const StrassenOptions& opts = {});

/// J_i = F_i^perp : I_i + (t_i) in the joint ring; checks
/// Σ HF(T / ∩ J_i) = Σ_i Σ HF(T / J_i) - m + 1.
JointHFReport joint_hf_check(const VarSet& joint, const std::vector<Poly>& parts,
                               const std::vector<LowerBoundWitness>& witnesses);

}  // namespace apolar

#endif
