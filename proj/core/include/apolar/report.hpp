#ifndef APOLAR_REPORT_HPP
#define APOLAR_REPORT_HPP

#include <string>
#include <vector>

#include "apolar/strassen.hpp"

namespace apolar {

// JSON documents (pretty-printed, keys in a fixed order, deterministic).
// Field elements appear as coordinate vectors of rational strings over the
// power basis of the declared extension.
std::string certificate_json(const RankCertificate& c);
std::string family_json(const FamilyRank& r);
std::string sylvester_json(const Poly& F, const SylvesterResult& s);
std::string strassen_json(const StrassenReport& r);
std::string lower_bound_json(const Poly& F, const LowerBoundWitness& w);
std::string upper_bound_json(const Poly& F, const std::optional<UpperBoundWitness>& w);

// Aligned plain-text renderings.
std::string hf_rows(const std::vector<std::size_t>& values, const std::string& indent = "  ");
std::string certificate_text(const RankCertificate& c);
std::string family_headline(const FamilyRank& r);
std::string family_text(const FamilyRank& r);
std::string sylvester_text(const SylvesterResult& s);
std::string strassen_text(const StrassenReport& r);
std::string point_text(const Point& p);

}  // namespace apolar

#endif
