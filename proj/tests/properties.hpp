#ifndef APOLAR_TESTS_PROPERTIES_HPP
#define APOLAR_TESTS_PROPERTIES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace props {

struct Outcome {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

Outcome contraction(std::size_t cases, std::uint64_t seed);
Outcome bilinearity(std::size_t cases, std::uint64_t seed);
Outcome composition(std::size_t cases, std::uint64_t seed);
Outcome gorenstein_symmetry(std::size_t cases, std::uint64_t seed);
Outcome colon_two_ways(std::size_t cases, std::uint64_t seed);
Outcome multiplicity_identity(std::size_t cases, std::uint64_t seed);
Outcome embedding_invariance(std::size_t cases, std::uint64_t seed);
Outcome essential_round_trip(std::size_t cases, std::uint64_t seed);
Outcome grassmann_dimension(std::size_t cases, std::uint64_t seed);

// Every suite at its standard size; the sizes add up to 10000.
std::vector<Outcome> run_all(std::uint64_t seed = 20240601);

}  // namespace props

#endif
