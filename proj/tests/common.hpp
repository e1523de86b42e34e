#ifndef APOLAR_TESTS_COMMON_HPP
#define APOLAR_TESTS_COMMON_HPP

#include <gtest/gtest.h>

#include "apolar/error.hpp"
#include "apolar/parse.hpp"

namespace testutil {

inline apolar::Poly P(std::string_view text) { return apolar::parse_poly(text); }

inline apolar::Poly P(std::string_view text, const apolar::VarSet& vars, apolar::FieldRef ext = nullptr) {
  apolar::ParseOptions o;
  o.vars = vars;
  o.ext = std::move(ext);
  return apolar::parse_poly(text, o);
}

// A dual form (X0, W, ...) over the variables of F.
inline apolar::Poly T(std::string_view text, const apolar::Poly& F) {
  apolar::ParseOptions o;
  o.vars = F.vars();
  o.role = apolar::Role::T;
  o.ext = F.field();
  return apolar::parse_poly(text, o);
}

inline std::vector<apolar::Poly> Ts(std::string_view text, const apolar::Poly& F) {
  apolar::ParseOptions o;
  o.vars = F.vars();
  o.role = apolar::Role::T;
  return apolar::parse_poly_list(text, o);
}

inline const char* kDegree11 =
    "x^11 - 22*x^9*y^2 + 33*x^7*y^4 - 22*x^9*z^2 + 396*x^7*y^2*z^2 - 462*x^5*y^4*z^2 + 33*x^7*z^4 - "
    "462*x^5*y^2*z^4 + 385*x^3*y^4*z^4";

}  // namespace testutil

#define EXPECT_ERRC(stmt, errc)                                  \
  do {                                                           \
    try {                                                        \
      stmt;                                                      \
      ADD_FAILURE() << "expected " #errc;                        \
    } catch (const apolar::Error& e_) {                          \
      EXPECT_EQ(e_.code(), apolar::Errc::errc) << e_.what();     \
    }                                                            \
  } while (0)

#endif
