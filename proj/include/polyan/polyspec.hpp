#pragma once

#include <optional>
#include <string>

#include "polyan/modring.hpp"

namespace polyan {

// Trinomial shorthand "tri:r,s[,sss]" for sign0 + sign_s t^s + sign_r t^r,
// signs given as a three-character +/- string (default "+++"), order
// q_0, q_s, q_r.
struct TrinomialSpec {
  int r = 0, s = 0;
  int sign0 = 1, sign_s = 1, sign_r = 1;
  IntPoly to_poly() const;
};

// Accepted grammars:
//   "1,-1,1"       comma-separated coefficients, low to high
//   "tri:5,2,+-+"  trinomial shorthand
// Throws std::invalid_argument on malformed input.
IntPoly parse_poly(const std::string& s);

std::optional<TrinomialSpec> parse_trinomial(const std::string& s);

// Comma form, low to high: the canonical print; parse(print(q)) == q.
std::string poly_to_string(const IntPoly& q);

// Pretty form for reports, e.g. "1-t+t^2".
std::string poly_pretty(const IntPoly& q);

}  // namespace polyan
