#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyan/modring.hpp"

namespace polyan {

// Reference values for the exceptional-polynomial counts and the
// normalized ratio as printed: two decimals through r = 20, four beyond,
// plain "0" when the count is zero.
struct Table2Row {
  int r;
  uint64_t nu;
  const char* nu_bar;
};

const std::vector<Table2Row>& table2_golden();  // r = 1..40

// The 18 exceptional polynomials of degree <= 14, one representative per
// reversal pair.
const std::vector<IntPoly>& table1_golden();

// Print nu_bar the way the reference table does.
std::string format_nu_bar(int r, uint64_t nu, double value);

}  // namespace polyan
