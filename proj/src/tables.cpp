#include "polyan/tables.hpp"

#include <cstdio>

#include "polyan/polyspec.hpp"

namespace polyan {

const std::vector<Table2Row>& table2_golden() {
  static const std::vector<Table2Row> rows = {
      {1, 0, "0"},      {2, 1, "1.78"},   {3, 0, "0"},      {4, 0, "0"},
      {5, 1, "0.70"},   {6, 0, "0"},      {7, 0, "0"},      {8, 0, "0"},
      {9, 3, "0.83"},   {10, 1, "0.30"},  {11, 1, "0.13"},  {12, 1, "0.22"},
      {13, 5, "0.33"},  {14, 5, "0.37"},  {15, 15, "0.62"}, {16, 12, "0.58"},
      {17, 26, "0.45"}, {18, 18, "0.41"}, {19, 62, "0.53"}, {20, 34, "0.45"},
      {21, 79, "0.3923"},   {22, 94, "0.4390"},   {23, 231, "0.4837"},  {24, 129, "0.4650"},
      {25, 428, "0.4388"},  {26, 448, "0.4615"},  {27, 883, "0.4964"},  {28, 635, "0.4218"},
      {29, 1933, "0.4410"}, {30, 1470, "0.4619"}, {31, 4380, "0.4721"}, {32, 3125, "0.4636"},
      {33, 7232, "0.4549"}, {34, 8862, "0.4656"}, {35, 18870, "0.4792"}, {36, 10516, "0.4560"},
      {37, 40082, "0.4547"}, {38, 39858, "0.4623"}, {39, 75370, "0.4712"}, {40, 54758, "0.4598"},
  };
  return rows;
}

const std::vector<IntPoly>& table1_golden() {
  static const std::vector<IntPoly> polys = [] {
    const char* specs[] = {
        // r = 2
        "1,-1,1",
        // r = 5
        "1,-1,-1,0,1,1",
        // r = 9
        "1,-1,1,1,-1,0,-1,0,0,1",
        "1,-1,1,-1,-1,0,0,0,1,1",
        "1,-1,1,-1,-1,-1,1,0,1,1",
        // r = 10
        "1,-1,1,1,1,0,1,-1,0,1,1",
        // r = 11
        "1,-1,1,-1,-1,1,1,0,-1,0,0,1",
        // r = 12
        "1,-1,1,-1,-1,0,0,0,-1,1,0,1,1",
        // r = 13
        "1,-1,1,-1,1,-1,-1,0,0,0,0,0,1,1",
        "1,-1,1,-1,1,-1,-1,-1,1,0,0,0,1,1",
        "1,-1,-1,0,-1,0,-1,1,-1,1,1,0,1,1",
        "1,-1,1,1,1,1,0,1,0,1,0,-1,-1,1",
        "1,-1,1,1,1,1,0,0,-1,-1,0,-1,-1,1",
        // r = 14
        "1,-1,1,1,-1,0,-1,-1,1,1,0,-1,0,0,1",
        "1,1,0,1,-1,-1,1,1,1,1,0,-1,0,0,1",
        "1,-1,-1,1,0,-1,1,1,-1,-1,0,0,0,1,1",
        "1,-1,-1,-1,0,-1,0,1,0,1,1,-1,0,1,1",
        "1,-1,-1,0,1,0,-1,0,1,1,1,1,0,1,1",
    };
    std::vector<IntPoly> out;
    for (const char* s : specs) out.push_back(parse_poly(s));
    return out;
  }();
  return polys;
}

std::string format_nu_bar(int r, uint64_t nu, double value) {
  if (nu == 0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, r <= 20 ? "%.2f" : "%.4f", value);
  return buf;
}

}  // namespace polyan
