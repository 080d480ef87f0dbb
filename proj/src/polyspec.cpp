#include "polyan/polyspec.hpp"

#include <cstdlib>
#include <stdexcept>

namespace polyan {

IntPoly TrinomialSpec::to_poly() const {
  if (!(r > s && s > 0)) throw std::invalid_argument("trinomial: need r > s > 0");
  std::vector<int64_t> c(size_t(r) + 1, 0);
  c[0] = sign0;
  c[size_t(s)] = sign_s;
  c[size_t(r)] = sign_r;
  return IntPoly(std::move(c));
}

namespace {

int64_t parse_int(const std::string& tok) {
  if (tok.empty()) throw std::invalid_argument("poly: empty coefficient");
  size_t pos = 0;
  long long v;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("poly: bad integer '" + tok + "'");
  }
  if (pos != tok.size()) throw std::invalid_argument("poly: bad integer '" + tok + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t p = s.find(sep, start);
    out.push_back(s.substr(start, p == std::string::npos ? p : p - start));
    if (p == std::string::npos) break;
    start = p + 1;
  }
  return out;
}

}  // namespace

std::optional<TrinomialSpec> parse_trinomial(const std::string& s) {
  if (s.rfind("tri:", 0) != 0) return std::nullopt;
  auto parts = split(s.substr(4), ',');
  if (parts.size() < 2 || parts.size() > 3)
    throw std::invalid_argument("poly: trinomial form is tri:r,s[,+-+]");
  TrinomialSpec t;
  t.r = int(parse_int(parts[0]));
  t.s = int(parse_int(parts[1]));
  if (!(t.r > t.s && t.s > 0))
    throw std::invalid_argument("poly: trinomial needs r > s > 0");
  if (parts.size() == 3) {
    const std::string& sg = parts[2];
    if (sg.size() != 3 || sg.find_first_not_of("+-") != std::string::npos)
      throw std::invalid_argument("poly: sign string must be three of +/-");
    t.sign0 = sg[0] == '+' ? 1 : -1;
    t.sign_s = sg[1] == '+' ? 1 : -1;
    t.sign_r = sg[2] == '+' ? 1 : -1;
  }
  return t;
}

IntPoly parse_poly(const std::string& s) {
  if (auto t = parse_trinomial(s)) return t->to_poly();
  std::vector<int64_t> c;
  for (const auto& tok : split(s, ',')) c.push_back(parse_int(tok));
  IntPoly q(std::move(c));
  if (q.is_zero()) throw std::invalid_argument("poly: zero polynomial");
  return q;
}

std::string poly_to_string(const IntPoly& q) {
  if (q.is_zero()) return "0";
  std::string out;
  for (int j = 0; j <= q.degree(); ++j) {
    if (j) out += ",";
    out += std::to_string(q.coeff(j));
  }
  return out;
}

std::string poly_pretty(const IntPoly& q) {
  if (q.is_zero()) return "0";
  std::string out;
  for (int j = 0; j <= q.degree(); ++j) {
    int64_t v = q.coeff(j);
    if (v == 0) continue;
    std::string mag;
    if (j == 0)
      mag = std::to_string(v < 0 ? -v : v);
    else {
      if (v != 1 && v != -1) mag = std::to_string(v < 0 ? -v : v) + "*";
      mag += j == 1 ? "t" : "t^" + std::to_string(j);
    }
    if (out.empty())
      out = (v < 0 ? "-" : "") + mag;
    else
      out += (v < 0 ? "-" : "+") + mag;
  }
  return out;
}

}  // namespace polyan
