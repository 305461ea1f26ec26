#include "starcrit/numeric.hpp"

#include <sstream>

namespace starcrit {

std::vector<BigInt> parse_bigint_list(const std::string &s) {
  std::vector<BigInt> out;
  std::string token;
  std::istringstream in(s);
  while (std::getline(in, token, ',')) {
    std::size_t a = token.find_first_not_of(" \t");
    std::size_t b = token.find_last_not_of(" \t");
    if (a == std::string::npos) throw std::invalid_argument("empty entry in integer list");
    out.push_back(parse_bigint(token.substr(a, b - a + 1)));
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

std::string join(const std::vector<BigInt> &values, const std::string &sep) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += sep;
    s += values[i].get_str();
  }
  return s;
}

}  // namespace starcrit
