#include "starcrit/json_io.hpp"

namespace starcrit {

nlohmann::json to_json(const BigInt &v) { return v.get_str(); }

nlohmann::json to_json(const std::vector<BigInt> &v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const BigInt &x : v) arr.push_back(x.get_str());
  return arr;
}

nlohmann::json to_json(const FiniteAbelianGroup &g) {
  return to_json(g.invariant_factors());
}

nlohmann::json to_json(const ArithmeticalStructure &s) {
  nlohmann::json j;
  j["shape"] = to_string(s.shape.kind);
  j["n"] = s.shape.n;
  if (s.shape.kind == GraphKind::star) {
    j["d"] = to_json(std::vector<BigInt>(s.d.begin(), s.d.end() - 1));
    j["r"] = to_json(std::vector<BigInt>(s.r.begin(), s.r.end() - 1));
    j["d0"] = s.d.back().get_str();
    j["r0"] = s.r.back().get_str();
  } else {
    j["d"] = to_json(s.d);
    j["r"] = to_json(s.r);
    BigInt rsum = 0;
    for (const BigInt &rv : s.r) rsum += rv;
    j["d0"] = "1";
    j["r0"] = rsum.get_str();
  }
  return j;
}

nlohmann::json to_json(const DhatVector &dhat) {
  nlohmann::json j;
  j["n"] = dhat.n();
  j["d"] = to_json(dhat.entries());
  j["d0"] = dhat.d0().get_str();
  j["r0"] = dhat.r0().get_str();
  return j;
}

nlohmann::json to_json(const CriticalGroupResult &r) {
  nlohmann::json j;
  j["group"] = to_json(r.group);
  j["group_str"] = r.group.str();
  j["method"] = to_string(r.method);
  j["order"] = r.order.get_str();
  return j;
}

}  // namespace starcrit
