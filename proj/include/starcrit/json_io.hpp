#ifndef STARCRIT_JSON_IO_HPP
#define STARCRIT_JSON_IO_HPP

#include <json.hpp>

#include "starcrit/abelian.hpp"
#include "starcrit/critical.hpp"
#include "starcrit/structures.hpp"

namespace starcrit {

// All integers serialize as decimal strings; values routinely exceed 64 bits.
nlohmann::json to_json(const BigInt &v);
nlohmann::json to_json(const std::vector<BigInt> &v);
nlohmann::json to_json(const FiniteAbelianGroup &g);

// {"shape","n","d","r","d0","r0"}; for stars d/r list the leaves and d0/r0
// carry the center, for complete graphs d0/r0 describe the clique-star image.
nlohmann::json to_json(const ArithmeticalStructure &s);
nlohmann::json to_json(const DhatVector &dhat);

nlohmann::json to_json(const CriticalGroupResult &r);

}  // namespace starcrit

#endif
