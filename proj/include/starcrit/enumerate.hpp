#ifndef STARCRIT_ENUMERATE_HPP
#define STARCRIT_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "starcrit/structures.hpp"

namespace starcrit {

// One enumeration job: all sorted d-hat vectors of length n whose
// reciprocals sum to d0_filter (or to any positive integer when unset),
// optionally restricted to a fixed nondecreasing prefix.
struct EnumSpec {
  std::size_t n = 1;
  std::optional<BigInt> d0_filter;
  std::optional<std::uint64_t> max_results;
  std::vector<BigInt> prefix;
};

// Return false to stop early.
using DhatCallback = std::function<bool(const DhatVector &)>;

// Streams every solution exactly once, in strictly increasing lexicographic
// order, constant memory per active path. Returns false when the callback
// stopped the run (or max_results was hit), true on completion.
bool enumerate_structures(const EnumSpec &spec, const DhatCallback &fn);

std::uint64_t count_structures(const EnumSpec &spec);

// Child specs with fixed prefixes extended by `depth` positions: pairwise
// disjoint streams whose union, in child order, is the parent stream in the
// parent's order. Children may be empty (bounds are necessary conditions).
std::vector<EnumSpec> partition_work(const EnumSpec &spec, std::size_t depth);

}  // namespace starcrit

#endif
