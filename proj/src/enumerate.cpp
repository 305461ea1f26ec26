#include "starcrit/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

#include "starcrit/factor.hpp"
#include "starcrit/rational.hpp"

namespace starcrit {

namespace {

// Beyond this many candidates, the two-slots-left case switches from a
// linear scan to divisor enumeration on (px - q)(py - q) = q^2.
constexpr long kTailScanLimit = 2048;

struct Walker {
  std::size_t n;
  std::optional<BigInt> filter;
  const DhatCallback *fn;
  std::vector<BigInt> entries;
  bool stopped = false;

  bool emit() {
    if (!(*fn)(DhatVector(entries))) {
      stopped = true;
      return false;
    }
    return true;
  }

  // Solutions of 1/x + 1/y = rem with lo <= x <= y, emitted in order of x.
  // The substitution u = px - q turns the equation into u * (py - q) = q^2,
  // so x runs over divisors u <= q of q^2 with u = -q (mod p).
  bool solve_tail_pair(const Rational &rem, const BigInt &lo) {
    if (!rem.is_positive()) return true;
    const BigInt p = rem.numerator(), q = rem.denominator();
    // x > q/p and x <= 2q/p
    BigInt xmax = (2 * q) / p;
    BigInt xmin = std::max(lo, BigInt(q / p + 1));
    if (xmin > xmax) return true;
    if (xmax - xmin < kTailScanLimit) {
      for (BigInt x = xmin; x <= xmax; ++x) {
        BigInt u = p * x - q;
        BigInt num = q * x;
        if (!divides(u, num)) continue;
        BigInt y = divexact(num, u);
        if (y < x) break;
        entries.push_back(x);
        entries.push_back(y);
        bool keep = emit();
        entries.pop_back();
        entries.pop_back();
        if (!keep) return false;
      }
      return true;
    }
    std::vector<BigInt> us;
    {
      Factorization qf = factorize(q);
      std::vector<BigInt> divs{1};
      for (auto &[pr, e] : qf) {
        const std::size_t base = divs.size();
        BigInt pk = 1;
        for (unsigned k = 1; k <= 2 * e; ++k) {
          pk *= pr;
          if (pk > q) break;
          for (std::size_t i = 0; i < base; ++i) {
            BigInt d = divs[i] * pk;
            if (d <= q) divs.push_back(d);
          }
        }
      }
      for (BigInt &u : divs)
        if ((u + q) % p == 0 && (u + q) / p >= xmin) us.push_back(u);
      std::sort(us.begin(), us.end());
    }
    for (const BigInt &u : us) {
      BigInt x = divexact(u + q, p);
      BigInt y = divexact(divexact(q * q, u) + q, p);
      entries.push_back(x);
      entries.push_back(y);
      bool keep = emit();
      entries.pop_back();
      entries.pop_back();
      if (!keep) return false;
    }
    return true;
  }

  // Targets live strictly above the partial sum s; with m slots each at
  // least `prev`, at most m/prev more can be added.
  bool walk(const Rational &s, const BigInt &prev, std::size_t m) {
    if (m == 1) {
      auto last = [&](const Rational &gap) -> bool {
        if (!gap.is_positive()) return true;
        if (gap.numerator() != 1) return true;
        BigInt d = gap.denominator();
        if (d < prev) return true;
        entries.push_back(d);
        bool keep = emit();
        entries.pop_back();
        return keep;
      };
      if (filter) return last(Rational(*filter) - s);
      return last(Rational(BigInt(s.floor() + 1)) - s);
    }
    if (m == 2) {
      if (filter) return solve_tail_pair(Rational(*filter) - s, prev);
      // At most two integer targets are within reach of two unit fractions.
      // Pairs for the higher target force x = 1 and lex-precede every pair
      // for the lower one, so the higher target goes first.
      for (int t = 2; t >= 1; --t) {
        Rational rem = Rational(BigInt(s.floor() + t)) - s;
        if (Rational(2, prev) < rem) continue;
        if (!solve_tail_pair(rem, prev)) return false;
      }
      return true;
    }
    Rational gap = (filter ? Rational(*filter) : Rational(BigInt(s.floor() + 1))) - s;
    if (!gap.is_positive()) return true;
    BigInt lo = prev;
    if (filter) {
      // a single entry may not overshoot the unique target
      lo = std::max(lo, gap.reciprocal().ceil());
    }
    BigInt hi = (Rational(BigInt(m)) / gap).floor();
    for (BigInt d = lo; d <= hi; ++d) {
      Rational s2 = s + unit_fraction(d);
      if (filter && Rational(*filter) <= s2) continue;  // no room for m-1 more entries
      entries.push_back(d);
      bool keep = walk(s2, d, m - 1);
      entries.pop_back();
      if (!keep) return false;
    }
    return true;
  }
};

struct PrefixState {
  Rational sum;
  BigInt prev = 1;
};

PrefixState prefix_state(const EnumSpec &spec) {
  if (spec.n < 1) throw std::invalid_argument("enumerate: n must be at least 1");
  if (spec.prefix.size() > spec.n)
    throw std::invalid_argument("enumerate: prefix longer than n");
  if (spec.d0_filter && (*spec.d0_filter < 1 || BigInt(spec.n) < *spec.d0_filter))
    throw std::invalid_argument("enumerate: d0 filter out of range 1..n");
  PrefixState st;
  for (std::size_t i = 0; i < spec.prefix.size(); ++i) {
    const BigInt &d = spec.prefix[i];
    if (d < 1 || (i > 0 && d < spec.prefix[i - 1]))
      throw std::invalid_argument("enumerate: prefix must be positive and nondecreasing");
    st.sum += unit_fraction(d);
    st.prev = d;
  }
  return st;
}

}  // namespace

bool enumerate_structures(const EnumSpec &spec, const DhatCallback &fn) {
  PrefixState st = prefix_state(spec);
  std::uint64_t seen = 0;
  DhatCallback capped = fn;
  if (spec.max_results) {
    capped = [&](const DhatVector &v) {
      if (seen >= *spec.max_results) return false;
      ++seen;
      if (!fn(v)) return false;
      return seen < *spec.max_results;
    };
  }

  Walker w;
  w.n = spec.n;
  w.filter = spec.d0_filter;
  w.fn = &capped;
  w.entries = spec.prefix;

  const std::size_t m = spec.n - spec.prefix.size();
  if (m == 0) {
    // the prefix is the whole vector; emit it when it qualifies
    bool integral = st.sum.is_integer() && st.sum.is_positive();
    bool matches = !spec.d0_filter || (integral && st.sum.numerator() == *spec.d0_filter);
    if (integral && matches) return capped(DhatVector(spec.prefix));
    return true;
  }
  w.walk(st.sum, st.prev, m);
  return !w.stopped;
}

std::uint64_t count_structures(const EnumSpec &spec) {
  std::uint64_t count = 0;
  enumerate_structures(spec, [&](const DhatVector &) {
    ++count;
    return true;
  });
  return count;
}

std::vector<EnumSpec> partition_work(const EnumSpec &spec, std::size_t depth) {
  if (depth < 1) throw std::invalid_argument("partition_work: depth must be at least 1");
  PrefixState st = prefix_state(spec);
  const std::size_t target_len =
      std::min(spec.prefix.size() + depth, spec.n > 2 ? spec.n - 2 : spec.n - 1);
  std::vector<EnumSpec> children;
  if (target_len <= spec.prefix.size()) {
    children.push_back(spec);
    return children;
  }

  // depth-limited walk over feasible prefixes; bounds are the same
  // necessary conditions the full walker uses
  std::vector<BigInt> cur = spec.prefix;
  std::function<void(Rational, BigInt)> rec = [&](Rational s, BigInt prev) {
    if (cur.size() == target_len) {
      EnumSpec child = spec;
      child.prefix = cur;
      children.push_back(std::move(child));
      return;
    }
    const std::size_t m = spec.n - cur.size();
    Rational gap = (spec.d0_filter ? Rational(*spec.d0_filter) : Rational(BigInt(s.floor() + 1))) - s;
    if (!gap.is_positive()) return;
    BigInt lo = prev;
    if (spec.d0_filter) lo = std::max(lo, gap.reciprocal().ceil());
    BigInt hi = (Rational(BigInt(m)) / gap).floor();
    for (BigInt d = lo; d <= hi; ++d) {
      Rational s2 = s + unit_fraction(d);
      if (spec.d0_filter && Rational(*spec.d0_filter) <= s2 && m > 1) continue;
      cur.push_back(d);
      rec(s2, d);
      cur.pop_back();
    }
  };
  rec(st.sum, st.prev);
  return children;
}

}  // namespace starcrit
