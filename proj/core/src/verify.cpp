#include "unref/verify.hpp"

#include <algorithm>
#include <string>

namespace unref {

bool is_valid_witness(const StarSequence& s, const Witness& w) {
  if (w.pieces.size() < 2) return false;
  if (w.part < 1 || w.part > s.length() || !s.is_part(w.part)) return false;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < w.pieces.size(); ++i) {
    const auto x = w.pieces[i];
    if (x < 1 || x > s.length() || !s.is_missing(x)) return false;
    if (i > 0 && w.pieces[i - 1] >= x) return false;
    total += x;
  }
  return total == w.part;
}

ScanState scan(const StarSequence& s, std::optional<std::int64_t> upto) {
  ScanState state;
  state.mu = s.mex();
  if (state.mu == 0) return state;

  const std::int64_t last = std::min(upto.value_or(s.length()), s.length());
  state.table = ResidueTable(state.mu);
  std::int64_t j = state.mu == 1 ? 0 : 1;  // (mu + 1) mod mu
  for (std::int64_t r = state.mu + 1; r <= last; ++r) {
    if (s.is_part(r)) {
      if (!state.table.admits(r, j)) {
        state.refuted_at = r;
        return state;
      }
    } else {
      state.table.apply(r, j);
    }
    if (++j == state.mu) j = 0;
  }
  return state;
}

Verdict verify_fast(const StarSequence& s) {
  return scan(s).refuted_at != 0 ? Verdict::make_refinable() : Verdict::make_unrefinable();
}

Verdict verify_naive(const StarSequence& s) {
  const auto n = s.length();
  for (std::int64_t r = 1; r <= n; ++r) {
    if (!s.is_part(r)) continue;
    for (std::int64_t a = 1; 2 * a < r; ++a) {
      if (s.is_missing(a) && s.is_missing(r - a)) {
        return Verdict::make_refinable(Witness{r, {a, r - a}});
      }
    }
  }
  return Verdict::make_unrefinable();
}

namespace {

// Depth-first search for `count` increasing elements of `pool[from..]`
// summing to `target`. Pool is ascending, so the first hit is the
// lexicographically smallest.
bool find_subset(const std::vector<std::int64_t>& pool, std::size_t from, std::int64_t target,
                 std::size_t count, std::vector<std::int64_t>& chosen) {
  if (count == 0) return target == 0;
  for (std::size_t i = from; i < pool.size(); ++i) {
    const auto x = pool[i];
    // The smallest completion uses x and the next count-1 pool entries.
    std::int64_t least = 0;
    if (i + count > pool.size()) return false;
    for (std::size_t k = 0; k < count; ++k) least += pool[i + k];
    if (least > target) return false;
    chosen.push_back(x);
    if (find_subset(pool, i + 1, target - x, count - 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

Verdict verify_exhaustive(const StarSequence& s, std::int64_t bound) {
  if (s.length() > bound) {
    throw OracleBoundExceeded("exhaustive oracle limited to length " + std::to_string(bound) +
                              ", got " + std::to_string(s.length()));
  }
  const auto missing = s.missing();
  for (std::int64_t r = 1; r <= s.length(); ++r) {
    if (!s.is_part(r)) continue;
    std::vector<std::int64_t> pool;
    for (auto x : missing) {
      if (x < r) pool.push_back(x);
    }
    for (std::size_t count = 2; count <= pool.size(); ++count) {
      std::vector<std::int64_t> chosen;
      if (find_subset(pool, 0, r, count, chosen)) {
        return Verdict::make_refinable(Witness{r, std::move(chosen)});
      }
    }
  }
  return Verdict::make_unrefinable();
}

}  // namespace unref
