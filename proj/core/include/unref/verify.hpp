#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "unref/residue_table.hpp"
#include "unref/star_sequence.hpp"

namespace unref {

enum class Refinability { Refinable, Unrefinable };

/// A refinement `part = pieces[0] + ... + pieces[t-1]`, pieces sorted
/// ascending, pairwise distinct, all missing from the sequence.
struct Witness {
  std::int64_t part = 0;
  std::vector<std::int64_t> pieces;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  Refinability kind = Refinability::Unrefinable;
  std::optional<Witness> witness;

  bool refinable() const noexcept { return kind == Refinability::Refinable; }

  static Verdict make_unrefinable() { return {}; }
  static Verdict make_refinable(std::optional<Witness> w = std::nullopt) {
    return {Refinability::Refinable, std::move(w)};
  }
};

/// Checks a witness against the sequence it claims to refine.
bool is_valid_witness(const StarSequence& s, const Witness& w);

/// State of the residue-class scan over a sequence.
struct ScanState {
  std::int64_t mu = 0;  // 0: no star, the table is empty
  ResidueTable table;
  /// Index at which a part hit a forbidden value, 0 when the scan finished.
  std::int64_t refuted_at = 0;
};

/// Runs the residue-class scan over indices mu+1..upto (upto defaults to the
/// whole sequence) and stops at the first refuted part.
ScanState scan(const StarSequence& s, std::optional<std::int64_t> upto = std::nullopt);

/// O(length + mex^2) decision procedure. Never carries a witness.
Verdict verify_fast(const StarSequence& s);

/// Pair search: some part r = a + b with a < b both missing. Witness is the
/// smallest such r, then the smallest a.
Verdict verify_naive(const StarSequence& s);

class OracleBoundExceeded : public std::length_error {
public:
  using std::length_error::length_error;
};

inline constexpr std::int64_t kDefaultExhaustiveBound = 24;

/// Subset search straight from the definition of refinement: some part is a
/// sum of two or more distinct missing indices. Witness: smallest part, then
/// fewest pieces, then lexicographically smallest pieces. Throws
/// OracleBoundExceeded when the sequence is longer than `bound`.
Verdict verify_exhaustive(const StarSequence& s, std::int64_t bound = kDefaultExhaustiveBound);

}  // namespace unref
