#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace unref {

/// Raised when an operation is called outside its documented domain.
class ContractViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Undo log for in-place table updates. Entries written by
/// ResidueTable::apply(r, journal) can be rolled back to any earlier mark.
class ResidueJournal {
public:
  std::size_t mark() const noexcept { return changes_.size(); }

private:
  friend class ResidueTable;
  std::vector<std::pair<std::size_t, std::int64_t>> changes_;
};

/// Smallest forbidden value per residue class modulo the mex.
///
/// Entry j is either unset (nothing in class j is forbidden yet) or a value
/// p with p = j (mod mu) and p > mu, meaning p, p + mu, p + 2mu, ... may
/// not appear as parts of any unrefinable extension of the scanned prefix.
/// Entries only ever decrease.
class ResidueTable {
public:
  ResidueTable() = default;
  /// All entries unset. Throws ContractViolation when mu < 1.
  explicit ResidueTable(std::int64_t mu);

  std::int64_t mu() const noexcept { return static_cast<std::int64_t>(entries_.size()); }

  std::optional<std::int64_t> at(std::int64_t j) const {
    auto v = entries_.at(static_cast<std::size_t>(j));
    return v == kUnset ? std::nullopt : std::optional<std::int64_t>(v);
  }
  bool is_set(std::int64_t j) const { return entries_.at(static_cast<std::size_t>(j)) != kUnset; }

  /// True when a part r would be admissible: r lies below the forbidden
  /// threshold of its residue class (always true for an unset class).
  bool admits(std::int64_t r) const noexcept { return admits(r, r % mu()); }
  /// As admits(r) with the residue j = r mod mu supplied by the caller.
  bool admits(std::int64_t r, std::int64_t j) const noexcept {
    const auto v = entries_[static_cast<std::size_t>(j)];
    return v == kUnset || r < v;
  }

  /// Records that index r (> mu) is missing and propagates the new forbidden
  /// sums. Throws ContractViolation when r <= mu.
  void apply(std::int64_t r) { apply(r, r % std::max<std::int64_t>(mu(), 1)); }
  /// As apply(r) with the residue j = r mod mu supplied by the caller.
  void apply(std::int64_t r, std::int64_t j) {
    apply_impl(r, j, [](std::size_t, std::int64_t) {});
  }

  /// As apply(r, j), logging every overwritten entry to `journal`.
  void apply(std::int64_t r, std::int64_t j, ResidueJournal& journal) {
    apply_impl(r, j, [&journal](std::size_t t, std::int64_t old) {
      journal.changes_.emplace_back(t, old);
    });
  }

  /// Restores the entries overwritten since `mark` was taken.
  void rollback(ResidueJournal& journal, std::size_t mark) noexcept {
    auto& log = journal.changes_;
    while (log.size() > mark) {
      entries_[log.back().first] = log.back().second;
      log.pop_back();
    }
  }

  /// Every entry set and at most `length`: no part beyond `length` can ever
  /// be appended without a refinement appearing.
  bool saturated(std::int64_t length) const noexcept;

  /// Builds a table from explicit entries (nullopt = unset). Intended for
  /// tests and worked examples; the residue invariant is checked.
  static ResidueTable from_entries(const std::vector<std::optional<std::int64_t>>& entries);
  std::vector<std::optional<std::int64_t>> entries() const;

  friend bool operator==(const ResidueTable&, const ResidueTable&) = default;

private:
  // Finite entries always exceed mu >= 1, so 0 is free to mark the unset state.
  static constexpr std::int64_t kUnset = 0;

  template <class Log>
  void set(std::size_t t, std::int64_t value, Log& log) noexcept {
    log(t, entries_[t]);
    entries_[t] = value;
  }

  template <class Log>
  void lower(std::int64_t t, std::int64_t value, Log& log) noexcept {
    const auto i = static_cast<std::size_t>(t);
    if (entries_[i] == kUnset || value < entries_[i]) set(i, value, log);
  }

  template <class Log>
  void apply_impl(std::int64_t r, std::int64_t j, Log log) {
    const std::int64_t m = mu();
    if (r <= m) {
      throw ContractViolation("update called with r = " + std::to_string(r) +
                              " <= mu = " + std::to_string(m));
    }
    const std::int64_t pj = entries_[static_cast<std::size_t>(j)];

    if (pj != kUnset && r > pj) {
      // r is not the smallest missing value of its class: only r + p_j is new.
      const std::int64_t t = 2 * j;  // p_j = j (mod mu)
      lower(t >= m ? t - m : t, r + pj, log);
      return;
    }

    set(static_cast<std::size_t>(j), r, log);
    for (std::int64_t other = 1; other < m; ++other) {
      if (other == j) continue;
      const std::int64_t po = entries_[static_cast<std::size_t>(other)];
      if (po == kUnset) continue;
      const std::int64_t t = j + other;
      lower(t >= m ? t - m : t, r + po, log);
    }
  }

  std::vector<std::int64_t> entries_;
};

/// Value-returning form of ResidueTable::apply.
ResidueTable update(ResidueTable table, std::int64_t r);

bool is_saturated(const ResidueTable& table, std::int64_t length) noexcept;

}  // namespace unref
