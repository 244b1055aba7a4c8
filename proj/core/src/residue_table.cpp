#include "unref/residue_table.hpp"

#include <string>

namespace unref {

ResidueTable::ResidueTable(std::int64_t mu) {
  if (mu < 1) throw ContractViolation("residue table needs mu >= 1");
  entries_.assign(static_cast<std::size_t>(mu), kUnset);
}

bool ResidueTable::saturated(std::int64_t length) const noexcept {
  for (auto v : entries_) {
    if (v == kUnset || v > length) return false;
  }
  return true;
}

ResidueTable ResidueTable::from_entries(const std::vector<std::optional<std::int64_t>>& entries) {
  ResidueTable t(static_cast<std::int64_t>(entries.size()));
  const auto m = t.mu();
  for (std::size_t j = 0; j < entries.size(); ++j) {
    if (!entries[j]) continue;
    const auto v = *entries[j];
    if (v <= m || v % m != static_cast<std::int64_t>(j)) {
      throw ContractViolation("entry " + std::to_string(j) + " = " + std::to_string(v) +
                              " violates the residue invariant");
    }
    t.entries_[j] = v;
  }
  return t;
}

std::vector<std::optional<std::int64_t>> ResidueTable::entries() const {
  std::vector<std::optional<std::int64_t>> out;
  out.reserve(entries_.size());
  for (auto v : entries_) {
    out.push_back(v == kUnset ? std::nullopt : std::optional<std::int64_t>(v));
  }
  return out;
}

ResidueTable update(ResidueTable table, std::int64_t r) {
  table.apply(r);
  return table;
}

bool is_saturated(const ResidueTable& table, std::int64_t length) noexcept {
  return table.saturated(length);
}

}  // namespace unref
