#pragma once

#include <array>
#include <cstdint>
#include <optional>

namespace unref {

struct KnownCount {
  std::int64_t n;
  std::uint64_t count;
};

/// Published counts of unrefinable partitions (OEIS A179009 sample points).
inline constexpr std::array<KnownCount, 16> kPublishedCounts{{
    {10, 1},
    {20, 7},
    {30, 5},
    {40, 9},
    {50, 15},
    {100, 104},
    {200, 1616},
    {300, 11801},
    {400, 57725},
    {500, 275151},
    {1000, 84527031},
    {1100, 220124218},
    {1200, 559471992},
    {1300, 1383113838},
    {1400, 3357904448},
    {1500, 7734760269},
}};

constexpr std::optional<std::uint64_t> published_count(std::int64_t n) {
  for (const auto& row : kPublishedCounts) {
    if (row.n == n) return row.count;
  }
  return std::nullopt;
}

}  // namespace unref
