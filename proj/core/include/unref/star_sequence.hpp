#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace unref {

/// One coordinate of a star sequence. A Part at (1-based) index i stands for
/// the integer i; Missing is the star and contributes nothing to the sum.
enum class Slot : std::uint8_t { Part, Missing };

/// A partition into distinct parts, written with explicit missing markers:
/// slot i holds either the part i or a star. The length is explicit, so a
/// partition has many representations differing only in trailing stars.
///
/// Indices are 1-based in every accessor.
class StarSequence {
public:
  StarSequence() = default;
  explicit StarSequence(std::vector<Slot> slots);

  /// Prefix (1, 2, ..., n).
  static StarSequence full(std::int64_t n);
  /// Prefix (1, 2, ..., mu-1, *), the root of the mex-mu search branch.
  static StarSequence branch_root(std::int64_t mu);
  /// Canonical representation of a set of distinct parts: length equals the
  /// largest part. Throws std::invalid_argument on repeated or nonpositive
  /// parts.
  static StarSequence from_parts(std::vector<std::int64_t> parts);

  std::int64_t length() const noexcept { return static_cast<std::int64_t>(slots_.size()); }
  bool empty() const noexcept { return slots_.empty(); }

  Slot at(std::int64_t index) const { return slots_.at(static_cast<std::size_t>(index - 1)); }
  bool is_part(std::int64_t index) const noexcept {
    return slots_[static_cast<std::size_t>(index - 1)] == Slot::Part;
  }
  bool is_missing(std::int64_t index) const noexcept {
    return slots_[static_cast<std::size_t>(index - 1)] == Slot::Missing;
  }

  /// Sum of the indices of Part slots.
  std::int64_t sum() const noexcept { return sum_; }
  /// Smallest index holding a star, or 0 when there is none.
  std::int64_t mex() const noexcept;
  std::int64_t part_count() const noexcept { return part_count_; }
  std::int64_t missing_count() const noexcept { return length() - part_count_; }

  /// Part values in increasing order.
  std::vector<std::int64_t> parts() const;
  /// Missing indices in increasing order.
  std::vector<std::int64_t> missing() const;

  const std::vector<Slot>& slots() const noexcept { return slots_; }

  StarSequence append_part() const;
  StarSequence append_star() const;

  void push_part();
  void push_star();
  void pop();

  friend bool operator==(const StarSequence& a, const StarSequence& b) noexcept {
    return a.slots_ == b.slots_;
  }
  friend auto operator<=>(const StarSequence& a, const StarSequence& b) noexcept {
    return a.slots_ <=> b.slots_;
  }

private:
  std::vector<Slot> slots_;
  std::int64_t sum_ = 0;
  std::int64_t part_count_ = 0;
};

class ParseError : public std::runtime_error {
public:
  enum class Kind {
    MalformedSequence,  // integer token at position i that is not i
    MalformedToken,     // neither an integer nor '*'
    TooLong,
  };

  ParseError(Kind kind, std::int64_t position, const std::string& message)
      : std::runtime_error(message), kind_(kind), position_(position) {}

  Kind kind() const noexcept { return kind_; }
  /// 1-based token position that failed.
  std::int64_t position() const noexcept { return position_; }

private:
  Kind kind_;
  std::int64_t position_;
};

/// Maximum accepted length for parsed sequences.
inline constexpr std::int64_t kMaxParseLength = std::int64_t{1} << 31;

/// Parses whitespace- or comma-separated tokens; token i must be `i` or `*`.
StarSequence parse(std::string_view text);

/// Canonical form: single spaces, `*` for missing slots.
std::string format(const StarSequence& s);

/// Only the parts, space separated ("1 2 4").
std::string format_parts(const StarSequence& s);

std::ostream& operator<<(std::ostream& os, const StarSequence& s);

/// True for lines that carry no sequence in the line protocol: `#` comments.
/// Blank lines are sequences (the empty one).
bool is_comment_line(std::string_view line) noexcept;

}  // namespace unref
