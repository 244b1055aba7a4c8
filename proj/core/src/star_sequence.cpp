#include "unref/star_sequence.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

namespace unref {

StarSequence::StarSequence(std::vector<Slot> slots) : slots_(std::move(slots)) {
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    if (slots_[i] == Slot::Part) {
      sum_ += static_cast<std::int64_t>(i + 1);
      ++part_count_;
    }
  }
}

StarSequence StarSequence::full(std::int64_t n) {
  return StarSequence(std::vector<Slot>(static_cast<std::size_t>(n), Slot::Part));
}

StarSequence StarSequence::branch_root(std::int64_t mu) {
  StarSequence s = full(mu - 1);
  s.push_star();
  return s;
}

StarSequence StarSequence::from_parts(std::vector<std::int64_t> parts) {
  std::sort(parts.begin(), parts.end());
  if (!parts.empty() && parts.front() <= 0) {
    throw std::invalid_argument("parts must be positive");
  }
  if (std::adjacent_find(parts.begin(), parts.end()) != parts.end()) {
    throw std::invalid_argument("parts must be distinct");
  }
  std::vector<Slot> slots(parts.empty() ? 0 : static_cast<std::size_t>(parts.back()),
                          Slot::Missing);
  for (auto p : parts) slots[static_cast<std::size_t>(p - 1)] = Slot::Part;
  return StarSequence(std::move(slots));
}

std::int64_t StarSequence::mex() const noexcept {
  auto it = std::find(slots_.begin(), slots_.end(), Slot::Missing);
  return it == slots_.end() ? 0 : static_cast<std::int64_t>(it - slots_.begin()) + 1;
}

std::vector<std::int64_t> StarSequence::parts() const {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(part_count_));
  for (std::int64_t i = 1; i <= length(); ++i) {
    if (is_part(i)) out.push_back(i);
  }
  return out;
}

std::vector<std::int64_t> StarSequence::missing() const {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(missing_count()));
  for (std::int64_t i = 1; i <= length(); ++i) {
    if (is_missing(i)) out.push_back(i);
  }
  return out;
}

StarSequence StarSequence::append_part() const {
  StarSequence s = *this;
  s.push_part();
  return s;
}

StarSequence StarSequence::append_star() const {
  StarSequence s = *this;
  s.push_star();
  return s;
}

void StarSequence::push_part() {
  slots_.push_back(Slot::Part);
  sum_ += length();
  ++part_count_;
}

void StarSequence::push_star() { slots_.push_back(Slot::Missing); }

void StarSequence::pop() {
  if (slots_.empty()) return;
  if (slots_.back() == Slot::Part) {
    sum_ -= length();
    --part_count_;
  }
  slots_.pop_back();
}

namespace {

bool is_separator(char c) noexcept {
  return c == ' ' || c == '\t' || c == ',' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

}  // namespace

StarSequence parse(std::string_view text) {
  std::vector<Slot> slots;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_separator(text[i])) ++i;
    if (i == text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !is_separator(text[j])) ++j;
    std::string_view token = text.substr(i, j - i);
    i = j;

    const auto position = static_cast<std::int64_t>(slots.size()) + 1;
    if (position >= kMaxParseLength) {
      throw ParseError(ParseError::Kind::TooLong, position, "sequence longer than 2^31 slots");
    }
    if (token == "*") {
      slots.push_back(Slot::Missing);
      continue;
    }
    std::int64_t value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range && end == token.data() + token.size()) {
      value = -1;  // a well-formed integer, just too large to be the expected index
    } else if (ec != std::errc{} || end != token.data() + token.size()) {
      throw ParseError(ParseError::Kind::MalformedToken, position,
                       "token " + std::to_string(position) + " '" + std::string(token) +
                           "' is neither an integer nor *");
    }
    if (value != position) {
      throw ParseError(ParseError::Kind::MalformedSequence, position,
                       "token " + std::to_string(position) + " must be " +
                           std::to_string(position) + " or *");
    }
    slots.push_back(Slot::Part);
  }
  return StarSequence(std::move(slots));
}

std::string format(const StarSequence& s) {
  std::string out;
  for (std::int64_t i = 1; i <= s.length(); ++i) {
    if (i > 1) out += ' ';
    if (s.is_part(i)) {
      out += std::to_string(i);
    } else {
      out += '*';
    }
  }
  return out;
}

std::string format_parts(const StarSequence& s) {
  std::string out;
  for (std::int64_t i = 1; i <= s.length(); ++i) {
    if (!s.is_part(i)) continue;
    if (!out.empty()) out += ' ';
    out += std::to_string(i);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const StarSequence& s) { return os << format(s); }

bool is_comment_line(std::string_view line) noexcept {
  auto pos = line.find_first_not_of(" \t");
  return pos != std::string_view::npos && line[pos] == '#';
}

}  // namespace unref
