#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "unref/residue_table.hpp"
#include "unref/star_sequence.hpp"

namespace unref {

struct TriangularRoot {
  std::int64_t n = 0;          // largest n with n(n+1)/2 <= N
  bool is_triangular = false;  // n(n+1)/2 == N

  friend bool operator==(const TriangularRoot&, const TriangularRoot&) = default;
};

TriangularRoot triangular_root(std::int64_t N);

class CounterOverflow : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

/// Receives every unrefinable partition found, as a star sequence whose last
/// slot is a part. The reference is only valid during the call.
template <class Sink>
concept EnumerationSink = requires(Sink& sink, const StarSequence& s) { sink(s); };

namespace detail {

template <class Visitor>
concept NodeObserver = requires(Visitor& v, const StarSequence& s, const ResidueTable& t) {
  v.node(s, t);
};

// Depth-first walk of the mex-mu branch, part child before star child.
// Every node holds an unrefinable, unsaturated prefix with sum < N whose
// table equals what the residue scan computes on it. The part child reuses
// the parent's table; the star child updates it in place and rolls the
// change back through a journal on exit. Explicit stack, so the depth is
// bounded by memory only.
//
// Pruning::Exhausted additionally drops children whose remaining budget
// N - sum is below the next index: such a subtree holds only star chains and
// never emits. Pruning::Saturation is the plain walk.
enum class Pruning { Saturation, Exhausted };

template <Pruning kPruning = Pruning::Exhausted, class Visitor>
void walk_branch(std::int64_t N, std::int64_t mu, Visitor& visitor) {
  static constexpr std::size_t kShared = static_cast<std::size_t>(-1);
  struct Frame {
    std::int64_t sum;
    std::size_t undo;  // journal mark to restore on exit, kShared for part children
    std::int64_t residue;  // (length + 1) mod mu
    std::uint8_t stage;
  };

  // A child of length `len` and sum `sum` can still reach N.
  auto alive = [N](std::int64_t sum, std::int64_t len) {
    return kPruning == Pruning::Saturation || sum + len + 1 <= N;
  };

  StarSequence seq = StarSequence::branch_root(mu);
  if (!alive(seq.sum(), seq.length())) return;
  ResidueTable table(mu);
  ResidueJournal journal;

  std::vector<Frame> stack;
  auto next_residue = [mu](std::int64_t j) { return j + 1 == mu ? 0 : j + 1; };
  stack.push_back({seq.sum(), kShared, next_residue(0), 0});

  while (!stack.empty()) {
    Frame& frame = stack.back();
    const std::int64_t r = seq.length() + 1;

    if (frame.stage == 0) {
      frame.stage = 1;
      if constexpr (NodeObserver<Visitor>) visitor.node(seq, table);
      if (table.admits(r, frame.residue)) {
        const std::int64_t next_sum = frame.sum + r;
        if (next_sum == N) {
          seq.push_part();
          visitor.leaf(seq);
          seq.pop();
        } else if (next_sum < N && alive(next_sum, r)) {
          seq.push_part();
          stack.push_back({next_sum, kShared, next_residue(frame.residue), 0});
          continue;
        }
      }
    }

    if (frame.stage == 1) {
      frame.stage = 2;
      if (alive(frame.sum, r)) {
        const auto mark = journal.mark();
        table.apply(r, frame.residue, journal);
        if (!table.saturated(r)) {
          const auto sum = frame.sum;
          const auto residue = next_residue(frame.residue);
          seq.push_star();
          stack.push_back({sum, mark, residue, 0});
          continue;
        }
        table.rollback(journal, mark);
      }
    }

    if (frame.undo != kShared) table.rollback(journal, frame.undo);
    stack.pop_back();
    if (!stack.empty()) seq.pop();
  }
}

template <class Sink>
struct SinkVisitor {
  Sink& sink;
  void leaf(const StarSequence& s) { sink(s); }
};

template <class Sink, class Observer>
struct ObservedSinkVisitor {
  Sink& sink;
  Observer& observer;
  void leaf(const StarSequence& s) { sink(s); }
  void node(const StarSequence& s, const ResidueTable& t) { observer(s, t); }
};

void check_mex_range(std::int64_t N, std::int64_t mu);
void check_target(std::int64_t N);

}  // namespace detail

/// Emits the unrefinable partitions of N with mex mu (and a part in the last
/// slot), depth first, part extension before star extension.
/// Requires 1 <= mu <= triangular_root(N).n, else ContractViolation.
template <EnumerationSink Sink>
void enumerate_with_mex(std::int64_t N, std::int64_t mu, Sink&& sink) {
  detail::check_mex_range(N, mu);
  detail::SinkVisitor<std::remove_reference_t<Sink>> visitor{sink};
  detail::walk_branch(N, mu, visitor);
}

/// As enumerate_with_mex, additionally calling observer(prefix, table) at
/// every internal node of the search.
template <EnumerationSink Sink, class Observer>
void enumerate_with_mex(std::int64_t N, std::int64_t mu, Sink&& sink, Observer&& observer) {
  detail::check_mex_range(N, mu);
  detail::ObservedSinkVisitor<std::remove_reference_t<Sink>, std::remove_reference_t<Observer>>
      visitor{sink, observer};
  detail::walk_branch(N, mu, visitor);
}

/// Every unrefinable partition of N exactly once: (1, ..., n) first when N is
/// triangular, then the mex branches for mu = n, n-1, ..., 1.
template <EnumerationSink Sink>
void unrefinable_partitions(std::int64_t N, Sink&& sink) {
  detail::check_target(N);
  const auto root = triangular_root(N);
  if (root.is_triangular) sink(StarSequence::full(root.n));
  for (std::int64_t mu = root.n; mu >= 1; --mu) {
    enumerate_with_mex(N, mu, sink);
  }
}

std::vector<StarSequence> collect_unrefinable(std::int64_t N);

std::uint64_t count_with_mex(std::int64_t N, std::int64_t mu);

/// Number of unrefinable partitions of N. With jobs > 1 the mex branches are
/// counted on separate threads; the result does not depend on jobs.
std::uint64_t count_unrefinable(std::int64_t N, unsigned jobs = 1);

struct CountRow {
  std::int64_t n = 0;
  std::uint64_t count = 0;

  friend bool operator==(const CountRow&, const CountRow&) = default;
};

using CountTable = std::vector<CountRow>;

/// One row per N in [from, to], ascending. Rows (and mex branches within a
/// row) are distributed over `jobs` threads.
CountTable count_range(std::int64_t from, std::int64_t to, unsigned jobs = 1);

}  // namespace unref
