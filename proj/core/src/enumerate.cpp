#include "unref/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

namespace unref {

TriangularRoot triangular_root(std::int64_t N) {
  if (N < 0) throw ContractViolation("triangular_root needs N >= 0");
  auto n = static_cast<std::int64_t>((std::sqrt(8.0L * static_cast<long double>(N) + 1) - 1) / 2);
  while (n > 0 && n * (n + 1) / 2 > N) --n;
  while ((n + 1) * (n + 2) / 2 <= N) ++n;
  return {n, n * (n + 1) / 2 == N};
}

namespace detail {

void check_target(std::int64_t N) {
  if (N < 1) throw ContractViolation("N must be >= 1, got " + std::to_string(N));
}

void check_mex_range(std::int64_t N, std::int64_t mu) {
  check_target(N);
  const auto n = triangular_root(N).n;
  if (mu < 1 || mu > n) {
    throw ContractViolation("mex " + std::to_string(mu) + " outside [1, " + std::to_string(n) +
                            "] for N = " + std::to_string(N));
  }
}

namespace {

struct CountingVisitor {
  std::uint64_t count = 0;
  void leaf(const StarSequence&) {
    if (count == std::numeric_limits<std::uint64_t>::max()) {
      throw CounterOverflow("unrefinable partition counter overflowed 64 bits");
    }
    ++count;
  }
};

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw CounterOverflow("unrefinable partition counter overflowed 64 bits");
  }
  return out;
}

// One unit of counting work: the mex-mu branch of N, or the triangular
// partition when mu == 0.
struct Task {
  std::int64_t n;
  std::int64_t mu;
};

std::uint64_t run_task(const Task& task) {
  if (task.mu == 0) return triangular_root(task.n).is_triangular ? 1 : 0;
  return count_with_mex(task.n, task.mu);
}

std::vector<std::uint64_t> run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
  std::vector<std::uint64_t> results(tasks.size(), 0);
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = run_task(tasks[i]);
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const auto i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= tasks.size()) return;
      try {
        results[i] = run_task(tasks[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(tasks.size());
        return;
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(jobs);
  for (unsigned k = 0; k < jobs; ++k) pool.emplace_back(worker);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return results;
}

// Large mex branches hold most of the work; schedule them first.
void add_tasks(std::vector<Task>& tasks, std::int64_t N) {
  const auto n = triangular_root(N).n;
  tasks.push_back({N, 0});
  for (std::int64_t mu = n; mu >= 1; --mu) tasks.push_back({N, mu});
}

}  // namespace
}  // namespace detail

std::vector<StarSequence> collect_unrefinable(std::int64_t N) {
  std::vector<StarSequence> out;
  unrefinable_partitions(N, [&](const StarSequence& s) { out.push_back(s); });
  return out;
}

std::uint64_t count_with_mex(std::int64_t N, std::int64_t mu) {
  detail::check_mex_range(N, mu);
  detail::CountingVisitor visitor;
  detail::walk_branch(N, mu, visitor);
  return visitor.count;
}

std::uint64_t count_unrefinable(std::int64_t N, unsigned jobs) {
  detail::check_target(N);
  std::vector<detail::Task> tasks;
  detail::add_tasks(tasks, N);
  std::uint64_t total = 0;
  for (auto c : detail::run_tasks(tasks, jobs)) total = detail::checked_add(total, c);
  return total;
}

CountTable count_range(std::int64_t from, std::int64_t to, unsigned jobs) {
  detail::check_target(from);
  if (to < from) {
    throw ContractViolation("empty range " + std::to_string(from) + ".." + std::to_string(to));
  }
  std::vector<detail::Task> tasks;
  for (std::int64_t N = from; N <= to; ++N) detail::add_tasks(tasks, N);
  const auto results = detail::run_tasks(tasks, jobs);

  CountTable table;
  table.reserve(static_cast<std::size_t>(to - from + 1));
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (table.empty() || table.back().n != tasks[i].n) table.push_back({tasks[i].n, 0});
    table.back().count = detail::checked_add(table.back().count, results[i]);
  }
  return table;
}

}  // namespace unref
