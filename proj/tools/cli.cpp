#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include "unref/enumerate.hpp"
#include "unref/known_counts.hpp"
#include "unref/sample.hpp"
#include "unref/verify.hpp"

namespace unref::cli {

namespace {

int finish(std::ostream& out, std::ostream& err) {
  out.flush();
  if (!out) {
    err << "error: failed writing output\n";
    return kExitIo;
  }
  return kExitOk;
}

// "a..b" or a single "a".
bool parse_range(const std::string& text, std::int64_t& from, std::int64_t& to) {
  try {
    std::size_t used = 0;
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      from = to = std::stoll(text, &used);
      return used == text.size();
    }
    const auto lhs = text.substr(0, dots);
    const auto rhs = text.substr(dots + 2);
    from = std::stoll(lhs, &used);
    if (used != lhs.size()) return false;
    to = std::stoll(rhs, &used);
    return used == rhs.size();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

int run_verify(std::istream& in, std::ostream& out, std::ostream& err) {
  std::string line;
  std::int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_line(line)) continue;
    StarSequence seq;
    try {
      seq = parse(line);
    } catch (const ParseError& e) {
      out.flush();
      err << "line " << line_no << ": " << e.what() << '\n';
      return kExitUsage;
    }
    out << (verify_fast(seq).refinable() ? "REFINABLE" : "UNREFINABLE") << '\n';
  }
  if (in.bad()) {
    err << "error: failed reading input\n";
    return kExitIo;
  }
  return finish(out, err);
}

int run_enumerate(std::int64_t n, OutputFormat format, std::optional<std::int64_t> mex,
                  std::ostream& out, std::ostream& err) {
  if (n < 1) {
    err << "error: N must be >= 1\n";
    return kExitUsage;
  }
  const auto root = triangular_root(n);
  if (mex && (*mex < 1 || *mex > root.n)) {
    err << "error: --mex must lie in [1, " << root.n << "] for N = " << n << '\n';
    return kExitUsage;
  }

  std::string buffer;
  auto emit = [&](const StarSequence& s) {
    buffer = format == OutputFormat::Stars ? unref::format(s) : format_parts(s);
    buffer += '\n';
    out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
  };
  if (mex) {
    enumerate_with_mex(n, *mex, emit);
  } else {
    unrefinable_partitions(n, emit);
  }
  return finish(out, err);
}

int run_count(std::int64_t from, std::int64_t to, unsigned jobs, std::ostream& out,
              std::ostream& err) {
  if (from < 1 || to < from) {
    err << "error: range must satisfy 1 <= a <= b\n";
    return kExitUsage;
  }
  for (const auto& row : count_range(from, to, jobs)) {
    out << row.n << '\t' << row.count << '\n';
  }
  return finish(out, err);
}

int run_table(bool extended, unsigned jobs, std::ostream& out, std::ostream& err) {
  int status = kExitOk;
  for (const auto& known : kPublishedCounts) {
    if (!extended && known.n > 500) continue;
    const auto count = count_unrefinable(known.n, jobs);
    const bool ok = count == known.count;
    if (!ok) status = kExitMismatch;
    out << known.n << '\t' << count << '\t' << (ok ? "ok" : "MISMATCH") << '\n';
    out.flush();
  }
  const int io = finish(out, err);
  return io != kExitOk ? io : status;
}

int run_bench(const BenchOptions& options, std::ostream& out, std::ostream& err) {
  using Clock = std::chrono::steady_clock;
  std::mt19937_64 rng(options.seed);
  const int samples = std::max(1, options.samples);

  for (const auto length : options.lengths) {
    if (length < 2) {
      err << "error: bench lengths must be >= 2\n";
      return kExitUsage;
    }
    const auto mu = std::max<std::int64_t>(2, static_cast<std::int64_t>(std::sqrt(length)));
    std::vector<StarSequence> inputs;
    for (int i = 0; i < samples; ++i) inputs.push_back(sample_unrefinable(length, mu, rng));

    auto time_it = [&](auto&& verifier) {
      // Repeat until at least ~20ms elapsed so short inputs are measurable.
      std::int64_t calls = 0;
      std::size_t refinable = 0;
      const auto start = Clock::now();
      auto elapsed = Clock::duration::zero();
      do {
        for (const auto& s : inputs) refinable += verifier(s).refinable() ? 1 : 0;
        calls += static_cast<std::int64_t>(inputs.size());
        elapsed = Clock::now() - start;
      } while (elapsed < std::chrono::milliseconds(20));
      if (refinable != 0) err << "warning: sampled sequence reported refinable\n";
      return std::chrono::duration<double, std::nano>(elapsed).count() /
             static_cast<double>(calls);
    };

    const double fast = time_it([](const StarSequence& s) { return verify_fast(s); });
    const double naive = time_it([](const StarSequence& s) { return verify_naive(s); });
    out << length << "\tfast\t" << static_cast<std::int64_t>(std::llround(fast)) << '\n';
    out << length << "\tnaive\t" << static_cast<std::int64_t>(std::llround(naive)) << '\n';
  }
  return finish(out, err);
}

int run_main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Decide, enumerate and count unrefinable partitions into distinct parts"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Classify each star-sequence line of the input");
  std::string verify_input = "-";
  verify->add_option("input", verify_input, "Input file, '-' for stdin");

  auto* enumerate = app.add_subcommand("enumerate", "List the unrefinable partitions of N");
  std::int64_t enum_n = 0;
  std::string enum_format = "stars";
  std::optional<std::int64_t> enum_mex;
  enumerate->add_option("N", enum_n, "Target integer")->required();
  enumerate->add_option("--format", enum_format, "stars or parts")
      ->check(CLI::IsMember({"stars", "parts"}));
  enumerate->add_option("--mex", enum_mex, "Only the branch with this minimal excludant");

  auto* count = app.add_subcommand("count", "Count unrefinable partitions for N or a range");
  std::optional<std::int64_t> count_n;
  std::string count_range_text;
  unsigned count_jobs = 1;
  count->add_option("N", count_n, "Single target integer");
  count->add_option("--range", count_range_text, "Inclusive range a..b");
  count->add_option("--jobs", count_jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* table = app.add_subcommand("table", "Recompute the published sample counts");
  bool table_extended = false;
  unsigned table_jobs = 1;
  table->add_flag("--extended", table_extended, "Include N = 1000..1500 (slow)");
  table->add_option("--jobs", table_jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* bench = app.add_subcommand("bench", "Time the fast verifier against the pair search");
  BenchOptions bench_options;
  bench->add_option("lengths", bench_options.lengths, "Sequence lengths");
  bench->add_option("--samples", bench_options.samples, "Sequences per length");
  bench->add_option("--seed", bench_options.seed, "Generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) {
      if (verify_input == "-") return run_verify(in, out, err);
      std::ifstream file(verify_input);
      if (!file) {
        err << "error: cannot open " << verify_input << '\n';
        return kExitIo;
      }
      return run_verify(file, out, err);
    }
    if (enumerate->parsed()) {
      const auto fmt = enum_format == "parts" ? OutputFormat::Parts : OutputFormat::Stars;
      return run_enumerate(enum_n, fmt, enum_mex, out, err);
    }
    if (count->parsed()) {
      std::int64_t from = 0;
      std::int64_t to = 0;
      if (count_n.has_value() == !count_range_text.empty()) {
        err << "error: give either N or --range a..b\n";
        return kExitUsage;
      }
      if (count_n) {
        from = to = *count_n;
      } else if (!parse_range(count_range_text, from, to)) {
        err << "error: malformed range '" << count_range_text << "'\n";
        return kExitUsage;
      }
      return run_count(from, to, count_jobs, out, err);
    }
    if (table->parsed()) return run_table(table_extended, table_jobs, out, err);
    if (bench->parsed()) return run_bench(bench_options, out, err);
  } catch (const CounterOverflow& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace unref::cli
