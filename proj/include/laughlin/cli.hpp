// Copyright 2026 The Laughlin Bundle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LAUGHLIN_CLI_HPP
#define LAUGHLIN_CLI_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <iosfwd>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "laughlin/params.hpp"
#include "laughlin/rational.hpp"

namespace laughlin::cli {

enum class Format { Table, Json, Csv };
enum class Level { Closed, Series, Oracle };

std::optional<Format> parse_format(std::string_view s);
std::optional<Level> parse_level(std::string_view s);
std::string_view to_string(Level level);

/// Inclusive integer range written "a" or "a:b".
struct IntRange {
  long lo = 0;
  long hi = 0;
};

/// Throws Error(InvalidArgument) on malformed input or lo > hi.
IntRange parse_range(std::string_view text);

struct SweepSpec {
  IntRange genus{0, 0};
  IntRange particles{1, 1};
  IntRange vanishing{1, 1};
  // Exactly one of these drives the grid; p = 0 when both are empty.
  std::optional<IntRange> quasiholes;
  std::optional<IntRange> degree;
  Format format = Format::Table;
  Level level = Level::Closed;
  int jobs = 1;
};

/// Grid points in deterministic order g, N, b, then p (or d).
std::vector<LaughlinParams> expand_grid(const SweepSpec& spec);

/// One output row of `compute`.
struct Record {
  LaughlinParams params;
  std::optional<std::string> skip_reason;
  ChernVector ch;
  std::optional<Rational> rank;
  std::optional<Rational> slope;
  std::string flatness;  // "n/a", "compatible" or "defect(m=..)=..."
  std::string status;    // "ok", "skipped: ..." or "mismatch: ..."
};

/// Closed form, cross-checked against the series (and oracle) route when the
/// level asks for it.
Record evaluate_point(const LaughlinParams& params, Level level);

std::vector<Record> compute_records(const SweepSpec& spec);

void write_records(std::ostream& os, const std::vector<Record>& records, Format format);

struct VerifyOptions {
  int max_genus = 3;
  int max_particles = 8;
  int max_vanishing = 5;
  int max_quasiholes = 6;
  Level level = Level::Closed;
  int jobs = 1;
};

struct FamilyResult {
  std::string name;
  std::size_t cases = 0;
  bool passed = true;
  std::string counterexample;  // first failure, grid order
};

/// Runs every identity family enabled by the level. Throws
/// Error(OracleScaleExceeded) when the oracle level is asked beyond its caps.
std::vector<FamilyResult> run_verification(const VerifyOptions& options);

/// Entry point shared by the executable and the tests. Returns the exit
/// code: 0 success, 1 verification failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Worker count from LAUGHLIN_JOBS, defaulting to 1.
int default_jobs();

/// Applies make_worker()'s callable to 0..n-1 on up to `jobs` threads; each
/// thread owns one worker. Results come back in index order.
template <class Result, class MakeWorker>
std::vector<Result> parallel_map(std::size_t n, int jobs, MakeWorker make_worker) {
  std::vector<std::optional<Result>> slots(n);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto body = [&] {
    try {
      auto worker = make_worker();
      for (std::size_t i = next++; i < n; i = next++) slots[i].emplace(worker(i));
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = n;
    }
  };
  const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), std::max<std::size_t>(n, 1));
  if (threads <= 1) {
    body();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(body);
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<Result> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace laughlin::cli

#endif  // LAUGHLIN_CLI_HPP
