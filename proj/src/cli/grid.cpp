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

#include <cerrno>
#include <cstdlib>
#include <string>

#include "laughlin/cli.hpp"
#include "laughlin/error.hpp"

namespace laughlin::cli {

std::optional<Format> parse_format(std::string_view s) {
  if (s == "table") return Format::Table;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  return std::nullopt;
}

std::optional<Level> parse_level(std::string_view s) {
  if (s == "closed") return Level::Closed;
  if (s == "series") return Level::Series;
  if (s == "oracle") return Level::Oracle;
  return std::nullopt;
}

std::string_view to_string(Level level) {
  switch (level) {
    case Level::Closed: return "closed";
    case Level::Series: return "series";
    case Level::Oracle: return "oracle";
  }
  return "?";
}

IntRange parse_range(std::string_view text) {
  auto parse_long = [&](std::string_view s) {
    const std::string buf(s);
    char* end = nullptr;
    errno = 0;
    const long v = std::strtol(buf.c_str(), &end, 10);
    if (buf.empty() || end != buf.c_str() + buf.size() || errno != 0) {
      throw Error(Errc::InvalidArgument, "bad range '" + std::string(text) + "'");
    }
    return v;
  };
  // A leading '-' belongs to the first number, so search for ':' after it.
  const auto colon = text.find(':', 1);
  if (colon == std::string_view::npos) {
    const long v = parse_long(text);
    return {v, v};
  }
  const IntRange r{parse_long(text.substr(0, colon)), parse_long(text.substr(colon + 1))};
  if (r.lo > r.hi) throw Error(Errc::InvalidArgument, "empty range '" + std::string(text) + "'");
  return r;
}

std::vector<LaughlinParams> expand_grid(const SweepSpec& spec) {
  std::vector<LaughlinParams> grid;
  const IntRange tail = spec.degree ? *spec.degree : (spec.quasiholes ? *spec.quasiholes : IntRange{0, 0});
  for (long g = spec.genus.lo; g <= spec.genus.hi; ++g) {
    for (long n = spec.particles.lo; n <= spec.particles.hi; ++n) {
      for (long b = spec.vanishing.lo; b <= spec.vanishing.hi; ++b) {
        for (long t = tail.lo; t <= tail.hi; ++t) {
          const int gi = static_cast<int>(g);
          const int ni = static_cast<int>(n);
          const int bi = static_cast<int>(b);
          grid.push_back(spec.degree ? LaughlinParams::from_degree(gi, ni, bi, t)
                                     : LaughlinParams::from_quasiholes(gi, ni, bi, t));
        }
      }
    }
  }
  return grid;
}

int default_jobs() {
  if (const char* env = std::getenv("LAUGHLIN_JOBS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

}  // namespace laughlin::cli
