// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// jnpoly: characteristic polynomials and chamber counts of J_n, and the
// oracle cross-checks behind them.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "jnpoly/report.hpp"

namespace {

using namespace jnpoly;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

// Thrown for argument values CLI11 accepts but the commands do not.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Args {
  int n = 0;
  int to = 0;
  std::string mode = "corrected";
  std::string format = "text";
  std::vector<std::string> oracles{"whitney", "ffield", "graphs"};
  std::vector<std::uint64_t> primes;
  int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  int max_n = 12;
};

void require_range(const char* flag, int value, int lo, int hi) {
  if (value < lo || value > hi) {
    throw UsageError(std::string(flag) + " must be in [" + std::to_string(lo) +
                     ", " + std::to_string(hi) + "], got " +
                     std::to_string(value));
  }
}

Mode mode_of(const Args& a) {
  try {
    return parse_mode(a.mode);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

report::Format format_of(const Args& a) {
  try {
    return report::parse_format(a.format);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void add_common(CLI::App* cmd, Args& a, bool with_mode) {
  if (with_mode) {
    cmd->add_option("--mode", a.mode, "corrected (default) or paper");
  }
  cmd->add_option("--format", a.format, "text (default), json or latex");
  cmd->add_option("--max-n", a.max_n, "largest accepted n (default 12)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characteristic polynomials of the arrangements J_n"};
  app.require_subcommand(1);
  Args a;

  auto* charpoly = app.add_subcommand("charpoly", "print chi_{J_n}(t)");
  charpoly->add_option("--n", a.n, "dimension")->required();
  add_common(charpoly, a, true);

  auto* chambers = app.add_subcommand("chambers", "print region counts");
  chambers->add_option("--n", a.n, "dimension")->required();
  add_common(chambers, a, true);

  auto* verify =
      app.add_subcommand("verify", "compare both modes against oracles");
  verify->add_option("--n", a.n, "dimension")->required();
  verify->add_option("--oracles", a.oracles, "subset of whitney,ffield,graphs")
      ->delimiter(',');
  verify->add_option("--primes", a.primes, "primes for ffield")->delimiter(',');
  verify->add_option("--workers", a.workers, "oracle worker threads");
  add_common(verify, a, false);

  auto* table = app.add_subcommand("table", "chi_{J_n} for n = 2..N");
  table->add_option("--to", a.to, "largest n")->required();
  add_common(table, a, true);

  auto* bipartite = app.add_subcommand(
      "bipartite", "connected bipartite graph counts for orders 1..N");
  bipartite->add_option("--to", a.to, "largest order")->required();
  bipartite->add_option("--workers", a.workers, "census worker threads");
  add_common(bipartite, a, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const report::Format format = format_of(a);
    require_range("--max-n", a.max_n, 1, 64);
    require_range("--workers", a.workers, 1, 1024);
    if (charpoly->parsed()) {
      require_range("--n", a.n, 1, a.max_n);
      std::cout << report::render(report::make_charpoly(a.n, mode_of(a)), format);
      return kOk;
    }
    if (chambers->parsed()) {
      require_range("--n", a.n, 1, a.max_n);
      std::cout << report::render(report::make_chambers(a.n, mode_of(a)), format);
      return kOk;
    }
    if (verify->parsed()) {
      require_range("--n", a.n, 1, a.max_n);
      report::VerifyOptions options;
      options.oracles = a.oracles;
      options.primes = a.primes;
      options.workers = a.workers;
      report::VerifyReport r;
      try {
        r = report::make_verify(a.n, options);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      std::cout << report::render(r, format);
      return r.anything_checked() && r.corrected_ok() ? kOk : kVerifyFailed;
    }
    if (table->parsed()) {
      require_range("--to", a.to, 2, a.max_n);
      std::cout << report::render(report::make_table(a.to, mode_of(a)), format);
      return kOk;
    }
    if (bipartite->parsed()) {
      require_range("--to", a.to, 1, a.max_n);
      const report::BipartiteReport r = report::make_bipartite(a.to, a.workers);
      std::cout << report::render(r, format);
      return r.consistent() ? kOk : kVerifyFailed;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    // finite_field_count rejects non-prime or too-small q.
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kUsage;
}
