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

// Report records behind each CLI command, with text / JSON / LaTeX
// renderers. Every record round-trips through JSON: from_json(to_json(r))
// == r. Big integers are serialized as decimal strings.

#ifndef JNPOLY_REPORT_HPP
#define JNPOLY_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "jnpoly/central_gf.hpp"
#include "jnpoly/charpoly.hpp"
#include "jnpoly/numeric.hpp"

namespace jnpoly::report {

using Json = nlohmann::ordered_json;

enum class Format { kText, kJson, kLatex };

/// "text", "json", "latex"; throws std::invalid_argument otherwise.
Format parse_format(std::string_view name);

// ---------------------------------------------------------------- charpoly

struct CharpolyReport {
  int n = 0;
  Mode mode = Mode::kCorrected;
  IntPolynomial chi;

  friend bool operator==(const CharpolyReport&,
                         const CharpolyReport&) = default;
};

CharpolyReport make_charpoly(int n, Mode mode);

// ---------------------------------------------------------------- chambers

struct ChambersReport {
  int n = 0;
  Mode mode = Mode::kCorrected;
  ChamberCounts counts;

  friend bool operator==(const ChambersReport&,
                         const ChambersReport&) = default;
};

ChambersReport make_chambers(int n, Mode mode);

// ------------------------------------------------------------------ verify

enum class Status { kPass, kFail, kDivergent, kSkipped };

std::string_view to_string(Status s);
Status parse_status(std::string_view name);

/// One disagreeing item, e.g. {"t^1", "-181", "-168"} or {"chi(23)", ...}.
struct Mismatch {
  std::string where;
  std::string expected;  // oracle value
  std::string actual;    // pipeline value

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

/// The pipeline in both modes against one oracle run.
struct OracleCheck {
  std::string oracle;  // "whitney", "ffield", "graphs"
  std::string detail;  // what was compared, e.g. "q=23"
  Status corrected = Status::kSkipped;
  Status paper = Status::kSkipped;
  std::optional<Mismatch> corrected_mismatch;  // first one
  std::optional<Mismatch> paper_mismatch;      // first one
  std::string note;  // guard message when skipped

  friend bool operator==(const OracleCheck&, const OracleCheck&) = default;
};

struct VerifyReport {
  int n = 0;
  IntPolynomial corrected;
  IntPolynomial paper;
  std::vector<OracleCheck> checks;
  /// Previously published row for n, when one exists, and its differences
  /// from each mode (highest power first).
  std::optional<IntPolynomial> published;
  std::vector<Mismatch> published_vs_paper;
  std::vector<Mismatch> published_vs_corrected;

  /// False iff some CORRECTED comparison failed.
  bool corrected_ok() const;
  /// True iff at least one comparison actually ran.
  bool anything_checked() const;

  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

struct VerifyOptions {
  std::vector<std::string> oracles{"whitney", "ffield", "graphs"};
  /// Primes for the finite-field oracle; empty selects default_primes(n).
  std::vector<std::uint64_t> primes;
  int workers = 1;
};

/// {5, 7, 11, 13} for n <= 4, {23, 29, 31} beyond.
std::vector<std::uint64_t> default_primes(int n);

/// Runs each requested oracle at n. Guard violations become kSkipped
/// checks with the guard message in `note`; they never abort the report.
/// Throws std::invalid_argument for an unknown oracle name or n < 1.
VerifyReport make_verify(int n, const VerifyOptions& options);

// ------------------------------------------------------------------- table

struct TableRow {
  int n = 0;
  IntPolynomial chi;
  ChamberCounts counts;
  std::optional<IntPolynomial> published;
  std::optional<BigInt> published_chambers;
  std::vector<Mismatch> differences;  // coefficients, then "chambers"
  std::optional<int> sign_violation;  // see first_sign_violation

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct TableReport {
  Mode mode = Mode::kCorrected;
  int n_max = 0;
  std::vector<TableRow> rows;

  friend bool operator==(const TableReport&, const TableReport&) = default;
};

TableReport make_table(int n_max, Mode mode);

// --------------------------------------------------------------- bipartite

struct BipartiteEntry {
  int n = 0;
  int k = 0;
  BigInt formula;
  std::optional<BigInt> census;  // exhaustive count, orders <= 6

  friend bool operator==(const BipartiteEntry&,
                         const BipartiteEntry&) = default;
};

struct BipartiteReport {
  int n_max = 0;
  std::vector<BipartiteEntry> entries;  // nonzero on either path

  /// False iff some census value differs from the formula.
  bool consistent() const;

  friend bool operator==(const BipartiteReport&,
                         const BipartiteReport&) = default;
};

/// Largest order that gets an exhaustive census column.
inline constexpr int kCensusMaxOrder = 6;

BipartiteReport make_bipartite(int n_max, int workers = 1);

// --------------------------------------------------------------- rendering

Json to_json(const CharpolyReport& r);
Json to_json(const ChambersReport& r);
Json to_json(const VerifyReport& r);
Json to_json(const TableReport& r);
Json to_json(const BipartiteReport& r);

/// Inverse of to_json; throws nlohmann::json::exception or
/// std::invalid_argument on malformed input.
CharpolyReport charpoly_from_json(const Json& j);
ChambersReport chambers_from_json(const Json& j);
VerifyReport verify_from_json(const Json& j);
TableReport table_from_json(const Json& j);
BipartiteReport bipartite_from_json(const Json& j);

/// Full output of a command including the trailing newline.
std::string render(const CharpolyReport& r, Format f);
std::string render(const ChambersReport& r, Format f);
std::string render(const VerifyReport& r, Format f);
std::string render(const TableReport& r, Format f);
std::string render(const BipartiteReport& r, Format f);

}  // namespace jnpoly::report

#endif  // JNPOLY_REPORT_HPP
