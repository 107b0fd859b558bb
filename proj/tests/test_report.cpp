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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jnpoly/report.hpp"

using namespace jnpoly;
using namespace jnpoly::report;

namespace {

// parse(render(x)) == x, going through the rendered text.
template <typename R, typename Parse>
void check_round_trip(const R& r, Parse parse) {
  const std::string out = render(r, Format::kJson);
  REQUIRE(!out.empty());
  CHECK(out.back() == '\n');
  CHECK(parse(Json::parse(out)) == r);
}

}  // namespace

TEST_CASE("charpoly rendering") {
  const CharpolyReport r = make_charpoly(2, Mode::kCorrected);
  CHECK(render(r, Format::kText) == "t^2 - 5t + 6\n");
  CHECK(render(r, Format::kJson) ==
        "{\"n\":2,\"mode\":\"corrected\",\"coeffs\":[\"6\",\"-5\",\"1\"]}\n");
  CHECK(render(make_charpoly(3, Mode::kPaper), Format::kLatex) ==
        "\\[ \\chi_{J_{3}}(t) = t^{3} - 9t^{2} + 27t - 27 \\]\n");
  check_round_trip(r, charpoly_from_json);
  check_round_trip(make_charpoly(10, Mode::kPaper), charpoly_from_json);
}

TEST_CASE("chambers rendering") {
  const ChambersReport r = make_chambers(2, Mode::kCorrected);
  CHECK(r.counts == ChamberCounts{12, 2});
  CHECK(render(r, Format::kJson) ==
        "{\"n\":2,\"mode\":\"corrected\",\"total\":\"12\",\"bounded\":\"2\"}\n");
  CHECK(render(r, Format::kText).find("total 12") != std::string::npos);
  check_round_trip(r, chambers_from_json);
}

TEST_CASE("parse_format and statuses") {
  CHECK(parse_format("latex") == Format::kLatex);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
  for (Status s : {Status::kPass, Status::kFail, Status::kDivergent,
                   Status::kSkipped}) {
    CHECK(parse_status(to_string(s)) == s);
  }
}

TEST_CASE("verify at n = 3: modes identical, every oracle passes") {
  VerifyOptions options;
  options.oracles = {"whitney", "ffield", "graphs"};
  const VerifyReport r = make_verify(3, options);
  CHECK(r.corrected == r.paper);
  REQUIRE(r.checks.size() == 6);  // whitney, four primes, graphs
  for (const auto& c : r.checks) {
    CAPTURE(c.oracle);
    CHECK(c.corrected == Status::kPass);
    CHECK(c.paper == Status::kPass);
    CHECK_FALSE(c.paper_mismatch.has_value());
  }
  CHECK(r.corrected_ok());
  CHECK(r.published_vs_paper.empty());
  check_round_trip(r, verify_from_json);
}

TEST_CASE("verify at n = 4 records the PAPER divergence") {
  VerifyOptions options;
  options.oracles = {"whitney", "graphs"};
  const VerifyReport r = make_verify(4, options);
  REQUIRE(r.checks.size() == 2);
  const OracleCheck& w = r.checks[0];
  CHECK(w.corrected == Status::kPass);
  CHECK(w.paper == Status::kDivergent);
  REQUIRE(w.paper_mismatch.has_value());
  CHECK(*w.paper_mismatch == Mismatch{"t^0", "165", "168"});
  // Two disjoint edges: no all-non-bipartite graph, but three literal ones.
  const OracleCheck& g = r.checks[1];
  CHECK(g.corrected == Status::kPass);
  CHECK(g.paper == Status::kDivergent);
  CHECK(*g.paper_mismatch == Mismatch{"type1(4,2)", "0", "3"});
  // The published n = 4 row matches neither mode.
  CHECK(r.published_vs_corrected.size() == 2);
  CHECK(r.published_vs_paper.size() == 2);
  check_round_trip(r, verify_from_json);
}

TEST_CASE("verify guard violations are per-oracle") {
  VerifyOptions options;
  options.oracles = {"whitney", "graphs"};
  const VerifyReport r = make_verify(7, options);
  REQUIRE(r.checks.size() == 2);
  for (const auto& c : r.checks) {
    CHECK(c.corrected == Status::kSkipped);
    CHECK_FALSE(c.note.empty());
  }
  CHECK(r.corrected_ok());
  CHECK_FALSE(r.anything_checked());
  check_round_trip(r, verify_from_json);

  options.oracles = {"nope"};
  CHECK_THROWS_AS(make_verify(3, options), std::invalid_argument);
}

TEST_CASE("table") {
  const TableReport r = make_table(10, Mode::kPaper);
  REQUIRE(r.rows.size() == 9);
  CHECK(r.rows[0].differences.empty());
  CHECK(r.rows[1].differences.empty());
  CHECK(r.rows[1].counts.total == 64);
  // n = 4: constant and linear coefficients plus the chamber column.
  CHECK(r.rows[2].differences.size() == 3);
  for (const auto& row : r.rows) {
    CAPTURE(row.n);
    CHECK(row.published.has_value());
    if (!row.published) continue;
    // Every published coefficient that differs is itemized.
    std::size_t expected = 0;
    for (int p = 0; p <= row.n; ++p) {
      expected += row.published->coefficient(p) != row.chi.coefficient(p);
    }
    if (row.published_chambers && *row.published_chambers != row.counts.total) {
      ++expected;
    }
    CHECK(row.differences.size() == expected);
  }
  check_round_trip(r, table_from_json);
  check_round_trip(make_table(6, Mode::kCorrected), table_from_json);

  const std::string latex = render(make_table(3, Mode::kCorrected), Format::kLatex);
  CHECK(latex.find("\\chi_{J_{3}}(t) & = & t^{3} - 9t^{2} + 27t - 27 \\\\") !=
        std::string::npos);
}

TEST_CASE("corrected table has no sign violations") {
  for (const auto& row : make_table(10, Mode::kCorrected).rows) {
    CHECK_FALSE(row.sign_violation.has_value());
  }
}

TEST_CASE("bipartite") {
  const BipartiteReport r = make_bipartite(7);
  CHECK(r.consistent());
  bool saw_tree = false, saw_56 = false, saw_7 = false;
  for (const auto& e : r.entries) {
    if (e.n == 4 && e.k == 3) saw_tree = e.formula == 16 && e.census == 16;
    if (e.n == 5 && e.k == 6) saw_56 = e.census.has_value() && *e.census == e.formula;
    if (e.n == 7) saw_7 = saw_7 || !e.census.has_value();
    if (e.n == 2) CHECK(e.formula == 1);
  }
  CHECK(saw_tree);
  CHECK(saw_56);
  CHECK(saw_7);
  check_round_trip(r, bipartite_from_json);

  BipartiteReport broken = r;
  broken.entries.front().census = BigInt(99);
  CHECK_FALSE(broken.consistent());
}

TEST_CASE("rendering is deterministic") {
  CHECK(render(make_table(8, Mode::kPaper), Format::kText) ==
        render(make_table(8, Mode::kPaper), Format::kText));
  VerifyOptions one, many;
  one.oracles = many.oracles = {"whitney", "ffield"};
  many.workers = 4;
  CHECK(render(make_verify(4, one), Format::kJson) ==
        render(make_verify(4, many), Format::kJson));
}
