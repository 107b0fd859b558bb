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

#include "jnpoly/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "jnpoly/graph_counts.hpp"
#include "jnpoly/oracle.hpp"
#include "jnpoly/reference.hpp"

namespace jnpoly::report {

using jnpoly::to_string;

namespace {

// --- small helpers ---------------------------------------------------------

std::string power_label(int p) { return "t^" + std::to_string(p); }

std::vector<Mismatch> poly_mismatches(const IntPolynomial& expected,
                                      const IntPolynomial& actual) {
  std::vector<Mismatch> out;
  for (const auto& d : reference::diff(expected, actual)) {
    out.push_back({power_label(d.power), to_string(d.expected),
                   to_string(d.actual)});
  }
  return out;
}

std::optional<Mismatch> first(const std::vector<Mismatch>& ms) {
  if (ms.empty()) return std::nullopt;
  return ms.front();
}

// Fills in both statuses of a check from the per-mode mismatch lists.
void settle(OracleCheck& check, const std::vector<Mismatch>& corrected,
            const std::vector<Mismatch>& paper) {
  check.corrected = corrected.empty() ? Status::kPass : Status::kFail;
  check.corrected_mismatch = first(corrected);
  if (paper.empty()) {
    check.paper = Status::kPass;
  } else {
    check.paper = corrected.empty() ? Status::kDivergent : Status::kFail;
  }
  check.paper_mismatch = first(paper);
}

Json coeffs_json(const IntPolynomial& p) {
  Json a = Json::array();
  for (const BigInt& c : p.coeffs()) a.push_back(to_string(c));
  return a;
}

IntPolynomial coeffs_from_json(const Json& j) {
  std::vector<BigInt> coeffs;
  for (const auto& c : j) coeffs.emplace_back(c.get<std::string>());
  return IntPolynomial(std::move(coeffs));
}

BigInt big_from_json(const Json& j) { return BigInt(j.get<std::string>()); }

Json mismatch_json(const Mismatch& m) {
  return Json{{"where", m.where}, {"expected", m.expected},
              {"actual", m.actual}};
}

Mismatch mismatch_from_json(const Json& j) {
  return {j.at("where").get<std::string>(), j.at("expected").get<std::string>(),
          j.at("actual").get<std::string>()};
}

Json optional_mismatch_json(const std::optional<Mismatch>& m) {
  return m ? mismatch_json(*m) : Json(nullptr);
}

std::optional<Mismatch> optional_mismatch_from_json(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return mismatch_from_json(j);
}

Json mismatches_json(const std::vector<Mismatch>& ms) {
  Json a = Json::array();
  for (const auto& m : ms) a.push_back(mismatch_json(m));
  return a;
}

std::vector<Mismatch> mismatches_from_json(const Json& j) {
  std::vector<Mismatch> out;
  for (const auto& m : j) out.push_back(mismatch_from_json(m));
  return out;
}

std::string json_line(const Json& j) { return j.dump() + "\n"; }

std::string describe(const Mismatch& m, std::string_view expected_label,
                     std::string_view actual_label) {
  std::ostringstream os;
  os << m.where << ": " << expected_label << " " << m.expected << ", "
     << actual_label << " " << m.actual;
  return os.str();
}

std::string join(const std::vector<Mismatch>& ms,
                 std::string_view expected_label,
                 std::string_view actual_label) {
  std::string out;
  for (const auto& m : ms) {
    if (!out.empty()) out += "; ";
    out += describe(m, expected_label, actual_label);
  }
  return out;
}

// "\chi_{J_{5}}(t)"
std::string chi_latex(int n) {
  return "\\chi_{J_{" + std::to_string(n) + "}}(t)";
}

// LaTeX-safe "t^1" -> "t^{1}".
std::string where_latex(const std::string& where) {
  if (where.rfind("t^", 0) == 0) return "t^{" + where.substr(2) + "}";
  return "\\mathrm{" + where + "}";
}

// --- verify oracles ----------------------------------------------------------

OracleCheck check_whitney(int n, const VerifyReport& r, int workers) {
  OracleCheck check{"whitney", "", Status::kSkipped, Status::kSkipped,
                    std::nullopt, std::nullopt, ""};
  oracle::EnumerationOptions options;
  options.workers = workers;
  try {
    const IntPolynomial truth = oracle::whitney_chi(n, options);
    check.detail = "all 2^" + std::to_string(hyperplane_count(n)) +
                   " subarrangements";
    settle(check, poly_mismatches(truth, r.corrected),
           poly_mismatches(truth, r.paper));
  } catch (const oracle::GuardError& e) {
    check.note = e.what();
  }
  return check;
}

OracleCheck check_ffield(int n, std::uint64_t q, const VerifyReport& r,
                         int workers) {
  OracleCheck check{"ffield", "q=" + std::to_string(q), Status::kSkipped,
                    Status::kSkipped, std::nullopt, std::nullopt, ""};
  oracle::FiniteFieldOptions options;
  options.workers = workers;
  try {
    const BigInt truth = oracle::finite_field_count(n, q, options);
    const BigInt at_q(static_cast<unsigned long>(q));
    const std::string where = "chi(" + std::to_string(q) + ")";
    auto compare = [&](const IntPolynomial& p) {
      std::vector<Mismatch> ms;
      const BigInt v = p(at_q);
      if (v != truth) ms.push_back({where, to_string(truth), to_string(v)});
      return ms;
    };
    settle(check, compare(r.corrected), compare(r.paper));
  } catch (const oracle::GuardError& e) {
    check.note = e.what();
  }
  return check;
}

// Connected bipartite counts, and the type-(1) class each mode builds on,
// against exhaustive enumeration of every order up to n.
OracleCheck check_graphs(int n, int workers) {
  OracleCheck check{"graphs", "orders 1.." + std::to_string(n),
                    Status::kSkipped, Status::kSkipped, std::nullopt,
                    std::nullopt, ""};
  if (n > kCensusMaxOrder) {
    check.note = "graph census requires order <= " +
                 std::to_string(kCensusMaxOrder);
    return check;
  }
  const TruncationCaps caps = central_caps(n);
  const OrderSizeTable bbar = connected_bipartite_counts(graph_caps(n));
  const Series type1_corrected = gamma1(caps, Mode::kCorrected);
  const Series type1_paper = gamma1(caps, Mode::kPaper);
  std::vector<Mismatch> corrected, paper;
  for (int order = 1; order <= n; ++order) {
    const oracle::GraphCensus census = oracle::enumerate_graphs(order, workers);
    const BigInt nf = factorial(order);
    for (int k = 0; k <= order * (order - 1) / 2; ++k) {
      const std::string at =
          "(" + std::to_string(order) + "," + std::to_string(k) + ")";
      const BigInt b(static_cast<unsigned long>(census.connected_bipartite(k)));
      if (bbar.at({order, k}) != b) {
        const Mismatch m{"bbar" + at, to_string(b), to_string(bbar.at({order, k}))};
        corrected.push_back(m);
        paper.push_back(m);
      }
      const auto it = census.all_components_non_bipartite.find(k);
      const BigInt t1(static_cast<unsigned long>(
          it == census.all_components_non_bipartite.end() ? 0 : it->second));
      for (auto [series, sink] :
           {std::pair{&type1_corrected, &corrected},
            std::pair{&type1_paper, &paper}}) {
        const Rational scaled = series->coefficient(order, k, 0) * nf;
        if (scaled != t1) {
          sink->push_back({"type1" + at, to_string(t1), to_string(scaled)});
        }
      }
    }
  }
  settle(check, corrected, paper);
  return check;
}

// --- text renderers -----------------------------------------------------------

std::string text(const VerifyReport& r) {
  std::ostringstream os;
  os << "verify n = " << r.n << "\n";
  os << "  corrected: " << r.corrected.to_string() << "\n";
  os << "  paper:     " << r.paper.to_string() << "\n";
  for (const auto& c : r.checks) {
    os << "  " << c.oracle;
    if (!c.detail.empty()) os << " [" << c.detail << "]";
    if (c.corrected == Status::kSkipped) {
      os << ": SKIPPED (" << c.note << ")\n";
      continue;
    }
    os << ": corrected " << to_string(c.corrected) << ", paper "
       << to_string(c.paper) << "\n";
    if (c.corrected_mismatch) {
      os << "    corrected first difference at "
         << describe(*c.corrected_mismatch, "oracle", "computed") << "\n";
    }
    if (c.paper_mismatch) {
      os << "    paper first difference at "
         << describe(*c.paper_mismatch, "oracle", "computed") << "\n";
    }
  }
  if (r.published) {
    os << "  published: " << r.published->to_string() << "\n";
    os << "    vs paper: "
       << (r.published_vs_paper.empty()
               ? "identical"
               : join(r.published_vs_paper, "published", "paper"))
       << "\n";
    os << "    vs corrected: "
       << (r.published_vs_corrected.empty()
               ? "identical"
               : join(r.published_vs_corrected, "published", "corrected"))
       << "\n";
  }
  os << "result: "
     << (!r.anything_checked() ? "NOTHING CHECKED"
         : r.corrected_ok()    ? "CORRECTED PASS"
                               : "CORRECTED FAIL")
     << "\n";
  return os.str();
}

std::string text(const TableReport& r) {
  std::ostringstream os;
  os << "mode " << to_string(r.mode) << ", n = 2.." << r.n_max << "\n";
  for (const auto& row : r.rows) {
    os << "n = " << row.n << "\n";
    os << "  chi:      " << row.chi.to_string() << "\n";
    os << "  chambers: " << to_string(row.counts.total) << " total, "
       << to_string(row.counts.bounded) << " bounded\n";
    if (row.published) {
      os << "  published: " << row.published->to_string();
      if (row.published_chambers) {
        os << " (chambers " << to_string(*row.published_chambers) << ")";
      }
      os << "\n";
    }
    if (row.differences.empty()) {
      if (row.published) os << "  matches published row\n";
    } else {
      for (const auto& m : row.differences) {
        os << "  differs at " << describe(m, "published", "computed") << "\n";
      }
    }
    if (row.sign_violation) {
      os << "  sign alternation breaks at t^" << row.n - *row.sign_violation
         << "\n";
    }
  }
  return os.str();
}

std::string text(const BipartiteReport& r) {
  std::ostringstream os;
  os << "connected bipartite graphs, orders 1.." << r.n_max << "\n";
  os << "n\tk\tformula\tcensus\n";
  for (const auto& e : r.entries) {
    os << e.n << "\t" << e.k << "\t" << to_string(e.formula) << "\t";
    if (!e.census) {
      os << "-";
    } else {
      os << to_string(*e.census);
      if (*e.census != e.formula) os << "\tMISMATCH";
    }
    os << "\n";
  }
  os << "result: " << (r.consistent() ? "consistent" : "MISMATCH") << "\n";
  return os.str();
}

// --- latex renderers ------------------------------------------------------

std::string latex(const VerifyReport& r) {
  std::ostringstream os;
  os << "\\[ " << chi_latex(r.n) << " = " << r.corrected.to_latex()
     << " \\quad (\\mathrm{corrected}) \\]\n";
  os << "\\[ " << chi_latex(r.n) << " = " << r.paper.to_latex()
     << " \\quad (\\mathrm{paper}) \\]\n";
  os << "\\[ \\begin{array}{llll}\n";
  os << "\\mathrm{oracle} & \\mathrm{detail} & \\mathrm{corrected} & "
        "\\mathrm{paper} \\\\\n";
  for (const auto& c : r.checks) {
    os << "\\mathrm{" << c.oracle << "} & \\mathrm{" << c.detail << "} & \\mathrm{"
       << to_string(c.corrected) << "} & \\mathrm{" << to_string(c.paper)
       << "} \\\\\n";
  }
  os << "\\end{array} \\]\n";
  return os.str();
}

std::string latex(const TableReport& r) {
  std::ostringstream os;
  os << "\\[ \\begin{array}{rcl}\n";
  for (const auto& row : r.rows) {
    os << chi_latex(row.n) << " & = & " << row.chi.to_latex() << " \\\\\n";
  }
  os << "\\end{array} \\]\n";
  os << "\\[ \\begin{array}{rrr}\n";
  os << "n & r(J_n) & b(J_n) \\\\\n";
  for (const auto& row : r.rows) {
    os << row.n << " & " << to_string(row.counts.total) << " & "
       << to_string(row.counts.bounded) << " \\\\\n";
  }
  os << "\\end{array} \\]\n";
  for (const auto& row : r.rows) {
    for (const auto& m : row.differences) {
      os << "\\[ n = " << row.n << ": " << where_latex(m.where)
         << "\\ \\mathrm{published}\\ " << m.expected
         << ",\\ \\mathrm{computed}\\ " << m.actual << " \\]\n";
    }
  }
  return os.str();
}

std::string latex(const BipartiteReport& r) {
  std::ostringstream os;
  os << "\\[ \\begin{array}{rrrr}\n";
  os << "n & k & \\bar b_{n,k} & \\mathrm{census} \\\\\n";
  for (const auto& e : r.entries) {
    os << e.n << " & " << e.k << " & " << to_string(e.formula) << " & "
       << (e.census ? to_string(*e.census) : std::string("-")) << " \\\\\n";
  }
  os << "\\end{array} \\]\n";
  return os.str();
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::kText;
  if (name == "json") return Format::kJson;
  if (name == "latex") return Format::kLatex;
  throw std::invalid_argument("unknown format: " + std::string(name));
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::kPass: return "PASS";
    case Status::kFail: return "FAIL";
    case Status::kDivergent: return "DIVERGENT";
    case Status::kSkipped: return "SKIPPED";
  }
  return "?";
}

Status parse_status(std::string_view name) {
  for (Status s : {Status::kPass, Status::kFail, Status::kDivergent,
                   Status::kSkipped}) {
    if (to_string(s) == name) return s;
  }
  throw std::invalid_argument("unknown status: " + std::string(name));
}

// --- builders ----------------------------------------------------------------

CharpolyReport make_charpoly(int n, Mode mode) { return {n, mode, chi(n, mode)}; }

ChambersReport make_chambers(int n, Mode mode) {
  return {n, mode, chambers(n, mode)};
}

bool VerifyReport::corrected_ok() const {
  return std::none_of(checks.begin(), checks.end(), [](const OracleCheck& c) {
    return c.corrected == Status::kFail;
  });
}

bool VerifyReport::anything_checked() const {
  return std::any_of(checks.begin(), checks.end(), [](const OracleCheck& c) {
    return c.corrected != Status::kSkipped;
  });
}

std::vector<std::uint64_t> default_primes(int n) {
  if (n <= 4) return {5, 7, 11, 13};
  return {23, 29, 31};
}

VerifyReport make_verify(int n, const VerifyOptions& options) {
  if (n < 1) throw std::invalid_argument("verify: n must be >= 1");
  for (const auto& name : options.oracles) {
    if (name != "whitney" && name != "ffield" && name != "graphs") {
      throw std::invalid_argument("unknown oracle: " + name);
    }
  }
  VerifyReport r;
  r.n = n;
  r.corrected = chi(n, Mode::kCorrected);
  r.paper = chi(n, Mode::kPaper);
  const auto wants = [&](std::string_view name) {
    return std::find(options.oracles.begin(), options.oracles.end(), name) !=
           options.oracles.end();
  };
  if (wants("whitney")) r.checks.push_back(check_whitney(n, r, options.workers));
  if (wants("ffield")) {
    const auto primes =
        options.primes.empty() ? default_primes(n) : options.primes;
    for (std::uint64_t q : primes) {
      r.checks.push_back(check_ffield(n, q, r, options.workers));
    }
  }
  if (wants("graphs")) r.checks.push_back(check_graphs(n, options.workers));
  if (const reference::Row* row = reference::find(n)) {
    r.published = row->chi;
    r.published_vs_paper = poly_mismatches(row->chi, r.paper);
    r.published_vs_corrected = poly_mismatches(row->chi, r.corrected);
  }
  return r;
}

TableReport make_table(int n_max, Mode mode) {
  TableReport r;
  r.mode = mode;
  r.n_max = n_max;
  const auto polys = chi_table(n_max, mode);
  for (int n = 2; n <= n_max; ++n) {
    TableRow row;
    row.n = n;
    row.chi = polys[static_cast<std::size_t>(n - 2)];
    row.counts = chambers(row.chi);
    row.sign_violation = first_sign_violation(row.chi);
    if (const reference::Row* ref = reference::find(n)) {
      row.published = ref->chi;
      row.published_chambers = ref->chambers;
      row.differences = poly_mismatches(ref->chi, row.chi);
      if (ref->chambers && *ref->chambers != row.counts.total) {
        row.differences.push_back({"chambers", to_string(*ref->chambers),
                                   to_string(row.counts.total)});
      }
    }
    r.rows.push_back(std::move(row));
  }
  return r;
}

bool BipartiteReport::consistent() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const BipartiteEntry& e) {
                       return !e.census || *e.census == e.formula;
                     });
}

BipartiteReport make_bipartite(int n_max, int workers) {
  if (n_max < 1) throw std::invalid_argument("bipartite: n_max must be >= 1");
  BipartiteReport r;
  r.n_max = n_max;
  const OrderSizeTable formula = connected_bipartite_counts(graph_caps(n_max));
  for (int n = 1; n <= n_max; ++n) {
    std::optional<oracle::GraphCensus> census;
    if (n <= kCensusMaxOrder) census = oracle::enumerate_graphs(n, workers);
    for (int k = 0; k <= n * (n - 1) / 2; ++k) {
      BipartiteEntry e{n, k, formula.at({n, k}), std::nullopt};
      if (census) {
        e.census = BigInt(
            static_cast<unsigned long>(census->connected_bipartite(k)));
      }
      if (e.formula != 0 || (e.census && *e.census != 0)) {
        r.entries.push_back(std::move(e));
      }
    }
  }
  return r;
}

// --- json ----------------------------------------------------------------------

Json to_json(const CharpolyReport& r) {
  return Json{{"n", r.n},
              {"mode", std::string(to_string(r.mode))},
              {"coeffs", coeffs_json(r.chi)}};
}

CharpolyReport charpoly_from_json(const Json& j) {
  return {j.at("n").get<int>(), parse_mode(j.at("mode").get<std::string>()),
          coeffs_from_json(j.at("coeffs"))};
}

Json to_json(const ChambersReport& r) {
  return Json{{"n", r.n},
              {"mode", std::string(to_string(r.mode))},
              {"total", to_string(r.counts.total)},
              {"bounded", to_string(r.counts.bounded)}};
}

ChambersReport chambers_from_json(const Json& j) {
  return {j.at("n").get<int>(), parse_mode(j.at("mode").get<std::string>()),
          {big_from_json(j.at("total")), big_from_json(j.at("bounded"))}};
}

Json to_json(const VerifyReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{
        {"oracle", c.oracle},
        {"detail", c.detail},
        {"corrected", std::string(to_string(c.corrected))},
        {"paper", std::string(to_string(c.paper))},
        {"corrected_mismatch", optional_mismatch_json(c.corrected_mismatch)},
        {"paper_mismatch", optional_mismatch_json(c.paper_mismatch)},
        {"note", c.note}});
  }
  return Json{
      {"n", r.n},
      {"corrected", coeffs_json(r.corrected)},
      {"paper", coeffs_json(r.paper)},
      {"checks", std::move(checks)},
      {"published", r.published ? coeffs_json(*r.published) : Json(nullptr)},
      {"published_vs_paper", mismatches_json(r.published_vs_paper)},
      {"published_vs_corrected", mismatches_json(r.published_vs_corrected)},
      {"ok", r.corrected_ok()}};
}

VerifyReport verify_from_json(const Json& j) {
  VerifyReport r;
  r.n = j.at("n").get<int>();
  r.corrected = coeffs_from_json(j.at("corrected"));
  r.paper = coeffs_from_json(j.at("paper"));
  for (const auto& c : j.at("checks")) {
    r.checks.push_back(
        {c.at("oracle").get<std::string>(), c.at("detail").get<std::string>(),
         parse_status(c.at("corrected").get<std::string>()),
         parse_status(c.at("paper").get<std::string>()),
         optional_mismatch_from_json(c.at("corrected_mismatch")),
         optional_mismatch_from_json(c.at("paper_mismatch")),
         c.at("note").get<std::string>()});
  }
  if (!j.at("published").is_null()) {
    r.published = coeffs_from_json(j.at("published"));
  }
  r.published_vs_paper = mismatches_from_json(j.at("published_vs_paper"));
  r.published_vs_corrected =
      mismatches_from_json(j.at("published_vs_corrected"));
  return r;
}

Json to_json(const TableReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{
        {"n", row.n},
        {"coeffs", coeffs_json(row.chi)},
        {"chambers", to_string(row.counts.total)},
        {"bounded", to_string(row.counts.bounded)},
        {"published",
         row.published ? coeffs_json(*row.published) : Json(nullptr)},
        {"published_chambers", row.published_chambers
                                   ? Json(to_string(*row.published_chambers))
                                   : Json(nullptr)},
        {"differences", mismatches_json(row.differences)},
        {"sign_violation",
         row.sign_violation ? Json(*row.sign_violation) : Json(nullptr)}});
  }
  return Json{{"mode", std::string(to_string(r.mode))},
              {"n_max", r.n_max},
              {"rows", std::move(rows)}};
}

TableReport table_from_json(const Json& j) {
  TableReport r;
  r.mode = parse_mode(j.at("mode").get<std::string>());
  r.n_max = j.at("n_max").get<int>();
  for (const auto& jr : j.at("rows")) {
    TableRow row;
    row.n = jr.at("n").get<int>();
    row.chi = coeffs_from_json(jr.at("coeffs"));
    row.counts = {big_from_json(jr.at("chambers")),
                  big_from_json(jr.at("bounded"))};
    if (!jr.at("published").is_null()) {
      row.published = coeffs_from_json(jr.at("published"));
    }
    if (!jr.at("published_chambers").is_null()) {
      row.published_chambers = big_from_json(jr.at("published_chambers"));
    }
    row.differences = mismatches_from_json(jr.at("differences"));
    if (!jr.at("sign_violation").is_null()) {
      row.sign_violation = jr.at("sign_violation").get<int>();
    }
    r.rows.push_back(std::move(row));
  }
  return r;
}

Json to_json(const BipartiteReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back(Json{
        {"n", e.n},
        {"k", e.k},
        {"formula", to_string(e.formula)},
        {"census", e.census ? Json(to_string(*e.census)) : Json(nullptr)}});
  }
  return Json{{"n_max", r.n_max},
              {"entries", std::move(entries)},
              {"consistent", r.consistent()}};
}

BipartiteReport bipartite_from_json(const Json& j) {
  BipartiteReport r;
  r.n_max = j.at("n_max").get<int>();
  for (const auto& je : j.at("entries")) {
    BipartiteEntry e{je.at("n").get<int>(), je.at("k").get<int>(),
                     big_from_json(je.at("formula")), std::nullopt};
    if (!je.at("census").is_null()) e.census = big_from_json(je.at("census"));
    r.entries.push_back(std::move(e));
  }
  return r;
}

// --- render ------------------------------------------------------------------

std::string render(const CharpolyReport& r, Format f) {
  switch (f) {
    case Format::kJson: return json_line(to_json(r));
    case Format::kLatex:
      return "\\[ " + chi_latex(r.n) + " = " + r.chi.to_latex() + " \\]\n";
    case Format::kText: break;
  }
  return r.chi.to_string() + "\n";
}

std::string render(const ChambersReport& r, Format f) {
  const std::string n = std::to_string(r.n);
  const std::string total = to_string(r.counts.total);
  const std::string bounded = to_string(r.counts.bounded);
  switch (f) {
    case Format::kJson: return json_line(to_json(r));
    case Format::kLatex:
      return "\\[ r(J_{" + n + "}) = (-1)^{" + n + "} \\chi_{J_{" + n +
             "}}(-1) = " + total + ", \\quad b(J_{" + n + "}) = (-1)^{" + n +
             "} \\chi_{J_{" + n + "}}(1) = " + bounded + " \\]\n";
    case Format::kText: break;
  }
  return "total " + total + "    (regions, (-1)^n chi(-1))\nbounded " +
         bounded + "    (bounded regions, (-1)^n chi(1))\n";
}

std::string render(const VerifyReport& r, Format f) {
  switch (f) {
    case Format::kJson: return json_line(to_json(r));
    case Format::kLatex: return latex(r);
    case Format::kText: break;
  }
  return text(r);
}

std::string render(const TableReport& r, Format f) {
  switch (f) {
    case Format::kJson: return json_line(to_json(r));
    case Format::kLatex: return latex(r);
    case Format::kText: break;
  }
  return text(r);
}

std::string render(const BipartiteReport& r, Format f) {
  switch (f) {
    case Format::kJson: return json_line(to_json(r));
    case Format::kLatex: return latex(r);
    case Format::kText: break;
  }
  return text(r);
}

}  // namespace jnpoly::report
