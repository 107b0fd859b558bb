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

// Brute-force ground truth for small n. Nothing in here touches the
// generating-function pipeline: the arrangement is built explicitly and
// every quantity is obtained by exhaustive enumeration.

#ifndef JNPOLY_ORACLE_HPP
#define JNPOLY_ORACLE_HPP

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "jnpoly/charpoly.hpp"
#include "jnpoly/graph_counts.hpp"
#include "jnpoly/numeric.hpp"

namespace jnpoly::oracle {

/// A guard (subset count, point budget, graph order) was exceeded.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class WallKind { kSum, kZero, kOne };

/// normal . x = constant. kSum walls are x_i + x_j = 1 with i < j; kZero
/// and kOne walls are x_i = 0 and x_i = 1 (j unused). Indices are 0-based.
struct Hyperplane {
  WallKind kind = WallKind::kSum;
  int i = 0;
  int j = 0;
  std::vector<int> normal;
  int constant = 0;
};

/// C(n,2) sum walls (lexicographic in (i,j)), then n zero walls, then n
/// one walls.
std::vector<Hyperplane> build_arrangement(int n);

/// Exact incremental row reduction of an affine system over the integers.
/// Rows are kept primitive (gcd 1), so entries stay small.
class AffineEliminator {
 public:
  explicit AffineEliminator(int dimension) : dimension_(dimension) {}

  /// Adds normal . x = constant. Returns false when the system becomes
  /// inconsistent; the state is then sticky.
  bool add(std::span<const int> normal, int constant);

  int rank() const { return static_cast<int>(rows_.size()); }
  bool consistent() const { return consistent_; }

 private:
  struct Row {
    std::vector<std::int64_t> coeffs;  // dimension_ + 1 entries, last = rhs
    int pivot = 0;
  };
  int dimension_;
  std::vector<Row> rows_;
  bool consistent_ = true;
};

struct RankCentrality {
  int rank = 0;       // rank of the normal vectors
  bool central = true;
};

RankCentrality rank_and_centrality(std::span<const Hyperplane> hs);

struct EnumerationOptions {
  int workers = 1;
  /// Largest n accepted by the subset enumerations; may be raised.
  int max_n = 5;
};

/// chi_{J_n} by summing (-1)^|B| t^(n - rank B) over every central subset
/// B, each subset reduced from scratch.
IntPolynomial whitney_chi(int n, const EnumerationOptions& options = {});

/// Central subsets of J_n counted by (rank, cardinality). Depth-first with
/// incremental elimination; a non-central prefix prunes every superset.
CountTable<2> central_census(int n, const EnumerationOptions& options = {});

struct FiniteFieldOptions {
  int workers = 1;
  /// Largest q^n accepted.
  std::uint64_t point_budget = 2'000'000'000ULL;
};

bool is_prime(std::uint64_t q);

/// Points of F_q^n on no hyperplane of J_n. Requires q prime, q >= 5.
BigInt finite_field_count(int n, std::uint64_t q,
                          const FiniteFieldOptions& options = {});

struct GraphClass {
  int size = 0;
  int components = 0;
  bool bipartite = false;
  bool isolated_free = false;

  friend auto operator<=>(const GraphClass&, const GraphClass&) = default;
};

/// Every labeled graph on [order], classified.
struct GraphCensus {
  int order = 0;
  std::map<GraphClass, std::uint64_t> counts;

  std::uint64_t total() const;
  std::uint64_t connected_bipartite(int size) const;
  std::uint64_t connected(int size) const;
  std::uint64_t no_isolated(int size) const;
  /// Isolated-vertex-free graphs with at least one non-bipartite component
  /// (an odd cycle somewhere).
  std::uint64_t no_isolated_non_bipartite(int size) const;
  /// Isolated-vertex-free graphs all of whose components are non-bipartite.
  /// Not derivable from the classification above, so counted directly.
  std::map<int, std::uint64_t> all_components_non_bipartite;

  friend bool operator==(const GraphCensus&, const GraphCensus&) = default;
};

/// Requires order <= 6 (2^15 graphs).
GraphCensus enumerate_graphs(int order, int workers = 1);

/// connected_bipartite(k) for every order 1..max_order, keyed (order, k).
OrderSizeTable census_connected_bipartite(int max_order);
OrderSizeTable census_connected(int max_order);

}  // namespace jnpoly::oracle

#endif  // JNPOLY_ORACLE_HPP
