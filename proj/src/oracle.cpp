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

#include "jnpoly/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <string>
#include <thread>

namespace jnpoly::oracle {

namespace {

// Runs task(i) for i in [0, tasks) on up to `workers` threads, each thread
// taking a strided slice, and returns the per-task results in task order.
// Callers reduce the results sequentially, so the outcome does not depend
// on the worker count.
template <typename Result>
std::vector<Result> run_tasks(int tasks, int workers,
                              const std::function<Result(int)>& task) {
  std::vector<Result> results(static_cast<std::size_t>(tasks));
  workers = std::clamp(workers, 1, std::max(tasks, 1));
  if (workers == 1) {
    for (int i = 0; i < tasks; ++i) results[i] = task(i);
    return results;
  }
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (int i = w; i < tasks; i += workers) results[i] = task(i);
    });
  }
  for (auto& t : threads) t.join();
  return results;
}

void check_subset_guard(int n, const EnumerationOptions& options,
                        const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
  if (n > options.max_n) {
    throw GuardError(std::string(who) + ": n = " + std::to_string(n) +
                     " exceeds the subset-enumeration guard (max_n = " +
                     std::to_string(options.max_n) +
                     "); use finite_field_count for larger n");
  }
  if (hyperplane_count(n) > 62) {
    throw GuardError(std::string(who) + ": too many hyperplanes for a mask");
  }
}

}  // namespace

std::vector<Hyperplane> build_arrangement(int n) {
  if (n < 1) throw std::invalid_argument("build_arrangement: n must be >= 1");
  std::vector<Hyperplane> hs;
  hs.reserve(static_cast<std::size_t>(hyperplane_count(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Hyperplane h{WallKind::kSum, i, j, std::vector<int>(n, 0), 1};
      h.normal[i] = h.normal[j] = 1;
      hs.push_back(std::move(h));
    }
  }
  for (int value : {0, 1}) {
    for (int i = 0; i < n; ++i) {
      Hyperplane h{value == 0 ? WallKind::kZero : WallKind::kOne, i, i,
                   std::vector<int>(n, 0), value};
      h.normal[i] = 1;
      hs.push_back(std::move(h));
    }
  }
  return hs;
}

bool AffineEliminator::add(std::span<const int> normal, int constant) {
  if (!consistent_) return false;
  if (static_cast<int>(normal.size()) != dimension_) {
    throw std::invalid_argument("AffineEliminator: dimension mismatch");
  }
  std::vector<std::int64_t> row(normal.begin(), normal.end());
  row.push_back(constant);

  for (const Row& basis : rows_) {
    const std::int64_t a = row[basis.pivot];
    if (a == 0) continue;
    const std::int64_t b = basis.coeffs[basis.pivot];
    std::int64_t g = 0;
    for (int k = 0; k <= dimension_; ++k) {
      row[k] = row[k] * b - basis.coeffs[k] * a;
      g = std::gcd(g, row[k]);
    }
    if (g > 1) {
      for (auto& v : row) v /= g;
    }
  }

  const auto pivot = std::find_if(row.begin(), row.begin() + dimension_,
                                  [](std::int64_t v) { return v != 0; });
  if (pivot == row.begin() + dimension_) {
    if (row[dimension_] != 0) consistent_ = false;
    return consistent_;
  }
  const int p = static_cast<int>(pivot - row.begin());
  if (row[p] < 0) {
    for (auto& v : row) v = -v;
  }
  rows_.push_back({std::move(row), p});
  return true;
}

RankCentrality rank_and_centrality(std::span<const Hyperplane> hs) {
  if (hs.empty()) return {};
  const int n = static_cast<int>(hs.front().normal.size());
  // Coefficient rank and consistency are tracked separately so the rank
  // stays meaningful for inconsistent systems.
  AffineEliminator linear(n);
  AffineEliminator affine(n);
  for (const Hyperplane& h : hs) {
    linear.add(h.normal, 0);
    affine.add(h.normal, h.constant);
  }
  return {linear.rank(), affine.consistent()};
}

IntPolynomial whitney_chi(int n, const EnumerationOptions& options) {
  check_subset_guard(n, options, "whitney_chi");
  const std::vector<Hyperplane> hs = build_arrangement(n);
  const int m = static_cast<int>(hs.size());
  const std::uint64_t subsets = std::uint64_t{1} << m;
  const int tasks = 64;
  const std::uint64_t chunk = (subsets + tasks - 1) / tasks;

  using Partial = std::vector<std::int64_t>;  // indexed by rank
  const auto partials = run_tasks<Partial>(tasks, options.workers, [&](int t) {
    Partial by_rank(static_cast<std::size_t>(n) + 1, 0);
    const std::uint64_t lo = chunk * static_cast<std::uint64_t>(t);
    const std::uint64_t hi = std::min(subsets, lo + chunk);
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      AffineEliminator elim(n);
      bool central = true;
      for (std::uint64_t bits = mask; bits != 0 && central; bits &= bits - 1) {
        const Hyperplane& h = hs[static_cast<std::size_t>(std::countr_zero(bits))];
        central = elim.add(h.normal, h.constant);
      }
      if (!central) continue;
      by_rank[elim.rank()] += std::popcount(mask) % 2 == 0 ? 1 : -1;
    }
    return by_rank;
  });

  std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1, 0);
  for (const Partial& p : partials) {
    for (int r = 0; r <= n; ++r) {
      coeffs[n - r] += BigInt(static_cast<long>(p[r]));
    }
  }
  return IntPolynomial(std::move(coeffs));
}

CountTable<2> central_census(int n, const EnumerationOptions& options) {
  check_subset_guard(n, options, "central_census");
  const std::vector<Hyperplane> hs = build_arrangement(n);
  const int m = static_cast<int>(hs.size());

  using Partial = std::map<std::array<int, 2>, std::uint64_t>;
  // Task 0 counts the empty set; task j >= 1 counts the subsets whose
  // smallest hyperplane index is j - 1.
  const auto partials = run_tasks<Partial>(m + 1, options.workers, [&](int t) {
    Partial counts;
    if (t == 0) {
      counts[{0, 0}] = 1;
      return counts;
    }
    std::function<void(int, const AffineEliminator&, int)> visit =
        [&](int next, const AffineEliminator& state, int size) {
          ++counts[{state.rank(), size}];
          for (int j = next; j < m; ++j) {
            AffineEliminator child = state;
            const Hyperplane& h = hs[static_cast<std::size_t>(j)];
            if (child.add(h.normal, h.constant)) visit(j + 1, child, size + 1);
          }
        };
    AffineEliminator root(n);
    const Hyperplane& first = hs[static_cast<std::size_t>(t - 1)];
    root.add(first.normal, first.constant);
    visit(t, root, 1);
    return counts;
  });

  CountTable<2> table;
  for (const Partial& p : partials) {
    for (const auto& [key, count] : p) {
      table.add(key, BigInt(static_cast<unsigned long>(count)));
    }
  }
  return table;
}

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

BigInt finite_field_count(int n, std::uint64_t q,
                          const FiniteFieldOptions& options) {
  if (n < 1) throw std::invalid_argument("finite_field_count: n must be >= 1");
  if (q < 5 || !is_prime(q)) {
    throw std::invalid_argument("finite_field_count: q must be a prime >= 5");
  }
  std::uint64_t points = 1;
  for (int i = 0; i < n; ++i) {
    if (points > options.point_budget / q) {
      throw GuardError("finite_field_count: q^n exceeds the point budget");
    }
    points *= q;
  }

  // Bucket each hyperplane by the last coordinate in its support, so it is
  // tested as soon as that coordinate is fixed.
  const std::vector<Hyperplane> hs = build_arrangement(n);
  std::vector<std::vector<const Hyperplane*>> due(static_cast<std::size_t>(n));
  for (const Hyperplane& h : hs) {
    int last = 0;
    for (int k = 0; k < n; ++k) {
      if (h.normal[k] != 0) last = k;
    }
    due[static_cast<std::size_t>(last)].push_back(&h);
  }

  const auto on_some_wall = [&](const std::vector<std::uint64_t>& x, int d) {
    for (const Hyperplane* h : due[static_cast<std::size_t>(d)]) {
      std::uint64_t lhs = 0;
      for (int k = 0; k <= d; ++k) {
        lhs += static_cast<std::uint64_t>(h->normal[k]) * x[k];
      }
      if (lhs % q == static_cast<std::uint64_t>(h->constant) % q) return true;
    }
    return false;
  };

  const auto partials = run_tasks<std::uint64_t>(
      static_cast<int>(q), options.workers, [&](int lead) {
        std::vector<std::uint64_t> x(static_cast<std::size_t>(n), 0);
        x[0] = static_cast<std::uint64_t>(lead);
        if (on_some_wall(x, 0)) return std::uint64_t{0};
        std::uint64_t count = 0;
        std::function<void(int)> descend = [&](int d) {
          if (d == n) {
            ++count;
            return;
          }
          for (std::uint64_t v = 0; v < q; ++v) {
            x[d] = v;
            if (!on_some_wall(x, d)) descend(d + 1);
          }
        };
        descend(1);
        return count;
      });

  BigInt total = 0;
  for (std::uint64_t p : partials) total += BigInt(static_cast<unsigned long>(p));
  return total;
}

std::uint64_t GraphCensus::total() const {
  std::uint64_t t = 0;
  for (const auto& [cls, count] : counts) t += count;
  return t;
}

std::uint64_t GraphCensus::connected_bipartite(int size) const {
  std::uint64_t t = 0;
  for (const auto& [cls, count] : counts) {
    if (cls.size == size && cls.components == 1 && cls.bipartite) t += count;
  }
  return t;
}

std::uint64_t GraphCensus::connected(int size) const {
  std::uint64_t t = 0;
  for (const auto& [cls, count] : counts) {
    if (cls.size == size && cls.components == 1) t += count;
  }
  return t;
}

std::uint64_t GraphCensus::no_isolated(int size) const {
  std::uint64_t t = 0;
  for (const auto& [cls, count] : counts) {
    if (cls.size == size && cls.isolated_free) t += count;
  }
  return t;
}

std::uint64_t GraphCensus::no_isolated_non_bipartite(int size) const {
  std::uint64_t t = 0;
  for (const auto& [cls, count] : counts) {
    if (cls.size == size && cls.isolated_free && !cls.bipartite) t += count;
  }
  return t;
}

GraphCensus enumerate_graphs(int order, int workers) {
  if (order < 0 || order > 6) {
    throw GuardError("enumerate_graphs: order must be in [0, 6]");
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < order; ++i) {
    for (int j = i + 1; j < order; ++j) edges.emplace_back(i, j);
  }
  const std::uint64_t graphs = std::uint64_t{1} << edges.size();
  const int tasks = 16;
  const std::uint64_t chunk = (graphs + tasks - 1) / tasks;

  const auto partials = run_tasks<GraphCensus>(tasks, workers, [&](int t) {
    GraphCensus part;
    part.order = order;
    const std::uint64_t lo = chunk * static_cast<std::uint64_t>(t);
    const std::uint64_t hi = std::min(graphs, lo + chunk);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(order));
    std::vector<int> color(static_cast<std::size_t>(order));
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      for (auto& a : adj) a.clear();
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (mask >> e & 1) {
          adj[edges[e].first].push_back(edges[e].second);
          adj[edges[e].second].push_back(edges[e].first);
        }
      }
      // Two-color each component by BFS; a conflict means an odd cycle.
      std::fill(color.begin(), color.end(), -1);
      int components = 0;
      int non_bipartite_components = 0;
      bool isolated_free = true;
      for (int s = 0; s < order; ++s) {
        if (adj[s].empty()) isolated_free = false;
        if (color[s] != -1) continue;
        ++components;
        bool odd = false;
        std::vector<int> queue{s};
        color[s] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
          const int u = queue[head];
          for (int w : adj[u]) {
            if (color[w] == -1) {
              color[w] = 1 - color[u];
              queue.push_back(w);
            } else if (color[w] == color[u]) {
              odd = true;
            }
          }
        }
        if (odd) ++non_bipartite_components;
      }
      const int size = std::popcount(mask);
      ++part.counts[{size, components, non_bipartite_components == 0,
                     isolated_free}];
      if (isolated_free && non_bipartite_components == components) {
        ++part.all_components_non_bipartite[size];
      }
    }
    return part;
  });

  GraphCensus census;
  census.order = order;
  for (const GraphCensus& p : partials) {
    for (const auto& [cls, count] : p.counts) census.counts[cls] += count;
    for (const auto& [size, count] : p.all_components_non_bipartite) {
      census.all_components_non_bipartite[size] += count;
    }
  }
  return census;
}

OrderSizeTable census_connected_bipartite(int max_order) {
  OrderSizeTable table;
  for (int order = 1; order <= max_order; ++order) {
    const GraphCensus census = enumerate_graphs(order);
    for (int k = 0; k <= order * (order - 1) / 2; ++k) {
      table.set({order, k},
                BigInt(static_cast<unsigned long>(census.connected_bipartite(k))));
    }
  }
  return table;
}

OrderSizeTable census_connected(int max_order) {
  OrderSizeTable table;
  for (int order = 1; order <= max_order; ++order) {
    const GraphCensus census = enumerate_graphs(order);
    for (int k = 0; k <= order * (order - 1) / 2; ++k) {
      table.set({order, k},
                BigInt(static_cast<unsigned long>(census.connected(k))));
    }
  }
  return table;
}

}  // namespace jnpoly::oracle
