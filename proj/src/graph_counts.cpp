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

#include "jnpoly/graph_counts.hpp"

#include <string>

namespace jnpoly {

namespace {

void require_z_free(const TruncationCaps& caps, const char* who) {
  if (caps.dz != 0) {
    throw std::invalid_argument(std::string(who) + ": requires caps.dz == 0");
  }
}

}  // namespace

TruncationCaps graph_caps(int n) {
  if (n < 0) throw std::invalid_argument("graph_caps: n must be >= 0");
  return {n, n * (n - 1) / 2 + n, 0};
}

Series bicolored_series(TruncationCaps caps) {
  require_z_free(caps, "bicolored_series");
  Series b = Series::constant(caps, 1);
  for (int n = 1; n <= caps.dx; ++n) {
    const BigInt nf = factorial(n);
    for (int k = 0; k <= caps.dy; ++k) {
      BigInt total = 0;
      for (int i = 0; i <= n; ++i) {
        total += binomial(n, i) * binomial(static_cast<long>(i) * (n - i), k);
      }
      if (total != 0) b.add_term({n, k, 0}, ratio(total, nf));
    }
  }
  return b;
}

Series all_graphs_series(TruncationCaps caps) {
  require_z_free(caps, "all_graphs_series");
  Series g = Series::constant(caps, 1);
  for (int n = 1; n <= caps.dx; ++n) {
    const BigInt nf = factorial(n);
    const long pairs = static_cast<long>(n) * (n - 1) / 2;
    for (int k = 0; k <= caps.dy && k <= pairs; ++k) {
      g.add_term({n, k, 0}, ratio(binomial(pairs, k), nf));
    }
  }
  return g;
}

Series connected_bipartite_series(TruncationCaps caps) {
  return log(bicolored_series(caps)) * Rational(1, 2);
}

OrderSizeTable order_size_counts(const Series& f, const char* what) {
  OrderSizeTable table;
  for (const auto& [e, c] : f.terms()) {
    if (e.z != 0) {
      throw std::invalid_argument("order_size_counts: series contains z");
    }
    const std::string label = std::string(what) + "[" + std::to_string(e.x) +
                              "," + std::to_string(e.y) + "]";
    table.set({e.x, e.y}, exact_count(c, factorial(e.x), label));
  }
  return table;
}

OrderSizeTable connected_bipartite_counts(TruncationCaps caps) {
  caps.dz = 0;
  return order_size_counts(connected_bipartite_series(caps),
                           "connected bipartite count");
}

Series connected_graph_series(TruncationCaps caps) {
  return log(all_graphs_series(caps));
}

Series graphs_no_isolated_series(TruncationCaps caps) {
  Series f = connected_graph_series(caps);
  f.add_term({1, 0, 0}, -1);
  return exp(f);
}

OrderSizeTable connected_graph_counts(TruncationCaps caps) {
  caps.dz = 0;
  return order_size_counts(connected_graph_series(caps),
                           "connected graph count");
}

OrderSizeTable no_isolated_counts(TruncationCaps caps) {
  caps.dz = 0;
  return order_size_counts(graphs_no_isolated_series(caps),
                           "isolated-vertex-free graph count");
}

}  // namespace jnpoly
