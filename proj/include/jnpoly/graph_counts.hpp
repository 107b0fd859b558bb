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

// Exponential generating functions for labeled graph censuses, and exact
// count tables extracted from them. Series here never carry z (dz = 0);
// x marks order and y marks size.

#ifndef JNPOLY_GRAPH_COUNTS_HPP
#define JNPOLY_GRAPH_COUNTS_HPP

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>

#include "jnpoly/numeric.hpp"
#include "jnpoly/series.hpp"

namespace jnpoly {

/// Exact non-negative integer counts keyed by a fixed-width index tuple.
/// Absent keys read as zero.
template <std::size_t Rank>
class CountTable {
 public:
  using Key = std::array<int, Rank>;

  void set(const Key& key, BigInt value) {
    if (value < 0) throw ConsistencyError("negative count in CountTable");
    if (value == 0) {
      entries_.erase(key);
    } else {
      entries_[key] = std::move(value);
    }
  }
  void add(const Key& key, const BigInt& value) { set(key, at(key) + value); }

  BigInt at(const Key& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? BigInt(0) : it->second;
  }

  const std::map<Key, BigInt>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const CountTable&, const CountTable&) = default;

 private:
  std::map<Key, BigInt> entries_;
};

/// Counts keyed by (order, size).
using OrderSizeTable = CountTable<2>;

/// Caps that leave every coefficient needed for J_n untruncated:
/// dx = n, dy = C(n,2) + n, dz = 0.
TruncationCaps graph_caps(int n);

/// B(x,y) = 1 + sum_{n>=1,k>=0} sum_i C(n,i) C(i(n-i),k) x^n y^k / n!,
/// the EGF of vertex-2-colored graphs with edges only between colors.
/// Requires caps.dz == 0.
Series bicolored_series(TruncationCaps caps);

/// EGF of all labeled graphs, 1 + sum C(C(n,2),k) x^n y^k / n!.
/// Requires caps.dz == 0.
Series all_graphs_series(TruncationCaps caps);

/// Half the logarithm of bicolored_series: the connected bipartite EGF,
/// including the single-vertex term x.
Series connected_bipartite_series(TruncationCaps caps);

/// bbar[n,k] = number of connected bipartite labeled graphs of order n and
/// size k, for n <= caps.dx and k <= caps.dy.
OrderSizeTable connected_bipartite_counts(TruncationCaps caps);

/// exp(log(all_graphs_series) - x): graphs without isolated vertices.
Series graphs_no_isolated_series(TruncationCaps caps);

/// log(all_graphs_series): the connected-graph EGF.
Series connected_graph_series(TruncationCaps caps);

/// Number of connected labeled graphs of order n and size k.
OrderSizeTable connected_graph_counts(TruncationCaps caps);

/// Number of isolated-vertex-free labeled graphs of order n and size k.
OrderSizeTable no_isolated_counts(TruncationCaps caps);

/// Reads n! [x^n y^k] f into a table, checking integrality.
OrderSizeTable order_size_counts(const Series& f, const char* what);

}  // namespace jnpoly

#endif  // JNPOLY_GRAPH_COUNTS_HPP
