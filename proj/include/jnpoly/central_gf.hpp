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

// Generating function for central colored graphs.
//
// A subarrangement of J_n is a graph on [n] whose edges are the walls
// x_i + x_j = 1 and whose vertices may be colored 0 or 1 by the walls
// x_i = 0 / x_i = 1. Dropping uncolored isolated vertices, a central graph
// splits uniquely into four parts:
//
//   (0) uncolored bipartite components          rank = order - components
//   (1) uncolored non-bipartite components      rank = order
//   (2) isolated colored vertices               rank = order = cardinality
//   (3) colored components with an edge         rank = order
//
// Each part has an EGF; their product counts central graphs by rank (x),
// cardinality (y) and bipartite-component count (z). The coefficient of
// x^r y^c z^v is Gamma[r,c,v] / (r+v)!.

#ifndef JNPOLY_CENTRAL_GF_HPP
#define JNPOLY_CENTRAL_GF_HPP

#include <string>
#include <string_view>

#include "jnpoly/graph_counts.hpp"
#include "jnpoly/series.hpp"

namespace jnpoly {

/// Which type-(1) series to use.
///  kPaper:     no-isolated-vertex graphs minus connected bipartite graphs,
///              i.e. the literal printed formula. It keeps disconnected
///              graphs that have bipartite components, which the product
///              then counts twice.
///  kCorrected: exp of the connected non-bipartite EGF, so every component
///              is non-bipartite and the decomposition stays unique.
enum class Mode { kPaper, kCorrected };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);  // "paper" | "corrected"

/// Gamma[r,c,v]: central graphs of rank r, cardinality c with v uncolored
/// bipartite components on the vertex set [r+v].
using GammaCoefficients = CountTable<3>;

/// dx = n, dy = C(n,2) + n, dz = floor(n/2).
TruncationCaps central_caps(int n);

Series gamma0(TruncationCaps caps);
Series gamma1(TruncationCaps caps, Mode mode);
Series gamma2(TruncationCaps caps);

/// Connected type-(3) EGF, sum over r >= 2 of gbar3[r,c] x^r y^c / r! with
/// gbar3[r,c] = sum_{t=1}^{min(r, c-r+1)} 2 bbar[r, c-t] C(r,t):
/// a connected bipartite graph on r vertices, one of its two proper
/// 0/1 assignments, and t >= 1 vertices colored accordingly.
Series gamma3_connected(TruncationCaps caps);
Series gamma3(TruncationCaps caps);

/// gamma0 * gamma1 * gamma2 * gamma3, z-free factors multiplied first.
Series gamma_product(TruncationCaps caps, Mode mode);

/// Gamma[r,c,v] = (r+v)! [x^r y^c z^v] gamma, with integrality checks.
GammaCoefficients extract_counts(const Series& gamma);

}  // namespace jnpoly

#endif  // JNPOLY_CENTRAL_GF_HPP
