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

#include "jnpoly/central_gf.hpp"

#include <algorithm>
#include <stdexcept>

namespace jnpoly {

namespace {

TruncationCaps z_free(TruncationCaps caps) {
  caps.dz = 0;
  return caps;
}

}  // namespace

std::string_view to_string(Mode mode) {
  return mode == Mode::kPaper ? "paper" : "corrected";
}

Mode parse_mode(std::string_view text) {
  if (text == "paper") return Mode::kPaper;
  if (text == "corrected") return Mode::kCorrected;
  throw std::invalid_argument("unknown mode '" + std::string(text) +
                              "' (expected paper or corrected)");
}

TruncationCaps central_caps(int n) {
  if (n < 0) throw std::invalid_argument("central_caps: n must be >= 0");
  TruncationCaps caps = graph_caps(n);
  caps.dz = n / 2;
  return caps;
}

Series gamma0(TruncationCaps caps) {
  // A type-(0) part of rank r with v components has order r + v, so its
  // terms need the bipartite EGF one x-degree past the rank cap.
  TruncationCaps wide = z_free(caps);
  wide.dx += 1;
  Series f = connected_bipartite_series(wide);
  f.add_term({1, 0, 0}, -1);  // no isolated vertices
  return exp(shift_rank_marker(f, std::max(caps.dz, 1)).truncated(caps));
}

Series gamma1(TruncationCaps caps, Mode mode) {
  const TruncationCaps flat = z_free(caps);
  Series out(flat);
  if (mode == Mode::kPaper) {
    Series connected_bipartite = connected_bipartite_series(flat);
    connected_bipartite.add_term({1, 0, 0}, -1);
    out = graphs_no_isolated_series(flat) - connected_bipartite;
  } else {
    Series non_bipartite =
        connected_graph_series(flat) - connected_bipartite_series(flat);
    out = exp(non_bipartite);
  }
  return out.truncated(caps);
}

Series gamma2(TruncationCaps caps) {
  Series g(z_free(caps));
  for (int r = 0; r <= std::min(caps.dx, caps.dy); ++r) {
    g.add_term({r, r, 0}, ratio(BigInt(1) << r, factorial(r)));
  }
  return g.truncated(caps);
}

Series gamma3_connected(TruncationCaps caps) {
  const TruncationCaps flat = z_free(caps);
  const OrderSizeTable bbar = connected_bipartite_counts(flat);
  Series g(flat);
  for (int r = 2; r <= flat.dx; ++r) {
    const BigInt rf = factorial(r);
    for (int c = r; c <= flat.dy; ++c) {
      BigInt total = 0;
      for (int t = 1; t <= std::min(r, c - r + 1); ++t) {
        total += 2 * bbar.at({r, c - t}) * binomial(r, t);
      }
      if (total != 0) g.add_term({r, c, 0}, ratio(total, rf));
    }
  }
  return g.truncated(caps);
}

Series gamma3(TruncationCaps caps) { return exp(gamma3_connected(caps)); }

Series gamma_product(TruncationCaps caps, Mode mode) {
  Series flat_part = gamma1(caps, mode) * gamma2(caps);
  flat_part = flat_part * gamma3(caps);
  // Lift the z-free product to the full caps before the final product.
  Series lifted(caps);
  for (const auto& [e, c] : flat_part.terms()) lifted.add_term(e, c);
  return gamma0(caps) * lifted;
}

GammaCoefficients extract_counts(const Series& gamma) {
  GammaCoefficients out;
  for (const auto& [e, c] : gamma.terms()) {
    const std::string label = "Gamma[" + std::to_string(e.x) + "," +
                              std::to_string(e.y) + "," + std::to_string(e.z) +
                              "]";
    out.set({e.x, e.y, e.z},
            exact_count(c, factorial(static_cast<unsigned long>(e.x + e.z)),
                        label));
  }
  return out;
}

}  // namespace jnpoly
