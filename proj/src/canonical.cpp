// Copyright 2026 The Rigid Embeddings Authors
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

#include "rigid/canonical.hpp"

#include <algorithm>
#include <cstdio>

namespace rigid {
namespace {

using Coloring = std::vector<int>;  // indexed by vertex label, [0] unused

int CountColors(const Coloring& c) {
  return c.size() <= 1 ? 0 : *std::max_element(c.begin() + 1, c.end()) + 1;
}

// Re-ranks vertices by (own color, sorted neighbour colors) until stable.
void Refine(const Graph& g, Coloring& color) {
  const int n = g.vertex_count();
  int classes = CountColors(color);
  std::vector<std::pair<std::vector<int>, int>> sig(n);
  while (true) {
    for (int v = 1; v <= n; ++v) {
      std::vector<int>& key = sig[v - 1].first;
      key.clear();
      key.push_back(color[v]);
      const std::size_t head = key.size();
      for (int u : g.Neighbors(v)) key.push_back(color[u]);
      std::sort(key.begin() + head, key.end());
      sig[v - 1].second = v;
    }
    std::sort(sig.begin(), sig.end());
    int rank = -1;
    for (int i = 0; i < n; ++i) {
      if (i == 0 || sig[i].first != sig[i - 1].first) ++rank;
      color[sig[i].second] = rank;
    }
    if (rank + 1 == classes) return;
    classes = rank + 1;
  }
}

std::string Encode(const Graph& g, const std::vector<int>& perm) {
  const int n = g.vertex_count();
  std::vector<std::uint64_t> adj(n + 1, 0);
  for (const Edge& e : g.edges()) {
    const int a = perm[e.a];
    const int b = perm[e.b];
    adj[a] |= std::uint64_t{1} << b;
    adj[b] |= std::uint64_t{1} << a;
  }
  std::string out(1, static_cast<char>(n));
  unsigned char byte = 0;
  int filled = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      byte = static_cast<unsigned char>((byte << 1) | ((adj[i] >> j) & 1U));
      if (++filled == 8) {
        out.push_back(static_cast<char>(byte));
        byte = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(byte << (8 - filled)));
  return out;
}

class Search {
 public:
  explicit Search(const Graph& g) : g_(g) {}

  void Run(Coloring color) {
    Refine(g_, color);
    const int n = g_.vertex_count();
    if (CountColors(color) == n) {
      Leaf(color);
      return;
    }
    // First smallest non-singleton cell in color order.
    std::vector<int> size(n, 0);
    for (int v = 1; v <= n; ++v) ++size[color[v]];
    int target = -1;
    for (int c = 0; c < n; ++c) {
      if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;
    }
    for (int v = 1; v <= n; ++v) {
      if (color[v] != target) continue;
      Coloring child(color.size());
      for (int u = 1; u <= n; ++u) {
        child[u] = 2 * color[u] + ((color[u] == target && u != v) ? 1 : 0);
      }
      Normalize(child);
      Run(std::move(child));
    }
  }

  CanonicalResult Result() const { return {CanonicalLabel{best_}, best_perm_}; }

 private:
  static void Normalize(Coloring& c) {
    std::vector<int> values(c.begin() + 1, c.end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (std::size_t v = 1; v < c.size(); ++v) {
      c[v] = static_cast<int>(std::lower_bound(values.begin(), values.end(), c[v]) -
                              values.begin());
    }
  }

  void Leaf(const Coloring& color) {
    std::vector<int> perm(color.size(), 0);
    for (std::size_t v = 1; v < color.size(); ++v) perm[v] = color[v] + 1;
    std::string code = Encode(g_, perm);
    if (!have_best_ || code < best_) {
      best_ = std::move(code);
      best_perm_ = std::move(perm);
      have_best_ = true;
    }
  }

  const Graph& g_;
  bool have_best_ = false;
  std::string best_;
  std::vector<int> best_perm_;
};

}  // namespace

std::string CanonicalLabel::Hex() const {
  std::string out;
  char buf[3];
  for (unsigned char c : bytes) {
    std::snprintf(buf, sizeof(buf), "%02x", c);
    out += buf;
  }
  return out;
}

CanonicalResult Canonicalize(const Graph& g) {
  const int n = g.vertex_count();
  Coloring color(n + 1, 0);
  for (int v = 1; v <= n; ++v) color[v] = g.Degree(v);
  Search search(g);
  // Degrees are not dense ranks; one refinement pass fixes that.
  search.Run(std::move(color));
  return search.Result();
}

Graph CanonicalGraph(const Graph& g) {
  const CanonicalResult r = Canonicalize(g);
  return g.Relabeled(r.perm);
}

CanonicalLabel EncodeLabeled(const Graph& g) {
  std::vector<int> identity(g.vertex_count() + 1);
  for (int v = 0; v <= g.vertex_count(); ++v) identity[v] = v;
  return CanonicalLabel{Encode(g, identity)};
}

}  // namespace rigid
