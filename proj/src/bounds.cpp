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

#include "rigid/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "rigid/canonical.hpp"
#include "rigid/error.hpp"
#include "rigid/henneberg.hpp"
#include "rigid/named_graphs.hpp"

namespace rigid {
namespace {

using BigRational = boost::multiprecision::cpp_rational;

void RequireBoundArgs(int rG, int nG, int rH, int nH) {
  if (!(nH < nG) || rH < 1 || rG < 1 || nH < 0) {
    Fail(ErrorCode::kInvalidArgument, "bound needs nH < nG, rG >= 1 and rH >= 1");
  }
}

std::optional<int> Doubled(const std::optional<int>& x) {
  return x ? std::optional<int>(2 * *x) : std::nullopt;
}

// Known fields must agree; unknown ones are filled from the other record.
bool Merge(CountRecord& into, const CountRecord& from) {
  for (auto [a, b] : {std::pair{&into.c3, &from.c3}, std::pair{&into.r3, &from.r3}}) {
    if (*a && *b && **a != **b) return false;
    if (!*a) *a = *b;
  }
  return true;
}

}  // namespace

const char* CountProvenanceName(CountProvenance p) {
  switch (p) {
    case CountProvenance::kDoubling:
      return "doubling";
    case CountProvenance::kSolved:
      return "solved";
    case CountProvenance::kPaper:
      return "paper";
  }
  return "unknown";
}

std::string GraphLabel(const Graph& g) { return CanonicalForm(g).Hex(); }

std::map<std::string, CountRecord> PropagateH1Doubling(
    const std::vector<Graph>& catalog, const std::map<std::string, CountRecord>& base) {
  std::map<std::string, CountRecord> out = base;
  std::vector<const Graph*> order;
  for (const Graph& g : catalog) order.push_back(&g);
  std::stable_sort(order.begin(), order.end(), [](const Graph* a, const Graph* b) {
    return a->vertex_count() < b->vertex_count();
  });
  for (const Graph* g : order) {
    const std::string label = GraphLabel(*g);
    std::optional<CountRecord> derived;
    for (int v = 1; v <= g->vertex_count(); ++v) {
      if (g->Degree(v) != 3) continue;
      const auto parent = out.find(GraphLabel(g->WithoutVertex(v)));
      if (parent == out.end() || (!parent->second.c3 && !parent->second.r3)) continue;
      CountRecord rec{label, Doubled(parent->second.c3), Doubled(parent->second.r3),
                      CountProvenance::kDoubling};
      if (!derived) {
        derived = rec;
      } else if (!Merge(*derived, rec)) {
        Fail(ErrorCode::kInconsistent, "H1 parents of graph " + label + " disagree");
      }
    }
    const auto own = out.find(label);
    if (!derived) continue;
    if (own != out.end()) {
      CountRecord merged = own->second;
      if (!Merge(merged, *derived)) {
        Fail(ErrorCode::kInconsistent, "graph " + label + " disagrees with its H1 parent");
      }
      own->second = merged;
    } else {
      out[label] = *derived;
    }
  }
  return out;
}

std::map<std::string, CountRecord> PublishedCounts() {
  const std::vector<std::tuple<Graph, std::optional<int>, std::optional<int>>> known = {
      {CompleteGraph(4), 2, 2},     {named::G16(), 16, 16},   {named::G48(), 48, 48},
      {named::G32a(), 32, 32},      {named::G32b(), 32, 32},  {named::G24(), 24, 24},
      {named::G16a(), 16, 16},      {named::G16b(), 16, 16},  {named::G128(), 128, 128},
      {named::G160(), 160, std::nullopt}};
  std::map<std::string, CountRecord> out;
  for (const auto& [g, c3, r3] : known) {
    const std::string label = GraphLabel(g);
    out[label] = CountRecord{label, c3, r3, CountProvenance::kPaper};
  }
  return out;
}

GlueBound GlueLowerBound(int rG, int nG, int rH, int nH, int n) {
  RequireBoundArgs(rG, nG, rH, nH);
  if (n < nH) Fail(ErrorCode::kInvalidArgument, "bound needs n >= nH");
  const int span = nG - nH;
  const int copies = (n - nH) / span;
  const int rest = (n - nH) % span;
  GlueBound out;
  const BigInt two_rest = BigInt(1) << rest;
  if (rG % rH == 0) {
    out.value = two_rest * rH * boost::multiprecision::pow(BigInt(rG / rH), copies);
    return out;
  }
  BigRational ratio(rG, rH);
  BigRational value = BigRational(two_rest * rH);
  for (int i = 0; i < copies; ++i) value *= ratio;
  out.value = numerator(value) / denominator(value);  // floor; both positive
  out.flagged = true;
  return out;
}

double AsymptoticBase(int rG, int nG, int rH, int nH) {
  RequireBoundArgs(rG, nG, rH, nH);
  return std::pow(static_cast<double>(rG) / rH, 1.0 / (nG - nH));
}

}  // namespace rigid
