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

#include "rigid/named_graphs.hpp"

namespace rigid::named {

Graph G16() {
  return Graph(6, {{1, 2}, {1, 3}, {1, 5}, {1, 6}, {2, 3}, {2, 4}, {2, 6},
                   {3, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 6}});
}

Graph G48() {
  return Graph(7, {{2, 3}, {3, 4}, {2, 6}, {4, 5}, {5, 6}, {1, 2}, {1, 4}, {1, 3},
                   {1, 5}, {1, 6}, {2, 7}, {4, 7}, {3, 7}, {5, 7}, {6, 7}});
}

Graph G32a() {
  return Graph(7, {{4, 7}, {1, 3}, {5, 6}, {1, 4}, {2, 3}, {3, 7}, {2, 5}, {3, 5},
                   {1, 2}, {6, 7}, {5, 7}, {3, 6}, {1, 6}, {3, 4}, {2, 4}});
}

Graph G32b() {
  return Graph(7, {{1, 2}, {4, 7}, {2, 6}, {4, 5}, {1, 4}, {5, 6}, {1, 3}, {2, 3},
                   {3, 7}, {2, 5}, {2, 7}, {6, 7}, {1, 5}, {3, 6}, {3, 4}});
}

Graph G24() {
  return Graph(7, {{1, 2}, {4, 7}, {2, 6}, {5, 6}, {1, 4}, {1, 3}, {2, 3}, {3, 7},
                   {2, 5}, {2, 7}, {4, 6}, {5, 7}, {1, 5}, {3, 6}, {3, 4}});
}

Graph G16a() {
  return Graph(7, {{4, 7}, {1, 3}, {5, 6}, {1, 6}, {3, 7}, {2, 5}, {3, 5}, {1, 2},
                   {4, 6}, {5, 7}, {3, 6}, {1, 7}, {2, 3}, {3, 4}, {2, 4}});
}

Graph G16b() {
  return Graph(7, {{1, 2}, {4, 7}, {2, 6}, {4, 5}, {1, 4}, {1, 3}, {2, 3}, {3, 7},
                   {2, 5}, {3, 5}, {2, 7}, {6, 7}, {4, 6}, {1, 5}, {3, 6}});
}

Graph G128() {
  return Graph(8, {{2, 3}, {3, 4}, {2, 7}, {4, 5}, {5, 6}, {6, 7}, {1, 2}, {1, 4}, {1, 3},
                   {1, 5}, {1, 6}, {1, 7}, {2, 8}, {4, 8}, {3, 8}, {5, 8}, {6, 8}, {7, 8}});
}

Graph G160() {
  return Graph(8, {{1, 2}, {2, 7}, {4, 7}, {2, 6}, {6, 8}, {4, 5}, {2, 8}, {5, 7}, {3, 4},
                   {1, 4}, {1, 5}, {1, 3}, {1, 6}, {5, 6}, {3, 7}, {7, 8}, {2, 3}, {5, 8}});
}

std::optional<Graph> ByName(const std::string& name) {
  if (name == "G16") return G16();
  if (name == "G48") return G48();
  if (name == "G32a") return G32a();
  if (name == "G32b") return G32b();
  if (name == "G24") return G24();
  if (name == "G16a") return G16a();
  if (name == "G16b") return G16b();
  if (name == "G128") return G128();
  if (name == "G160") return G160();
  return std::nullopt;
}

std::vector<std::string> Names() {
  return {"G16", "G48", "G32a", "G32b", "G24", "G16a", "G16b", "G128", "G160"};
}

LengthAssignment G48Lengths28() {
  return {{{1, 2}, 1.99993774567597}, {{1, 3}, 1.99476987780024},
          {{1, 4}, 2.00343646098439}, {{1, 5}, 2.00289249524296},
          {{1, 6}, 2.00013424746814}, {{2, 3}, 0.99961432208948},
          {{2, 6}, 1.00198771097407}, {{2, 7}, 10.5360917228793},
          {{3, 4}, 1.00368644488060}, {{3, 7}, 10.5363171636461},
          {{4, 5}, 1.00153014850485}, {{4, 7}, 10.5357233031495},
          {{5, 6}, 0.99572361653574}, {{5, 7}, 10.5362736599978},
          {{6, 7}, 10.5364788463527}};
}

LengthAssignment G48Lengths32() {
  LengthAssignment d = G48Lengths28();
  d.Set({1, 2}, 4.0534);
  d.Set({2, 7}, 11.1069);
  d.Set({2, 6}, 3.8545);
  d.Set({2, 3}, 4.0519);
  return d;
}

LengthAssignment G48Lengths48() {
  return {{{1, 2}, 1.9999}, {{1, 3}, 1.9342}, {{1, 4}, 5.7963},  {{1, 5}, 4.4024},
          {{1, 6}, 2.0001}, {{2, 6}, 1.0020}, {{2, 3}, 0.5500},  {{3, 4}, 5.4247},
          {{4, 5}, 7.0744}, {{5, 6}, 4.4449}, {{2, 7}, 10.5361}, {{3, 7}, 10.5245},
          {{4, 7}, 11.8471}, {{5, 7}, 11.2396}, {{6, 7}, 10.5365}};
}

LengthAssignment G16aLengths16() {
  return {{{1, 3}, 5.75}, {{5, 6}, 7.90}, {{1, 6}, 8.48}, {{3, 7}, 5.91}, {{2, 5}, 7.15},
          {{3, 5}, 5.09}, {{1, 2}, 4.36}, {{4, 6}, 8.78}, {{5, 7}, 10.22}, {{3, 6}, 7.06},
          {{1, 7}, 3.77}, {{4, 7}, 7.19}, {{2, 3}, 3.81}, {{3, 4}, 3.23}, {{2, 4}, 6.05}};
}

LengthAssignment G16bLengths16() {
  return {{{4, 7}, 4.46}, {{2, 6}, 7.47}, {{4, 5}, 7.72}, {{1, 4}, 6.51}, {{1, 3}, 3.53},
          {{2, 3}, 7.69}, {{3, 7}, 5.76}, {{2, 5}, 9.48}, {{3, 5}, 6.10}, {{1, 2}, 4.62},
          {{6, 7}, 3.09}, {{2, 7}, 5.90}, {{4, 6}, 7.07}, {{1, 5}, 5.69}, {{3, 6}, 6.43}};
}

LengthAssignment G24Lengths24() {
  return {{{4, 7}, 5.65}, {{2, 6}, 5.70}, {{5, 6}, 4.70}, {{1, 4}, 8.33}, {{1, 3}, 4.77},
          {{2, 3}, 10.31}, {{3, 7}, 7.10}, {{2, 5}, 9.32}, {{1, 2}, 11.05}, {{4, 6}, 6.49},
          {{5, 7}, 5.77}, {{2, 7}, 6.00}, {{1, 5}, 9.40}, {{3, 6}, 8.57}, {{3, 4}, 7.64}};
}

LengthAssignment G32aLengths32() {
  return {{{1, 3}, 6.27}, {{5, 6}, 9.23}, {{1, 4}, 8.06}, {{2, 3}, 8.83}, {{3, 7}, 5.62},
          {{2, 5}, 9.74}, {{3, 5}, 5.60}, {{1, 2}, 10.95}, {{6, 7}, 9.28}, {{5, 7}, 7.88},
          {{3, 6}, 8.26}, {{4, 7}, 8.74}, {{1, 6}, 11.56}, {{3, 4}, 6.11}, {{2, 4}, 8.95}};
}

LengthAssignment G32bLengths32() {
  return {{{4, 7}, 85.49}, {{2, 6}, 7.11}, {{5, 6}, 22.08}, {{1, 4}, 87.33},
          {{1, 3}, 10.81}, {{2, 3}, 4.47}, {{3, 7}, 7.10},  {{2, 5}, 20.70},
          {{1, 2}, 11.06}, {{6, 7}, 9.29}, {{1, 5}, 21.49}, {{2, 7}, 7.68},
          {{4, 5}, 78.53}, {{3, 6}, 7.53}, {{3, 4}, 84.17}};
}

LengthAssignment G128Lengths128() {
  return {{{1, 2}, 8.7093},  {{1, 3}, 10.3433}, {{1, 4}, 1.9373},  {{1, 5}, 1.9379},
          {{1, 6}, 2.0691},  {{1, 7}, 2.1185},  {{2, 8}, 13.5773}, {{3, 8}, 14.6173},
          {{4, 8}, 10.5237}, {{5, 8}, 10.5237}, {{6, 8}, 10.5532}, {{7, 8}, 10.5509},
          {{2, 3}, 13.5267}, {{3, 4}, 10.1636}, {{4, 5}, 0.0634},  {{5, 6}, 0.7536},
          {{6, 7}, 1.5449},  {{2, 7}, 9.2728}};
}

LengthAssignment G160Lengths132() {
  return {{{1, 2}, 1.999}, {{1, 3}, 1.568},  {{1, 4}, 6.611},  {{1, 5}, 4.402},
          {{1, 6}, 1.994}, {{2, 3}, 1.426},  {{2, 6}, 0.879},  {{2, 7}, 10.536},
          {{2, 8}, 0.847}, {{3, 4}, 6.494},  {{3, 7}, 10.447}, {{4, 5}, 7.278},
          {{4, 7}, 11.993}, {{5, 6}, 4.321}, {{5, 7}, 11.239}, {{5, 8}, 4.279},
          {{6, 8}, 0.398}, {{7, 8}, 10.474}};
}

std::optional<LengthAssignment> LengthsByName(const std::string& name) {
  if (name == "G48-28") return G48Lengths28();
  if (name == "G48-32") return G48Lengths32();
  if (name == "G48-48") return G48Lengths48();
  if (name == "G16a-16") return G16aLengths16();
  if (name == "G16b-16") return G16bLengths16();
  if (name == "G24-24") return G24Lengths24();
  if (name == "G32a-32") return G32aLengths32();
  if (name == "G32b-32") return G32bLengths32();
  if (name == "G128-128") return G128Lengths128();
  if (name == "G160-132") return G160Lengths132();
  return std::nullopt;
}

}  // namespace rigid::named
