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

#ifndef RIGID_POLYNOMIAL_HPP_
#define RIGID_POLYNOMIAL_HPP_

#include <array>
#include <complex>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rigid/graph.hpp"

namespace rigid {

using Complex = std::complex<double>;
using Exponent = std::vector<int>;

// Sparse multivariate polynomial over C in a fixed number of variables.
class Polynomial {
 public:
  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

  static Polynomial Constant(int nvars, Complex c);
  static Polynomial Variable(int nvars, int index, Complex coeff = 1.0);

  int nvars() const { return nvars_; }
  const std::map<Exponent, Complex>& terms() const { return terms_; }
  bool IsZero() const { return terms_.empty(); }

  // Adds c * x^e, merging with an existing term; exact zeros are erased.
  void AddTerm(const Exponent& e, Complex c);

  int Degree() const;
  Complex Evaluate(std::span<const Complex> x) const;
  double MaxCoefficient() const;
  // Drops terms with |c| <= rel_tol * MaxCoefficient().
  Polynomial Pruned(double rel_tol) const;
  // Variables with a positive exponent in some term.
  std::vector<int> Support() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(Complex c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, Complex c) { return a *= c; }

  // Sparse "coeff * x1^a1*x2^a2" form, terms joined by " + ".
  std::string ToString(const std::vector<std::string>& names) const;

 private:
  int nvars_;
  std::map<Exponent, Complex> terms_;
};

enum class Formulation { kSphere, kCayleyMenger };

const char* FormulationName(Formulation f);

// Square polynomial system together with the bookkeeping that ties its
// variables back to the graph.
struct PolynomialSystem {
  std::vector<std::string> variables;
  std::vector<Polynomial> polynomials;
  Formulation formulation = Formulation::kSphere;

  // Sphere formulation: fixed triangle (v1 at the origin, v2 on the y-axis,
  // v3 in the xy-plane with x >= 0), fixed positions, and the (x, y, z, s)
  // variable indices of every other vertex.
  std::array<int, 3> triangle{};
  std::map<int, Eigen::Vector3d> fixed_positions;
  std::map<int, std::array<int, 4>> vertex_variables;

  // Cayley-Menger formulation: variable i is the squared length of
  // unknown_edges[i]; each polynomial is the bordered determinant of the
  // point subset in `minors`.
  std::vector<Edge> unknown_edges;
  std::vector<std::array<int, 5>> minors;

  int size() const { return static_cast<int>(variables.size()); }
  // Throws invalid-argument unless square, every variable is used, and all
  // coefficients are finite.
  void Validate() const;
  std::vector<int> Degrees() const;
  long double TotalDegree() const;
  // One polynomial per line.
  std::string Dump() const;
};

}  // namespace rigid

#endif  // RIGID_POLYNOMIAL_HPP_
