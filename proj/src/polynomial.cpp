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

#include "rigid/polynomial.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "rigid/error.hpp"

namespace rigid {

Polynomial Polynomial::Constant(int nvars, Complex c) {
  Polynomial p(nvars);
  p.AddTerm(Exponent(nvars, 0), c);
  return p;
}

Polynomial Polynomial::Variable(int nvars, int index, Complex coeff) {
  Polynomial p(nvars);
  Exponent e(nvars, 0);
  e[index] = 1;
  p.AddTerm(e, coeff);
  return p;
}

void Polynomial::AddTerm(const Exponent& e, Complex c) {
  if (static_cast<int>(e.size()) != nvars_) {
    Fail(ErrorCode::kInvalidArgument, "exponent length does not match variable count");
  }
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) it->second += c;
  if (it->second == Complex(0.0)) terms_.erase(it);
}

int Polynomial::Degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

Complex Polynomial::Evaluate(std::span<const Complex> x) const {
  Complex sum = 0.0;
  for (const auto& [e, c] : terms_) {
    Complex t = c;
    for (int i = 0; i < nvars_; ++i) {
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    }
    sum += t;
  }
  return sum;
}

double Polynomial::MaxCoefficient() const {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

Polynomial Polynomial::Pruned(double rel_tol) const {
  const double cut = rel_tol * MaxCoefficient();
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (std::abs(c) > cut) out.terms_.emplace(e, c);
  }
  return out;
}

std::vector<int> Polynomial::Support() const {
  std::vector<int> out;
  for (int i = 0; i < nvars_; ++i) {
    for (const auto& [e, c] : terms_) {
      if (e[i] > 0) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [e, c] : other.terms_) AddTerm(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [e, c] : other.terms_) AddTerm(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(Complex c) {
  if (c == Complex(0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      out.AddTerm(e, ca * cb);
    }
  }
  return out;
}

std::string Polynomial::ToString(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c.imag() == 0.0) {
      os << c.real();
    } else {
      os << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "*i)";
    }
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      os << " * " << names[i];
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

const char* FormulationName(Formulation f) {
  return f == Formulation::kSphere ? "sphere" : "cm";
}

void PolynomialSystem::Validate() const {
  if (variables.size() != polynomials.size()) {
    Fail(ErrorCode::kInvalidArgument,
         "system is not square: " + std::to_string(polynomials.size()) + " equations in " +
             std::to_string(variables.size()) + " variables");
  }
  std::vector<bool> used(variables.size(), false);
  for (const Polynomial& p : polynomials) {
    if (p.nvars() != size()) {
      Fail(ErrorCode::kInvalidArgument, "polynomial variable count mismatch");
    }
    for (const auto& [e, c] : p.terms()) {
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
        Fail(ErrorCode::kInvalidArgument, "non-finite coefficient");
      }
    }
    for (int v : p.Support()) used[v] = true;
  }
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (!used[i]) Fail(ErrorCode::kInvalidArgument, "variable " + variables[i] + " unused");
  }
}

std::vector<int> PolynomialSystem::Degrees() const {
  std::vector<int> out;
  out.reserve(polynomials.size());
  for (const Polynomial& p : polynomials) out.push_back(p.Degree());
  return out;
}

long double PolynomialSystem::TotalDegree() const {
  long double prod = 1;
  for (int d : Degrees()) prod *= d;
  return prod;
}

std::string PolynomialSystem::Dump() const {
  std::string out;
  for (const Polynomial& p : polynomials) out += p.ToString(variables) + "\n";
  return out;
}

}  // namespace rigid
