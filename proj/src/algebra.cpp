/*
 * Copyright 2026 the hhsq authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "hhsq/algebra.hpp"

#include <stdexcept>

namespace hhsq {

Simplex make_simplex(std::vector<int> factors, int r) {
  if (factors.empty())
    throw std::invalid_argument("make_simplex: needs at least one factor");
  for (int a : factors)
    if (a < 0 || a > r)
      throw std::invalid_argument("make_simplex: factor code out of range");
  return Simplex{std::move(factors)};
}

std::string simplex_str(const Simplex& s) {
  std::string out;
  for (std::size_t i = 0; i < s.factors.size(); ++i) {
    if (i > 0) out += "⊗";
    out += s.factors[i] == 0 ? "1" : "x" + std::to_string(s.factors[i]);
  }
  return out;
}

void Chain::add_term(const Simplex& s, const RingElement& c) {
  if (s.degree() != degree_)
    throw std::invalid_argument("Chain::add_term: degree mismatch");
  if (ring_.is_zero(c)) return;
  auto it = terms_.find(s);
  if (it == terms_.end()) {
    terms_.emplace(s, c);
    return;
  }
  it->second = ring_.add(it->second, c);
  if (ring_.is_zero(it->second)) terms_.erase(it);
}

Chain Chain::plus(const Chain& other) const {
  if (other.degree_ != degree_ || !(other.ring_ == ring_))
    throw std::invalid_argument("Chain::plus: mismatched chains");
  Chain out = *this;
  for (const auto& [s, c] : other.terms_) out.add_term(s, c);
  return out;
}

Chain Chain::scaled(const RingElement& c) const {
  Chain out(ring_, degree_);
  for (const auto& [s, v] : terms_) out.add_term(s, ring_.mul(v, c));
  return out;
}

Chain Chain::negated() const {
  Chain out(ring_, degree_);
  for (const auto& [s, v] : terms_) out.add_term(s, ring_.neg(v));
  return out;
}

std::string Chain::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [s, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string coeff = ring_.str(c);
    if (coeff != "1") out += "(" + coeff + ")*";
    out += simplex_str(s);
  }
  return out;
}

Chain zero_chain(const GroundRing& ring, int degree) {
  return Chain(ring, degree);
}

Chain chain_of(const GroundRing& ring, const Simplex& s) {
  Chain out(ring, s.degree());
  out.add_term(s, ring.one());
  return out;
}

Chain face(const GroundRing& ring, const Simplex& s, int i) {
  const int n = s.degree();
  if (n < 1) throw std::invalid_argument("face: degree must be >= 1");
  if (i < 0 || i > n) throw std::invalid_argument("face: index out of range");
  Chain out(ring, n - 1);
  std::vector<int> f;
  f.reserve(n);
  if (i < n) {
    int prod = mul_factor(s.factors[i], s.factors[i + 1]);
    if (prod < 0) return out;
    for (int k = 0; k < i; ++k) f.push_back(s.factors[k]);
    f.push_back(prod);
    for (int k = i + 2; k <= n; ++k) f.push_back(s.factors[k]);
  } else {
    int prod = mul_factor(s.factors[n], s.factors[0]);
    if (prod < 0) return out;
    f.push_back(prod);
    for (int k = 1; k < n; ++k) f.push_back(s.factors[k]);
  }
  out.add_term(Simplex{std::move(f)}, ring.one());
  return out;
}

Simplex degeneracy(const Simplex& s, int i) {
  const int n = s.degree();
  if (i < 0 || i > n)
    throw std::invalid_argument("degeneracy: index out of range");
  Simplex out = s;
  out.factors.insert(out.factors.begin() + i + 1, 0);
  return out;
}

Simplex cyclic(const Simplex& s) {
  Simplex out;
  out.factors.reserve(s.factors.size());
  out.factors.push_back(s.factors.back());
  out.factors.insert(out.factors.end(), s.factors.begin(),
                     s.factors.end() - 1);
  return out;
}

Chain face(const Chain& c, int i) {
  Chain out(c.ring(), c.degree() - 1);
  for (const auto& [s, v] : c.terms()) {
    Chain fs = face(c.ring(), s, i);
    out = out.plus(fs.scaled(v));
  }
  return out;
}

Chain degeneracy(const Chain& c, int i) {
  Chain out(c.ring(), c.degree() + 1);
  for (const auto& [s, v] : c.terms()) out.add_term(degeneracy(s, i), v);
  return out;
}

Chain cyclic(const Chain& c) {
  Chain out(c.ring(), c.degree());
  for (const auto& [s, v] : c.terms()) out.add_term(cyclic(s), v);
  return out;
}

Chain boundary(const GroundRing& ring, const Simplex& s) {
  const int n = s.degree();
  if (n < 1) throw std::invalid_argument("boundary: degree must be >= 1");
  Chain out(ring, n - 1);
  RingElement sign = ring.one();
  for (int i = 0; i <= n; ++i) {
    out = out.plus(face(ring, s, i).scaled(sign));
    sign = ring.neg(sign);
  }
  return out;
}

Chain boundary(const Chain& c) {
  Chain out(c.ring(), c.degree() - 1);
  for (const auto& [s, v] : c.terms())
    out = out.plus(boundary(c.ring(), s).scaled(v));
  return out;
}

bool is_degenerate(const Simplex& s) {
  for (std::size_t k = 1; k < s.factors.size(); ++k)
    if (s.factors[k] == 0) return true;
  return false;
}

CyclicWord summand_of(const Simplex& s) {
  Word letters;
  for (int a : s.factors)
    if (a != 0) letters.push_back(a);
  return canonicalize(letters);
}

}  // namespace hhsq
