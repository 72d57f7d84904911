// Copyright 2026 The tokgraph Authors.
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

#include "tokgraph/permutation.h"

#include <sstream>

#include "tokgraph/graph.h"

namespace tokgraph {

Permutation::Permutation(std::vector<Point> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (Point p : image_) {
    if (p >= image_.size() || hit[p]) throw Error("image is not a bijection");
    hit[p] = true;
  }
}

Permutation Permutation::Identity(std::size_t degree) {
  Permutation p;
  p.image_.resize(degree);
  for (std::size_t i = 0; i < degree; ++i) p.image_[i] = static_cast<Point>(i);
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw Error("degree mismatch in product");
  Permutation out;
  out.image_.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i) out.image_[i] = image_[rhs.image_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.image_.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i) out.image_[image_[i]] = static_cast<Point>(i);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < degree(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

std::string Permutation::cycles(
    const std::function<std::string(Point)>& name) const {
  std::ostringstream out;
  std::vector<bool> done(degree(), false);
  bool any = false;
  for (Point start = 0; start < degree(); ++start) {
    if (done[start] || image_[start] == start) continue;
    any = true;
    out << '(';
    Point p = start;
    bool first = true;
    do {
      if (!first) out << ' ';
      first = false;
      out << name(p);
      done[p] = true;
      p = image_[p];
    } while (p != start);
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

std::string Permutation::cycles() const {
  return cycles([](Point p) { return std::to_string(p); });
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image words.
  std::uint64_t h = 1469598103934665603ull;
  for (Permutation::Point x : p.image()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace tokgraph
