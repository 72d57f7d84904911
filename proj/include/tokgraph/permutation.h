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

#ifndef TOKGRAPH_PERMUTATION_H_
#define TOKGRAPH_PERMUTATION_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace tokgraph {

// A bijection on 0..degree-1 stored as its image array. Products compose
// right to left: (p * q)(i) == p(q(i)).
class Permutation {
 public:
  using Point = std::uint32_t;

  Permutation() = default;
  // Throws Error unless `image` is a bijection.
  explicit Permutation(std::vector<Point> image);

  static Permutation Identity(std::size_t degree);

  std::size_t degree() const { return image_.size(); }
  Point operator()(Point i) const { return image_[i]; }
  std::span<const Point> image() const { return image_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;

  bool operator==(const Permutation& other) const = default;
  auto operator<=>(const Permutation& other) const = default;

  // Cycle notation with the given point names, fixed points omitted; the
  // identity renders as "()".
  std::string cycles(const std::function<std::string(Point)>& name) const;
  std::string cycles() const;

 private:
  std::vector<Point> image_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace tokgraph

#endif  // TOKGRAPH_PERMUTATION_H_
