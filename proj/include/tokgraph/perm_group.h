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

#ifndef TOKGRAPH_PERM_GROUP_H_
#define TOKGRAPH_PERM_GROUP_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "tokgraph/graph.h"
#include "tokgraph/permutation.h"

namespace tokgraph {

inline constexpr std::size_t kDefaultGroupCap = std::size_t{1} << 20;

// Thrown when a closure or search produces more elements than allowed.
class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t cap, std::size_t partial);
  std::size_t cap() const { return cap_; }
  std::size_t partial() const { return partial_; }

 private:
  std::size_t cap_;
  std::size_t partial_;
};

// A fully materialized permutation group.
class PermGroup {
 public:
  PermGroup() = default;
  // `elements` must be duplicate free; the identity comes first.
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::vector<Permutation> elements);

  static PermGroup Trivial(std::size_t degree);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  bool contains(const Permutation& p) const;

  // Identity present, and closed under inverses and under products with the
  // generators.
  bool is_closed() const;

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_multimap<std::size_t, std::size_t> index_;
};

// Breadth-first saturation of the generated group. Throws CapExceeded once
// more than `cap` elements are reached, and Error on mixed degrees.
PermGroup closure(std::span<const Permutation> generators, std::size_t degree,
                  std::size_t cap = kDefaultGroupCap);

// Greedy generating set drawn from the group's elements.
std::vector<Permutation> generating_subset(const PermGroup& group);

// Element-set equality. Throws Error when degrees differ.
bool same_group(const PermGroup& a, const PermGroup& b);

}  // namespace tokgraph

#endif  // TOKGRAPH_PERM_GROUP_H_
