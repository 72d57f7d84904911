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

#include "tokgraph/perm_group.h"

#include <string>

namespace tokgraph {

CapExceeded::CapExceeded(std::size_t cap, std::size_t partial)
    : Error("group exceeds the cap of " + std::to_string(cap) +
            " elements (" + std::to_string(partial) + " found)"),
      cap_(cap),
      partial_(partial) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::vector<Permutation> elements)
    : degree_(degree),
      generators_(std::move(generators)),
      elements_(std::move(elements)) {
  PermutationHash hash;
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].degree() != degree_) throw Error("element degree mismatch");
    index_.emplace(hash(elements_[i]), i);
  }
}

PermGroup PermGroup::Trivial(std::size_t degree) {
  return PermGroup(degree, {}, {Permutation::Identity(degree)});
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [lo, hi] = index_.equal_range(PermutationHash{}(p));
  for (auto it = lo; it != hi; ++it) {
    if (elements_[it->second] == p) return true;
  }
  return false;
}

bool PermGroup::is_closed() const {
  if (!contains(Permutation::Identity(degree_))) return false;
  for (const Permutation& e : elements_) {
    if (!contains(e.inverse())) return false;
    for (const Permutation& g : generators_) {
      if (!contains(g * e)) return false;
    }
  }
  return true;
}

namespace {

// Hash set of permutations that owns its elements in insertion order.
class ElementSet {
 public:
  bool insert(const Permutation& p) {
    const std::size_t h = PermutationHash{}(p);
    auto [lo, hi] = index_.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
      if (elements_[it->second] == p) return false;
    }
    index_.emplace(h, elements_.size());
    elements_.push_back(p);
    return true;
  }
  std::size_t size() const { return elements_.size(); }
  const Permutation& operator[](std::size_t i) const { return elements_[i]; }
  std::vector<Permutation> release() { return std::move(elements_); }

 private:
  std::vector<Permutation> elements_;
  std::unordered_multimap<std::size_t, std::size_t> index_;
};

}  // namespace

PermGroup closure(std::span<const Permutation> generators, std::size_t degree,
                  std::size_t cap) {
  std::vector<Permutation> gens;
  for (const Permutation& g : generators) {
    if (g.degree() != degree) throw Error("generators must share one degree");
    if (!g.is_identity()) gens.push_back(g);
  }
  ElementSet seen;
  seen.insert(Permutation::Identity(degree));
  // Finite groups: closing under generator products also yields inverses.
  for (std::size_t next = 0; next < seen.size(); ++next) {
    for (const Permutation& g : gens) {
      if (seen.insert(g * seen[next]) && seen.size() > cap) {
        throw CapExceeded(cap, seen.size());
      }
    }
  }
  return PermGroup(degree, std::move(gens), seen.release());
}

std::vector<Permutation> generating_subset(const PermGroup& group) {
  std::vector<Permutation> gens;
  PermGroup current = PermGroup::Trivial(group.degree());
  for (const Permutation& e : group.elements()) {
    if (current.contains(e)) continue;
    gens.push_back(e);
    current = closure(gens, group.degree(), group.order());
    if (current.order() == group.order()) break;
  }
  return gens;
}

bool same_group(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) throw Error("groups act on different carriers");
  if (a.order() != b.order()) return false;
  for (const Permutation& e : a.elements()) {
    if (!b.contains(e)) return false;
  }
  return true;
}

}  // namespace tokgraph
