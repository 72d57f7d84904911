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

#include "tokgraph/cuts.h"

#include <algorithm>
#include <sstream>

namespace tokgraph {

std::vector<int> Cut::sizes() const {
  std::vector<int> out;
  out.reserve(components.components.size());
  for (const auto& c : components.components) out.push_back(static_cast<int>(c.size()));
  return out;
}

std::vector<Distribution> tuple_set(const Cut& cut, int k) {
  const std::vector<int> sizes = cut.sizes();
  std::vector<Distribution> out;
  if (k < 1) return out;
  const int parts = static_cast<int>(sizes.size());
  // suffix[i]: tokens that components i.. can still absorb.
  std::vector<int> suffix(parts + 1, 0);
  for (int i = parts - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + sizes[i];

  Distribution current(parts, 0);
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i == parts) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    const int hi = std::min(sizes[i], remaining);
    for (int v = 0; v <= hi; ++v) {
      if (remaining - v > suffix[i + 1]) continue;
      current[i] = v;
      self(self, i + 1, remaining - v);
    }
    current[i] = 0;
  };
  rec(rec, 0, k - 1);
  return out;
}

CutFamily::CutFamily(std::vector<Cut> cuts, int k) : cuts_(std::move(cuts)), k_(k) {
  offsets_.assign(1, 0);
  for (const Cut& c : cuts_) {
    tuples_.push_back(tuple_set(c, k));
    offsets_.push_back(offsets_.back() + tuples_.back().size());
  }
}

TupleRef CutFamily::tuple_ref(std::size_t global) const {
  if (global >= universe_size()) throw Error("tuple index out of range");
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), global);
  const int cut = static_cast<int>(it - offsets_.begin()) - 1;
  return {cut, global - offsets_[cut]};
}

const Distribution& CutFamily::tuple(std::size_t global) const {
  TupleRef ref = tuple_ref(global);
  return tuples_[ref.cut][ref.local];
}

std::optional<std::size_t> CutFamily::find(int cut, const Distribution& t) const {
  const auto& ts = tuples_[cut];
  auto it = std::lower_bound(ts.begin(), ts.end(), t);
  if (it == ts.end() || *it != t) return std::nullopt;
  return offsets_[cut] + static_cast<std::size_t>(it - ts.begin());
}

std::optional<int> CutFamily::find_cut(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  for (int i = 0; i < size(); ++i) {
    if (cuts_[i].x == a && cuts_[i].y == b) return i;
  }
  return std::nullopt;
}

namespace {

bool same_outside_neighbours(const Graph& g, Vertex x, Vertex y) {
  auto outside = [&](Vertex v, Vertex other) {
    std::vector<Vertex> out;
    for (Vertex u : g.neighbours(v)) {
      if (u != other) out.push_back(u);
    }
    return out;
  };
  return outside(x, y) == outside(y, x);
}

}  // namespace

CutFamily find_cuts(const Graph& g, int k) {
  if (!is_connected(g)) throw Error("graph is not connected");
  std::vector<Cut> cuts;
  const int n = g.num_vertices();
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if (g.degree(x) - (g.adjacent(x, y) ? 1 : 0) !=
          g.degree(y) - (g.adjacent(x, y) ? 1 : 0)) {
        continue;
      }
      if (!same_outside_neighbours(g, x, y)) continue;
      const Vertex removed[] = {x, y};
      ComponentPartition parts = components_without(g, removed);
      if (parts.count() < 2) continue;
      cuts.push_back(Cut{x, y, std::move(parts)});
    }
  }
  return CutFamily(std::move(cuts), k);
}

Classification classify(const Cut& cut, TokenConfig a) {
  Classification out;
  out.counts.assign(cut.count(), 0);
  for (Vertex v : a.vertices()) {
    const int id = cut.components.component_id[v];
    if (id >= 0) ++out.counts[id];
  }
  out.in_tuple_set = (a.contains(cut.x) != a.contains(cut.y));
  return out;
}

TokenConfig token_move(TokenConfig a, const Cut& cut) {
  const bool has_x = a.contains(cut.x);
  const bool has_y = a.contains(cut.y);
  if (has_x == has_y) throw Error("configuration must hold exactly one cut vertex");
  return has_x ? a.without(cut.x).with(cut.y) : a.without(cut.y).with(cut.x);
}

std::string describe_cut(const Graph& g, const Cut& cut) {
  return "{" + g.label(cut.x) + "," + g.label(cut.y) + "}";
}

std::string describe_tuple(const Distribution& t) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out << ',';
    out << t[i];
  }
  out << ')';
  return out.str();
}

CutLemmaCheck verify_lemma_2cut(const Graph& g, const CutFamily& family) {
  CutLemmaCheck check;
  if (family.size() <= 1) {
    check.disjoint = ClaimStatus::kVacuous;
    check.same_side = ClaimStatus::kVacuous;
    return check;
  }
  for (int i = 0; i < family.size(); ++i) {
    for (int j = i + 1; j < family.size(); ++j) {
      const Cut& s = family.cut(i);
      const Cut& t = family.cut(j);
      if (s.contains(t.x) || s.contains(t.y)) {
        check.disjoint = ClaimStatus::kFail;
        check.witnesses.push_back("cuts " + describe_cut(g, s) + " and " +
                                  describe_cut(g, t) + " intersect");
      }
    }
  }
  bool split_seen = false;
  for (int i = 0; i < family.size(); ++i) {
    for (int j = 0; j < family.size(); ++j) {
      if (i == j) continue;
      const Cut& s = family.cut(i);
      const Cut& t = family.cut(j);
      const int cx = s.components.component_id[t.x];
      const int cy = s.components.component_id[t.y];
      if (cx == cy && cx >= 0) continue;
      split_seen = true;
      check.witnesses.push_back(describe_cut(g, t) + " is split by " +
                                describe_cut(g, s));
    }
  }
  if (split_seen) {
    check.same_side =
        is_four_cycle(g) ? ClaimStatus::kExempt : ClaimStatus::kFail;
  }
  return check;
}

}  // namespace tokgraph
