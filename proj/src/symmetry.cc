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

#include "tokgraph/symmetry.h"

#include <cctype>
#include <sstream>

namespace tokgraph {

AlphaSet AlphaSet::Empty(const CutFamily& family, int cut) {
  return AlphaSet{cut, boost::dynamic_bitset<>(family.tuples(cut).size())};
}

AlphaSet AlphaSet::Full(const CutFamily& family, int cut) {
  AlphaSet a = Empty(family, cut);
  a.members.set();
  return a;
}

AlphaSet AlphaSet::Of(const CutFamily& family, int cut,
                      std::span<const Distribution> tuples) {
  AlphaSet a = Empty(family, cut);
  for (const Distribution& t : tuples) {
    auto global = family.find(cut, t);
    if (!global) {
      throw Error("tuple " + describe_tuple(t) + " is not in the tuple set of cut " +
                  std::to_string(cut + 1));
    }
    a.members.set(*global - family.offset(cut));
  }
  return a;
}

AlphaSet AlphaSet::operator^(const AlphaSet& other) const {
  if (cut != other.cut) throw Error("symmetric difference across different cuts");
  return AlphaSet{cut, members ^ other.members};
}

BetaSet BetaSet::Empty(const CutFamily& family) {
  return BetaSet{boost::dynamic_bitset<>(family.universe_size())};
}

BetaSet BetaSet::Full(const CutFamily& family) {
  BetaSet b = Empty(family);
  b.members.set();
  return b;
}

BetaSet BetaSet::Singleton(const CutFamily& family, std::size_t global) {
  BetaSet b = Empty(family);
  b.members.set(global);
  return b;
}

BetaSet BetaSet::FromAlpha(const CutFamily& family, const AlphaSet& alpha) {
  BetaSet b = Empty(family);
  const std::size_t base = family.offset(alpha.cut);
  for (std::size_t i = 0; i < alpha.members.size(); ++i) {
    if (alpha.members[i]) b.members.set(base + i);
  }
  return b;
}

AlphaSet BetaSet::restrict_to(const CutFamily& family, int cut) const {
  AlphaSet a = AlphaSet::Empty(family, cut);
  const std::size_t base = family.offset(cut);
  for (std::size_t i = 0; i < a.members.size(); ++i) {
    if (members[base + i]) a.members.set(i);
  }
  return a;
}

BetaSet BetaSet::operator^(const BetaSet& other) const {
  return BetaSet{members ^ other.members};
}

BetaSet BetaSet::operator|(const BetaSet& other) const {
  return BetaSet{members | other.members};
}

std::string describe_beta(const CutFamily& family, const BetaSet& beta) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (std::size_t t = 0; t < beta.members.size(); ++t) {
    if (!beta.members[t]) continue;
    if (!first) out << ',';
    first = false;
    out << family.tuple_ref(t).cut + 1 << ':' << describe_tuple(family.tuple(t));
  }
  out << '}';
  return out.str();
}

Permutation permutation_from_cycles(const Graph& g, std::string_view cycles) {
  std::vector<Permutation::Point> image(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) image[v] = static_cast<Permutation::Point>(v);
  std::vector<bool> used(g.num_vertices(), false);

  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < cycles.size() &&
           (std::isspace(static_cast<unsigned char>(cycles[i])) || cycles[i] == ','))
      ++i;
  };
  skip_space();
  while (i < cycles.size()) {
    if (cycles[i] != '(') throw Error("cycle notation: expected '('");
    ++i;
    std::vector<Vertex> cycle;
    for (;;) {
      skip_space();
      if (i >= cycles.size()) throw Error("cycle notation: unterminated cycle");
      if (cycles[i] == ')') {
        ++i;
        break;
      }
      std::size_t j = i;
      while (j < cycles.size() && cycles[j] != ')' && cycles[j] != ',' &&
             !std::isspace(static_cast<unsigned char>(cycles[j])))
        ++j;
      std::string_view label = cycles.substr(i, j - i);
      i = j;
      auto v = g.find_label(label);
      if (!v) throw Error("unknown vertex label '" + std::string(label) + "'");
      if (used[*v]) throw Error("vertex '" + std::string(label) + "' repeated");
      used[*v] = true;
      cycle.push_back(*v);
    }
    for (std::size_t c = 0; c < cycle.size(); ++c) {
      image[cycle[c]] =
          static_cast<Permutation::Point>(cycle[(c + 1) % cycle.size()]);
    }
    skip_space();
  }
  return Permutation(std::move(image));
}

bool is_graph_automorphism(const Permutation& f, const Graph& g) {
  if (f.degree() != static_cast<std::size_t>(g.num_vertices())) return false;
  for (auto [u, v] : g.edges()) {
    if (!g.adjacent(static_cast<Vertex>(f(u)), static_cast<Vertex>(f(v)))) {
      return false;
    }
  }
  return true;
}

namespace {

TokenConfig image_of(const Permutation& f, TokenConfig a) {
  std::uint64_t bits = 0;
  for (std::uint64_t b = a.bits(); b != 0; b &= b - 1) {
    bits |= std::uint64_t{1} << f(static_cast<Permutation::Point>(std::countr_zero(b)));
  }
  return TokenConfig(bits);
}

Permutation induced_unchecked(const Permutation& f, const TokenGraph& tg) {
  std::vector<Permutation::Point> image(tg.num_vertices());
  for (TokenIndex i = 0; i < tg.num_vertices(); ++i) {
    image[i] = tg.index_of(image_of(f, tg.config(i)));
  }
  return Permutation(std::move(image));
}

}  // namespace

Permutation induced(const Permutation& f, const TokenGraph& tg) {
  if (!is_graph_automorphism(f, tg.base())) {
    throw Error("permutation is not an automorphism of the base graph");
  }
  return induced_unchecked(f, tg);
}

TokenConfig apply_phi(const CutFamily& family, const AlphaSet& alpha,
                      TokenConfig a) {
  const Cut& cut = family.cut(alpha.cut);
  if (a.contains(cut.x) == a.contains(cut.y)) return a;
  Classification cls = classify(cut, a);
  auto global = family.find(alpha.cut, cls.counts);
  if (!global) return a;
  if (!alpha.members[*global - family.offset(alpha.cut)]) return a;
  return token_move(a, cut);
}

Permutation phi(const CutFamily& family, const AlphaSet& alpha,
                const TokenGraph& tg) {
  std::vector<Permutation::Point> image(tg.num_vertices());
  for (TokenIndex i = 0; i < tg.num_vertices(); ++i) {
    image[i] = tg.index_of(apply_phi(family, alpha, tg.config(i)));
  }
  return Permutation(std::move(image));
}

Permutation psi(const BetaSet& beta, const CutFamily& family,
                const TokenGraph& tg, CompositionOrder order) {
  std::vector<AlphaSet> parts;
  for (int c = 0; c < family.size(); ++c) parts.push_back(beta.restrict_to(family, c));
  if (order == CompositionOrder::kForward) {
    std::reverse(parts.begin(), parts.end());
  }
  std::vector<Permutation::Point> image(tg.num_vertices());
  for (TokenIndex i = 0; i < tg.num_vertices(); ++i) {
    TokenConfig a = tg.config(i);
    for (const AlphaSet& alpha : parts) {
      if (alpha.members.any()) a = apply_phi(family, alpha, a);
    }
    image[i] = tg.index_of(a);
  }
  return Permutation(std::move(image));
}

bool is_automorphism(const Permutation& p, const TokenGraph& tg) {
  if (p.degree() != tg.num_vertices()) return false;
  const Permutation inv = p.inverse();
  for (TokenIndex a = 0; a < tg.num_vertices(); ++a) {
    if (tg.degree(a) != tg.degree(p(a))) return false;
    for (TokenIndex b : tg.neighbours(a)) {
      if (!tg.adjacent(p(a), p(b))) return false;
      if (!tg.adjacent(inv(a), inv(b))) return false;
    }
  }
  return true;
}

InducedWitness classify_induced(const Permutation& p, const TokenGraph& tg,
                                std::span<const Permutation> aut_g) {
  const bool half = 2 * tg.k() == tg.n();
  std::optional<Permutation> complement;
  if (half) complement = complement_automorphism(tg);
  for (const Permutation& f : aut_g) {
    const Permutation iota = induced_unchecked(f, tg);
    if (iota == p) return {InducedKind::kIota, f};
    if (half && *complement * iota == p) return {InducedKind::kComplementIota, f};
  }
  return {};
}

TupleAction::TupleAction(const Permutation& f, const Graph& g,
                         const CutFamily& family)
    : family_(&family) {
  if (!is_graph_automorphism(f, g)) {
    throw Error("permutation is not an automorphism of the base graph");
  }
  for (int i = 0; i < family.size(); ++i) {
    const Cut& cut = family.cut(i);
    auto j = family.find_cut(static_cast<Vertex>(f(cut.x)),
                             static_cast<Vertex>(f(cut.y)));
    if (!j) throw Error("automorphism does not permute the cuts");
    const Cut& target = family.cut(*j);
    std::vector<int> comp(cut.count());
    for (int c = 0; c < cut.count(); ++c) {
      const Vertex rep = cut.components.components[c].front();
      comp[c] = target.components.component_id[f(rep)];
    }
    cut_image_.push_back(*j);
    component_image_.push_back(std::move(comp));
  }
}

std::size_t TupleAction::operator()(std::size_t tuple) const {
  const TupleRef ref = family_->tuple_ref(tuple);
  const Distribution& src = family_->tuple(tuple);
  const int j = cut_image_[ref.cut];
  Distribution dst(family_->cut(j).count(), 0);
  for (std::size_t c = 0; c < src.size(); ++c) {
    dst[component_image_[ref.cut][c]] = src[c];
  }
  auto out = family_->find(j, dst);
  if (!out) throw Error("tuple image left the tuple set");
  return *out;
}

BetaSet TupleAction::operator()(const BetaSet& beta) const {
  BetaSet out = BetaSet::Empty(*family_);
  for (std::size_t t = 0; t < beta.members.size(); ++t) {
    if (beta.members[t]) out.members.set((*this)(t));
  }
  return out;
}

std::size_t act_on_tuple(const Permutation& f, const Graph& g,
                         std::size_t tuple, const CutFamily& family) {
  return TupleAction(f, g, family)(tuple);
}

std::size_t complement_on_tuple(std::size_t tuple, const CutFamily& family,
                                int n) {
  if (2 * family.k() != n) throw Error("tuple complement requires k = n/2");
  const TupleRef ref = family.tuple_ref(tuple);
  const std::vector<int> sizes = family.cut(ref.cut).sizes();
  Distribution dst = family.tuple(tuple);
  for (std::size_t c = 0; c < dst.size(); ++c) dst[c] = sizes[c] - dst[c];
  auto out = family.find(ref.cut, dst);
  if (!out) throw Error("complemented tuple left the tuple set");
  return *out;
}

BetaSet complement_on_beta(const BetaSet& beta, const CutFamily& family, int n) {
  BetaSet out = BetaSet::Empty(family);
  for (std::size_t t = 0; t < beta.members.size(); ++t) {
    if (beta.members[t]) out.members.set(complement_on_tuple(t, family, n));
  }
  return out;
}

bool preserves_cut_orientation(const Permutation& f, const CutFamily& family) {
  for (const Cut& cut : family.cuts()) {
    auto j = family.find_cut(static_cast<Vertex>(f(cut.x)),
                             static_cast<Vertex>(f(cut.y)));
    if (!j) return false;
    if (static_cast<Vertex>(f(cut.x)) != family.cut(*j).x) return false;
  }
  return true;
}

CommutationCheck verify_commutation(const Permutation& f, const BetaSet& beta,
                                    const TokenGraph& tg,
                                    const CutFamily& family) {
  const TupleAction action(f, tg.base(), family);
  if (!preserves_cut_orientation(f, family)) {
    throw Error("automorphism does not send x-vertices to x-vertices");
  }
  CommutationCheck check;
  const Permutation iota = induced_unchecked(f, tg);
  const BetaSet moved = action(beta);
  check.induced_side =
      iota * psi(beta, family, tg) == psi(moved, family, tg) * iota;
  if (!check.induced_side) {
    check.witness = "iota(f) psi_b != psi_fb iota(f) for b = " +
                    describe_beta(family, beta);
  }
  if (2 * tg.k() == tg.n()) {
    const Permutation c = complement_automorphism(tg);
    const BetaSet cbeta = complement_on_beta(beta, family, tg.n());
    check.complement_side =
        c * psi(beta, family, tg) == psi(cbeta, family, tg) * c;
    if (!*check.complement_side) {
      check.witness += (check.witness.empty() ? "" : "; ");
      check.witness += "c psi_b != psi_cb c for b = " + describe_beta(family, beta);
    }
  }
  return check;
}

}  // namespace tokgraph
