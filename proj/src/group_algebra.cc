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

#include "tokgraph/group_algebra.h"

#include <algorithm>
#include <limits>

namespace tokgraph {

PermGroup stabilizer_S(const PermGroup& aut_g, const CutFamily& family) {
  std::vector<Permutation> kept;
  for (const Permutation& f : aut_g.elements()) {
    if (preserves_cut_orientation(f, family)) kept.push_back(f);
  }
  PermGroup filtered(aut_g.degree(), {}, kept);
  PermGroup out(aut_g.degree(), generating_subset(filtered), std::move(kept));
  if (!out.is_closed()) throw Error("orientation-preserving set is not a subgroup");
  return out;
}

Decomposition decompose_induced(const Permutation& f, const Graph& g,
                                const CutFamily& family) {
  const TupleAction action(f, g, family);
  std::vector<Permutation::Point> image(f.image().begin(), f.image().end());
  Decomposition out{Permutation(), BetaSet::Empty(family), {}};
  for (int i = 0; i < family.size(); ++i) {
    const Cut& src = family.cut(i);
    const int j = action.cut_image(i);
    const Cut& dst = family.cut(j);
    if (static_cast<Vertex>(f(src.x)) != dst.y) continue;
    out.flipped.push_back(i);
    image[src.x] = static_cast<Permutation::Point>(dst.x);
    image[src.y] = static_cast<Permutation::Point>(dst.y);
    out.beta = out.beta | BetaSet::FromAlpha(family, AlphaSet::Full(family, j));
  }
  out.corrected = Permutation(std::move(image));
  return out;
}

std::uint64_t predicted_order(int n, int k, const CutFamily& family,
                              std::size_t stabilizer_order) {
  if (family.empty()) throw Error("theorem vacuous: the graph has no such 2-cuts");
  const std::size_t exponent = family.universe_size() + (2 * k == n ? 1 : 0);
  if (exponent >= 64) throw Error("predicted order overflows 64 bits");
  const std::uint64_t power = std::uint64_t{1} << exponent;
  if (stabilizer_order > std::numeric_limits<std::uint64_t>::max() / power) {
    throw Error("predicted order overflows 64 bits");
  }
  return power * stabilizer_order;
}

std::vector<Permutation> singleton_flips(const CutFamily& family,
                                         const TokenGraph& tg) {
  std::vector<Permutation> out;
  for (std::size_t t = 0; t < family.universe_size(); ++t) {
    out.push_back(psi(BetaSet::Singleton(family, t), family, tg));
  }
  return out;
}

TheoremCheck verify_theorem(const Graph& g, const TokenGraph& tg,
                            const CutFamily& family, const PermGroup& aut_g,
                            std::size_t cap) {
  TheoremCheck check;
  if (family.empty()) {
    check.vacuous = true;
    return check;
  }
  const bool half = 2 * tg.k() == tg.n();
  const std::size_t degree = tg.num_vertices();

  const PermGroup stab = stabilizer_S(aut_g, family);
  check.universe_size = family.universe_size();
  check.stabilizer_order = stab.order();
  check.predicted = predicted_order(tg.n(), tg.k(), family, stab.order());

  std::vector<Permutation> top_gens;
  for (const Permutation& f : stab.generators()) top_gens.push_back(induced(f, tg));
  if (half) top_gens.push_back(complement_automorphism(tg));
  const std::vector<Permutation> flips = singleton_flips(family, tg);
  std::vector<Permutation> all_gens = top_gens;
  all_gens.insert(all_gens.end(), flips.begin(), flips.end());

  try {
    const PermGroup whole = closure(all_gens, degree, cap);
    const PermGroup flip_group = closure(flips, degree, cap);
    const PermGroup top = closure(top_gens, degree, cap);
    check.closure_order = whole.order();
    check.flip_group_order = flip_group.order();

    check.order_matches.holds = whole.order() == check.predicted;
    if (!check.order_matches.holds) {
      check.order_matches.witness = "closure order " + std::to_string(whole.order()) +
                                    " != predicted " + std::to_string(check.predicted);
    }

    check.flips_normal.holds = true;
    for (const Permutation& x : all_gens) {
      const Permutation x_inv = x.inverse();
      for (const Permutation& n : flips) {
        if (!flip_group.contains(x * n * x_inv)) {
          check.flips_normal.holds = false;
          check.flips_normal.witness = "a generator conjugates a flip out of the flip group";
          break;
        }
      }
      if (!check.flips_normal.holds) break;
    }

    std::size_t shared = 0;
    for (const Permutation& h : top.elements()) {
      if (flip_group.contains(h)) ++shared;
    }
    check.trivial_intersection.holds = shared == 1;
    if (shared != 1) {
      check.trivial_intersection.witness =
          std::to_string(shared) + " elements shared by the top group and the flip group";
    }

    check.contains_induced.holds = true;
    for (const Permutation& f : aut_g.elements()) {
      if (!whole.contains(induced(f, tg))) {
        check.contains_induced.holds = false;
        check.contains_induced.witness = "iota(" + f.cycles() + ") lies outside the group";
        break;
      }
    }

    if (flip_group.order() * top.order() > cap) {
      throw CapExceeded(cap, flip_group.order() * top.order());
    }
    std::vector<Permutation> products;
    products.reserve(flip_group.order() * top.order());
    for (const Permutation& n : flip_group.elements()) {
      for (const Permutation& h : top.elements()) products.push_back(n * h);
    }
    std::sort(products.begin(), products.end());
    const bool distinct =
        std::adjacent_find(products.begin(), products.end()) == products.end();
    bool saturates = products.size() == whole.order();
    for (std::size_t i = 0; saturates && i < products.size(); ++i) {
      saturates = whole.contains(products[i]);
    }
    check.unique_factorization.holds = distinct && saturates;
    if (!distinct) {
      check.unique_factorization.witness = "two factor pairs give the same element";
    } else if (!saturates) {
      check.unique_factorization.witness =
          std::to_string(products.size()) + " products for a group of order " +
          std::to_string(whole.order());
    }
  } catch (const CapExceeded& e) {
    check.capped = true;
    check.cap_detail = e.what();
  }

  check.decomposition_holds.holds = true;
  for (const Permutation& f : aut_g.elements()) {
    const Decomposition d = decompose_induced(f, g, family);
    const bool ok = preserves_cut_orientation(d.corrected, family) &&
                    induced(f, tg) == psi(d.beta, family, tg) * induced(d.corrected, tg);
    if (!ok) {
      check.decomposition_holds.holds = false;
      check.decomposition_holds.witness = "decomposition fails for f = " + f.cycles();
      break;
    }
  }
  return check;
}

}  // namespace tokgraph
