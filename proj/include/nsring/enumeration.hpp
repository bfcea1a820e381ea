#pragma once

// Exhaustive enumeration of numerical semigroups by genus.
//
// The semigroups of genus at most g form a tree rooted at N: the children of
// H are the semigroups H minus {a} for the minimal generators a of H larger
// than the Frobenius number, and the parent of any H != N is H plus its
// Frobenius number. Walking that tree depth first visits every semigroup of
// genus <= g exactly once.
//
// brute_force_enumerate is deliberately different: it builds gap sets
// digit by digit and exists only to cross-check the tree walk on small
// genus.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "nsring/errors.hpp"
#include "nsring/semigroup.hpp"

namespace nsring {

// One visited tree node: the semigroup plus the generators whose removal
// produces its children.
struct EnumerationNode {
  NumericalSemigroup semigroup;
  std::vector<int64_t> removable;  // minimal generators above the Frobenius
};

namespace detail {

inline std::vector<int64_t> removable_generators(const NumericalSemigroup& h) {
  std::vector<int64_t> out;
  for (int64_t a : h.min_gens()) {
    if (a > h.frobenius()) out.push_back(a);
  }
  return out;
}

// Generators of H minus {g} for a removable minimal generator g: the other
// minimal generators, g plus each minimal generator, and 3g (2g is covered
// by g + g). Every sum that used g at least once regroups into these.
inline NumericalSemigroup remove_generator(const NumericalSemigroup& h,
                                           int64_t g) {
  std::vector<int64_t> gens;
  gens.reserve(h.min_gens().size() * 2 + 1);
  for (int64_t a : h.min_gens()) {
    if (a != g) gens.push_back(a);
    gens.push_back(checked_add(g, a));
  }
  gens.push_back(checked_add(checked_add(g, g), g));
  return NumericalSemigroup::from_generators(std::move(gens));
}

inline void walk(const NumericalSemigroup& h, int64_t g_max,
                 const std::function<void(const EnumerationNode&)>& visit) {
  EnumerationNode node{h, removable_generators(h)};
  visit(node);
  if (h.genus() == g_max) return;
  for (int64_t g : node.removable) {
    walk(remove_generator(h, g), g_max, visit);
  }
}

}  // namespace detail

inline constexpr int64_t max_enumeration_genus = 30;
inline constexpr int64_t max_brute_force_genus = 14;

// Depth-first walk over every numerical semigroup of genus <= g_max.
// Children are visited in increasing order of the removed generator.
inline void enumerate_by_genus(
    int64_t g_max, const std::function<void(const EnumerationNode&)>& visit) {
  if (g_max < 0) throw ParameterViolation("genus bound must be >= 0");
  if (g_max > max_enumeration_genus) {
    throw ResourceLimit("genus bound " + std::to_string(g_max) +
                        " exceeds the enumeration guard " +
                        std::to_string(max_enumeration_genus));
  }
  detail::walk(NumericalSemigroup::from_generators({1}), g_max, visit);
}

// Collected variant, sorted by genus then generator list.
inline std::vector<NumericalSemigroup> enumerate_by_genus(int64_t g_max) {
  std::vector<NumericalSemigroup> out;
  enumerate_by_genus(g_max, [&](const EnumerationNode& node) {
    out.push_back(node.semigroup);
  });
  std::sort(out.begin(), out.end());
  return out;
}

// Independent enumeration for cross-checks: chooses for each integer in
// [1, 2 * g_max + 1] whether it is a gap, pruning choices that violate
// closure (a sum of two members can never be a gap) or the gap budget.
// Every gap of a semigroup of genus g lies below 2g, so the window is
// exhaustive and the semigroup is determined by its members inside it.
inline std::vector<NumericalSemigroup> brute_force_enumerate(int64_t g_max) {
  if (g_max < 0) throw ParameterViolation("genus bound must be >= 0");
  if (g_max > max_brute_force_genus) {
    throw ResourceLimit("genus bound " + std::to_string(g_max) +
                        " exceeds the brute force guard " +
                        std::to_string(max_brute_force_genus));
  }

  const int64_t window = 2 * g_max + 1;
  std::vector<NumericalSemigroup> out;
  // member[x] for x in [0, window]; decided left to right.
  std::vector<char> member(static_cast<size_t>(window) + 1, 0);
  member[0] = 1;

  auto emit = [&]() {
    // Every minimal generator of a genus-g semigroup is at most 2g + 1 (of
    // any candidate a, each pair {x, a - x} contains a gap), so the members
    // inside the window generate.
    std::vector<int64_t> gens;
    for (int64_t x = 1; x <= window; ++x) {
      if (member[static_cast<size_t>(x)]) gens.push_back(x);
    }
    for (int64_t x = window + 1; x <= window + 2; ++x) gens.push_back(x);
    auto h = NumericalSemigroup::from_generators(std::move(gens));
    // The candidate was built closed; the semigroup its members generate
    // must reproduce it exactly.
    for (int64_t x = 0; x <= window; ++x) {
      if (h.contains(x) != static_cast<bool>(member[static_cast<size_t>(x)])) {
        throw Error("brute force candidate is not additively closed",
                    ErrorCode::bad_input);
      }
    }
    out.push_back(std::move(h));
  };

  // x: next integer to decide; gaps: gaps used so far.
  std::function<void(int64_t, int64_t)> decide = [&](int64_t x,
                                                     int64_t gaps) {
    if (x > window) {
      emit();
      return;
    }
    bool forced_member = false;
    for (int64_t y = 1; y <= x - y; ++y) {
      if (member[static_cast<size_t>(y)] &&
          member[static_cast<size_t>(x - y)]) {
        forced_member = true;
        break;
      }
    }
    member[static_cast<size_t>(x)] = 1;
    decide(x + 1, gaps);
    if (!forced_member && gaps < g_max) {
      member[static_cast<size_t>(x)] = 0;
      decide(x + 1, gaps + 1);
      member[static_cast<size_t>(x)] = 1;
    }
  };
  decide(1, 0);

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace nsring
