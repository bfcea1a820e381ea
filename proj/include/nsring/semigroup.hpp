#pragma once

// Numerical semigroups with exact integer arithmetic.
//
// A numerical semigroup H is a subset of the non-negative integers that
// contains 0, is closed under addition, and has finite complement. It is
// described uniquely by its minimal generating system a_1 < ... < a_n with
// gcd(a_1, ..., a_n) = 1. Everything this type exposes is derived from the
// Apery table of H with respect to a_1: entry r holds the least element of H
// congruent to r mod a_1. Membership, the Frobenius number, the genus and
// the pseudo-Frobenius numbers all read off that table.
//
// Instances are immutable after construction and safe to share across
// threads. All caches are computed eagerly except the gap list, which can be
// as large as the genus and is produced on demand.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "nsring/errors.hpp"

namespace nsring {

// Adds two exponents, refusing to wrap around.
inline int64_t checked_add(int64_t a, int64_t b) {
  int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Overflow("integer overflow in exponent arithmetic");
  }
  return out;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
  int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw Overflow("integer overflow in exponent arithmetic");
  }
  return out;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
  int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Overflow("integer overflow in exponent arithmetic");
  }
  return out;
}

// The numeric profile of a semigroup, in one flat record.
struct SemigroupInvariants {
  int64_t multiplicity = 0;   // least positive element a_1
  int64_t embdim = 0;         // number of minimal generators n
  int64_t codim = 0;          // embdim - 1
  int64_t type = 0;           // number of pseudo-Frobenius numbers
  int64_t frobenius = 0;      // largest integer not in H (-1 for H = N)
  int64_t genus = 0;          // number of gaps
  int64_t conductor = 0;      // frobenius + 1
  int64_t a_invariant = 0;    // equals the Frobenius number
  bool min_multiplicity = false;  // multiplicity == embdim

  friend bool operator==(const SemigroupInvariants&,
                         const SemigroupInvariants&) = default;
};

class NumericalSemigroup {
 public:
  // Guard for the Theta(a_1)-sized Apery table.
  static constexpr int64_t max_multiplicity = 1'000'000;

  // Builds the semigroup generated by `gens`. The input need not be minimal
  // or sorted; it is reduced to the minimal system. Throws EmptyInput,
  // ParameterViolation (non-positive entries), NotCoprime, or ResourceLimit
  // (least generator above max_multiplicity).
  static NumericalSemigroup from_generators(std::vector<int64_t> gens);

  // Minimal generators, ascending.
  const std::vector<int64_t>& min_gens() const noexcept { return min_gens_; }

  // apery()[r] is the least element of H congruent to r mod multiplicity().
  const std::vector<int64_t>& apery() const noexcept { return apery_; }

  // Pseudo-Frobenius numbers, ascending: the gaps x with x + h in H for
  // every nonzero h in H. Throws TrivialSemigroup for H = N, which has no
  // gaps at all; use type() when 0 is an acceptable answer.
  const std::vector<int64_t>& pseudo_frobenius() const {
    if (is_trivial()) {
      throw TrivialSemigroup(
          "pseudo-Frobenius numbers are undefined for the full semigroup");
    }
    return pf_;
  }

  int64_t multiplicity() const noexcept { return min_gens_.front(); }
  int64_t embdim() const noexcept {
    return static_cast<int64_t>(min_gens_.size());
  }
  int64_t codim() const noexcept { return embdim() - 1; }
  int64_t type() const noexcept { return static_cast<int64_t>(pf_.size()); }
  int64_t frobenius() const noexcept { return frobenius_; }
  int64_t genus() const noexcept { return genus_; }
  int64_t conductor() const noexcept { return frobenius_ + 1; }
  bool min_multiplicity() const noexcept {
    return multiplicity() == embdim();
  }

  // True exactly for H = N.
  bool is_trivial() const noexcept { return min_gens_[0] == 1; }

  bool contains(int64_t m) const noexcept {
    if (m < 0) return false;
    return m >= apery_[static_cast<size_t>(m % multiplicity())];
  }

  // The gaps of H, ascending. Size equals genus(); computed on call.
  std::vector<int64_t> gaps() const {
    std::vector<int64_t> out;
    out.reserve(static_cast<size_t>(genus_));
    const int64_t m = multiplicity();
    for (int64_t r = 1; r < m; ++r) {
      for (int64_t k = r; k < apery_[static_cast<size_t>(r)]; k += m) {
        out.push_back(k);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  SemigroupInvariants invariants() const noexcept {
    SemigroupInvariants inv;
    inv.multiplicity = multiplicity();
    inv.embdim = embdim();
    inv.codim = codim();
    inv.type = type();
    inv.frobenius = frobenius();
    inv.genus = genus();
    inv.conductor = conductor();
    inv.a_invariant = frobenius();
    inv.min_multiplicity = min_multiplicity();
    return inv;
  }

  friend bool operator==(const NumericalSemigroup& lhs,
                         const NumericalSemigroup& rhs) noexcept {
    return lhs.min_gens_ == rhs.min_gens_;
  }

  // Orders by genus, then by generator list; the order used for reports.
  friend bool operator<(const NumericalSemigroup& lhs,
                        const NumericalSemigroup& rhs) noexcept {
    if (lhs.genus_ != rhs.genus_) return lhs.genus_ < rhs.genus_;
    return lhs.min_gens_ < rhs.min_gens_;
  }

 private:
  NumericalSemigroup() = default;

  std::vector<int64_t> min_gens_;
  std::vector<int64_t> apery_;
  std::vector<int64_t> pf_;
  int64_t frobenius_ = 0;
  int64_t genus_ = 0;
};

inline NumericalSemigroup NumericalSemigroup::from_generators(
    std::vector<int64_t> gens) {
  if (gens.empty()) throw EmptyInput("no generators given");
  for (int64_t g : gens) {
    if (g <= 0) {
      throw ParameterViolation("generators must be positive, got " +
                               std::to_string(g));
    }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  int64_t d = 0;
  for (int64_t g : gens) d = std::gcd(d, g);
  if (d != 1) {
    throw NotCoprime("generators have gcd " + std::to_string(d));
  }

  NumericalSemigroup h;
  if (gens.front() == 1) {
    h.min_gens_ = {1};
    h.apery_ = {0};
    h.frobenius_ = -1;
    h.genus_ = 0;
    return h;
  }

  const int64_t m = gens.front();
  if (m > max_multiplicity) {
    throw ResourceLimit("least generator " + std::to_string(m) +
                        " exceeds the supported multiplicity " +
                        std::to_string(max_multiplicity));
  }

  // dist[r] is the least element of the semigroup generated by the kept
  // generators that is congruent to r mod m: the shortest path from residue
  // 0 to residue r where each generator a is an edge of weight a. Round
  // robin relaxation to the fixpoint; weights are positive, so at most m
  // rounds change anything.
  const int64_t inf = std::numeric_limits<int64_t>::max();
  std::vector<int64_t> dist(static_cast<size_t>(m), inf);
  dist[0] = 0;
  std::vector<int64_t> kept;

  auto relax = [&]() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int64_t r = 0; r < m; ++r) {
        const int64_t base = dist[static_cast<size_t>(r)];
        if (base == inf) continue;
        for (int64_t a : kept) {
          const int64_t value = checked_add(base, a);
          const size_t nr = static_cast<size_t>(value % m);
          if (value < dist[nr]) {
            dist[nr] = value;
            changed = true;
          }
        }
      }
    }
  };

  kept.push_back(m);
  relax();
  for (size_t i = 1; i < gens.size(); ++i) {
    const int64_t v = gens[i];
    // Since m itself is kept, membership in the partial semigroup is a
    // one-line check against its Apery table.
    if (dist[static_cast<size_t>(v % m)] <= v) continue;
    kept.push_back(v);
    relax();
  }

  h.min_gens_ = std::move(kept);
  h.apery_ = std::move(dist);

  int64_t frob = -1;
  int64_t genus = 0;
  for (int64_t r = 0; r < m; ++r) {
    const int64_t w = h.apery_[static_cast<size_t>(r)];
    frob = std::max(frob, w - m);
    genus += (w - r) / m;
  }
  h.frobenius_ = frob;
  h.genus_ = genus;

  // Pseudo-Frobenius numbers: w - m for the Apery elements w maximal in the
  // order "w <= w' iff w' - w in H". w is non-maximal exactly when w plus
  // some minimal generator is again an Apery element.
  for (int64_t r = 0; r < m; ++r) {
    const int64_t w = h.apery_[static_cast<size_t>(r)];
    bool maximal = true;
    for (int64_t a : h.min_gens_) {
      const int64_t up = checked_add(w, a);
      if (h.apery_[static_cast<size_t>(up % m)] == up) {
        maximal = false;
        break;
      }
    }
    if (maximal) h.pf_.push_back(w - m);
  }
  std::sort(h.pf_.begin(), h.pf_.end());
  return h;
}

}  // namespace nsring
