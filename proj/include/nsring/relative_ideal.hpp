#pragma once

// Relative ideals of a numerical semigroup, exponent-set style.
//
// For a numerical semigroup H, a relative ideal is a set E of integers with
// E + H contained in E that is bounded below, described here by its finite
// minimal generating list: E is the union of the sets g + H. Negative
// exponents are allowed; they correspond to fractions over the semigroup
// ring. The three ideals the rest of the library cares about are built
// here: the canonical ideal (generated by the negated pseudo-Frobenius
// numbers), quotients (colon ideals), and products, which combine into the
// trace ideal.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nsring/errors.hpp"
#include "nsring/semigroup.hpp"

namespace nsring {

class RelativeIdeal {
 public:
  // Reduces `gens` to the unique minimal generating list: g is dropped
  // exactly when g - g' lands in H for an earlier kept g'.
  RelativeIdeal(NumericalSemigroup ambient, std::vector<int64_t> gens)
      : ambient_(std::move(ambient)) {
    if (gens.empty()) throw EmptyInput("a relative ideal needs generators");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (int64_t g : gens) {
      bool redundant = false;
      for (int64_t kept : gens_) {
        if (ambient_.contains(checked_sub(g, kept))) {
          redundant = true;
          break;
        }
      }
      if (!redundant) gens_.push_back(g);
    }
  }

  // The semigroup itself as the unit relative ideal.
  static RelativeIdeal unit(NumericalSemigroup ambient) {
    return RelativeIdeal(std::move(ambient), {0});
  }

  const NumericalSemigroup& ambient() const noexcept { return ambient_; }

  // Minimal generators, ascending, pairwise incomparable under H-shifts.
  const std::vector<int64_t>& generators() const noexcept { return gens_; }

  bool contains_exponent(int64_t m) const {
    for (int64_t g : gens_) {
      if (ambient_.contains(checked_sub(m, g))) return true;
    }
    return false;
  }

  // Least exponent in the ideal.
  int64_t min_exponent() const noexcept { return gens_.front(); }

  // Smallest c with [c, infinity) contained in the ideal; a coarse but
  // sound bound is min generator + conductor of H.
  int64_t conductor_bound() const noexcept {
    return gens_.front() + ambient_.conductor();
  }

  // Proper ideal of the semigroup ring: contained in H but not all of it.
  // Containment in H means every generator is a member; equality to H would
  // force exponent 0 inside.
  bool is_proper_in_ring() const {
    for (int64_t g : gens_) {
      if (!ambient_.contains(g)) return false;
    }
    return !contains_exponent(0);
  }

  friend bool operator==(const RelativeIdeal& lhs,
                         const RelativeIdeal& rhs) noexcept {
    return lhs.ambient_ == rhs.ambient_ && lhs.gens_ == rhs.gens_;
  }

 private:
  NumericalSemigroup ambient_;
  std::vector<int64_t> gens_;
};

namespace detail {

inline void require_same_ambient(const RelativeIdeal& a,
                                 const RelativeIdeal& b) {
  if (!(a.ambient() == b.ambient())) {
    throw AmbientMismatch("relative ideals live over different semigroups");
  }
}

}  // namespace detail

// The canonical ideal: generated by the negated pseudo-Frobenius numbers.
// Its exponent set is exactly { m : -m is not in H }.
inline RelativeIdeal canonical_ideal(const NumericalSemigroup& h) {
  if (h.is_trivial()) {
    throw TrivialSemigroup(
        "the canonical ideal is not defined for the full semigroup here");
  }
  std::vector<int64_t> gens;
  gens.reserve(h.pseudo_frobenius().size());
  for (int64_t alpha : h.pseudo_frobenius()) gens.push_back(-alpha);
  return RelativeIdeal(h, std::move(gens));
}

// The canonical ideal shifted by gamma: generators gamma - alpha over the
// pseudo-Frobenius numbers alpha.
inline RelativeIdeal scaled_canonical(const NumericalSemigroup& h,
                                      int64_t gamma) {
  if (h.is_trivial()) {
    throw TrivialSemigroup(
        "the canonical ideal is not defined for the full semigroup here");
  }
  std::vector<int64_t> gens;
  gens.reserve(h.pseudo_frobenius().size());
  for (int64_t alpha : h.pseudo_frobenius()) {
    gens.push_back(checked_add(gamma, -alpha));
  }
  return RelativeIdeal(h, std::move(gens));
}

// The quotient (j : i) = { m : m + i is contained in j }. Membership of m
// only needs m + g in j for the generators g of i. The members form a
// relative ideal again; its generators are found by scanning the finite
// range between the sharp lower bound and the point from which everything
// is a member.
inline RelativeIdeal colon(const RelativeIdeal& j, const RelativeIdeal& i) {
  detail::require_same_ambient(j, i);
  const NumericalSemigroup& h = j.ambient();

  auto member = [&](int64_t m) {
    for (int64_t g : i.generators()) {
      if (!j.contains_exponent(checked_add(m, g))) return false;
    }
    return true;
  };

  // m below min(j) - min(i) fails already at the least generator of i; m at
  // or above cond(j) - min(i) pushes all of i past the conductor of j.
  const int64_t lo = j.min_exponent() - i.min_exponent();
  const int64_t hi = j.conductor_bound() - i.min_exponent();
  std::vector<int64_t> gens;
  for (int64_t m = lo; m < hi; ++m) {
    if (member(m)) gens.push_back(m);
  }
  // One full residue system past hi makes the tail reachable from the
  // collected generators.
  for (int64_t m = hi; m < hi + h.multiplicity(); ++m) gens.push_back(m);
  return RelativeIdeal(h, std::move(gens));
}

// The product ideal: generated by all pairwise sums.
inline RelativeIdeal product(const RelativeIdeal& a, const RelativeIdeal& b) {
  detail::require_same_ambient(a, b);
  std::vector<int64_t> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (int64_t x : a.generators()) {
    for (int64_t y : b.generators()) {
      gens.push_back(checked_add(x, y));
    }
  }
  return RelativeIdeal(a.ambient(), std::move(gens));
}

// The trace ideal of the semigroup ring: canonical ideal times its inverse
// (the quotient of the ring by the canonical ideal). The ring is Gorenstein
// exactly when this is the unit ideal.
inline RelativeIdeal trace_ideal(const NumericalSemigroup& h) {
  const auto omega = canonical_ideal(h);
  const auto inverse = colon(RelativeIdeal::unit(h), omega);
  return product(omega, inverse);
}

}  // namespace nsring
