#pragma once

// Ring-theoretic classification of a numerical semigroup ring, done entirely
// on exponent sets.
//
// Symmetry, pseudo-symmetry and almost symmetry are read off the
// pseudo-Frobenius numbers. Nearly Gorenstein means the trace ideal contains
// the maximal ideal. The Teter property asks for a shift gamma such that the
// shifted canonical ideal t^gamma omega sits inside the ring as a proper
// ideal (the set T1 of shifts) while containing all but at most one of the
// generators t^{a_i} (the set T2). Two independent deciders are provided:
//
//   teter_oracle      scans candidate shifts and tests T1 and T2 literally,
//   teter_criterion   evaluates a closed-form matching between generators
//                     and pseudo-Frobenius numbers, no ideal arithmetic.
//
// They must agree everywhere; the enumeration sweep checks exactly that.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nsring/errors.hpp"
#include "nsring/relative_ideal.hpp"
#include "nsring/semigroup.hpp"

namespace nsring {

// Symmetric: exactly one pseudo-Frobenius number (Gorenstein ring). The
// full semigroup N counts as symmetric, its ring being regular.
inline bool is_symmetric(const NumericalSemigroup& h) {
  return h.is_trivial() || h.type() == 1;
}

// Pseudo-symmetric: the pseudo-Frobenius numbers are exactly F/2 and F.
inline bool is_pseudo_symmetric(const NumericalSemigroup& h) {
  if (h.is_trivial()) return false;
  const int64_t f = h.frobenius();
  if (f % 2 != 0) return false;
  const auto& pf = h.pseudo_frobenius();
  return pf.size() == 2 && pf[0] == f / 2 && pf[1] == f;
}

// Almost symmetric: the pseudo-Frobenius numbers below F pair up to F
// (alpha_i + alpha_{type - i} == F for 1 <= i <= type - 1). Type 1 is
// vacuously almost symmetric, as is the full semigroup.
inline bool is_almost_symmetric(const NumericalSemigroup& h) {
  if (h.is_trivial()) return true;
  const auto& pf = h.pseudo_frobenius();
  const size_t r = pf.size();
  for (size_t i = 0; i + 1 < r; ++i) {
    if (checked_add(pf[i], pf[r - 2 - i]) != h.frobenius()) return false;
  }
  return true;
}

// Nearly Gorenstein: the trace ideal contains the maximal ideal, that is,
// every minimal generator exponent.
inline bool is_nearly_gorenstein(const NumericalSemigroup& h) {
  if (h.is_trivial()) return true;
  const auto tr = trace_ideal(h);
  for (int64_t a : h.min_gens()) {
    if (!tr.contains_exponent(a)) return false;
  }
  return true;
}

namespace detail {

inline void require_not_symmetric(const NumericalSemigroup& h) {
  if (is_symmetric(h)) {
    throw SymmetricInput(
        "shift sets are studied only for non-symmetric semigroups");
  }
}

}  // namespace detail

// gamma lies in T1: the shifted canonical ideal is a proper ideal of the
// ring.
inline bool t1_contains(const NumericalSemigroup& h, int64_t gamma) {
  detail::require_not_symmetric(h);
  return scaled_canonical(h, gamma).is_proper_in_ring();
}

// gamma lies in T2: at least embdim - 1 generator exponents land in the
// shifted canonical ideal.
inline bool t2_contains(const NumericalSemigroup& h, int64_t gamma) {
  detail::require_not_symmetric(h);
  const auto shifted = scaled_canonical(h, gamma);
  int64_t in_set = 0;
  for (int64_t a : h.min_gens()) {
    if (shifted.contains_exponent(a)) ++in_set;
  }
  return in_set >= h.embdim() - 1;
}

// Witness that the ring is Teter: the shift gamma (the least element of
// T1 and T2 jointly), its offset delta = gamma - frobenius - multiplicity,
// the index of the one generator missing from the shifted canonical ideal,
// and for every other generator index j the pseudo-Frobenius index i with
// a_j == gamma - alpha_i. Indices are 1-based; omitted_index or a match of
// 0 marks a witness the sweep must reject.
struct TeterCertificate {
  int64_t gamma = 0;
  int64_t delta = 0;
  int omitted_index = 0;
  std::vector<std::pair<int, int>> matches;

  friend bool operator==(const TeterCertificate&,
                         const TeterCertificate&) = default;
};

namespace detail {

inline TeterCertificate certificate_at(const NumericalSemigroup& h,
                                       int64_t gamma,
                                       const RelativeIdeal& shifted) {
  TeterCertificate cert;
  cert.gamma = gamma;
  cert.delta = gamma - (h.frobenius() + h.multiplicity());
  const auto& gens = h.min_gens();
  const auto& pf = h.pseudo_frobenius();
  for (size_t i = 0; i < gens.size(); ++i) {
    if (!shifted.contains_exponent(gens[i])) {
      cert.omitted_index =
          cert.omitted_index == 0 ? static_cast<int>(i + 1) : 0;
      continue;
    }
    int match = 0;
    for (size_t j = 0; j < pf.size(); ++j) {
      if (gens[i] == gamma - pf[j]) {
        match = static_cast<int>(j + 1);
        break;
      }
    }
    cert.matches.emplace_back(static_cast<int>(i + 1), match);
  }
  return cert;
}

}  // namespace detail

// Decides the Teter property by scanning shifts and testing T1 and T2
// directly on ideals. Any shift in T1 for which some generator lies in the
// shifted canonical ideal is a sum a_i + alpha_j, so by default those sums
// (plus the interval frobenius + a_1 .. frobenius + a_n) are the candidate
// list. With paranoid = true every shift in [1, 2 * (frobenius + a_n)] is
// tried instead, which also exposes any hit below frobenius + a_1.
inline std::optional<TeterCertificate> teter_oracle(
    const NumericalSemigroup& h, bool paranoid = false) {
  detail::require_not_symmetric(h);
  const auto& gens = h.min_gens();
  const auto& pf = h.pseudo_frobenius();

  std::vector<int64_t> candidates;
  if (paranoid) {
    const int64_t hi = 2 * checked_add(h.frobenius(), gens.back());
    for (int64_t gamma = 1; gamma <= hi; ++gamma) {
      candidates.push_back(gamma);
    }
  } else {
    for (int64_t gamma = h.frobenius() + gens.front();
         gamma <= h.frobenius() + gens.back(); ++gamma) {
      candidates.push_back(gamma);
    }
    for (int64_t a : gens) {
      for (int64_t alpha : pf) candidates.push_back(checked_add(a, alpha));
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
  }

  for (int64_t gamma : candidates) {
    const auto shifted = scaled_canonical(h, gamma);
    if (!shifted.is_proper_in_ring()) continue;
    int64_t in_set = 0;
    for (int64_t a : gens) {
      if (shifted.contains_exponent(a)) ++in_set;
    }
    if (in_set < h.embdim() - 1) continue;
    return detail::certificate_at(h, gamma, shifted);
  }
  return std::nullopt;
}

// Decides the Teter property without ideal arithmetic. The ring is Teter
// exactly when the type equals embdim - 1 and for some index s every other
// generator pairs with a pseudo-Frobenius number:
//
//   a_j + alpha_{n - j}     == frobenius + a_1 + delta   for 2 <= j < s,
//   a_j + alpha_{n + 1 - j} == frobenius + a_1 + delta   for s < j <= n,
//
// with delta = a_2 - a_1 when s == 1 and delta = 0 otherwise, and no
// condition at j == s. Shifts with delta = 0 are tried first (s = 2..n,
// then s = 1) so that a successful witness always carries the least shift;
// for s >= 2 the displayed equalities put all generators but a_s into the
// shifted ideal, which pins the omitted index to s and rules out any other
// witness at the same shift.
inline std::optional<TeterCertificate> teter_criterion(
    const NumericalSemigroup& h) {
  detail::require_not_symmetric(h);
  const int64_t n = h.embdim();
  if (h.type() != n - 1) return std::nullopt;

  const auto& gens = h.min_gens();
  const auto& pf = h.pseudo_frobenius();
  const auto gen = [&](int64_t j) { return gens[static_cast<size_t>(j - 1)]; };
  const auto alpha = [&](int64_t i) { return pf[static_cast<size_t>(i - 1)]; };

  auto build = [&](int64_t s, int64_t delta) {
    TeterCertificate cert;
    cert.gamma = h.frobenius() + gen(1) + delta;
    cert.delta = delta;
    cert.omitted_index = static_cast<int>(s);
    if (s != 1) {
      // gamma - alpha_{n-1} = frobenius + a_1 - frobenius = a_1.
      cert.matches.emplace_back(1, static_cast<int>(n - 1));
    }
    for (int64_t j = 2; j <= n; ++j) {
      if (j == s) continue;
      const int64_t i = j < s ? n - j : n + 1 - j;
      cert.matches.emplace_back(static_cast<int>(j), static_cast<int>(i));
    }
    return cert;
  };

  for (int64_t s = 2; s <= n; ++s) {
    const int64_t target = h.frobenius() + gen(1);
    bool ok = true;
    for (int64_t j = 2; j <= n && ok; ++j) {
      if (j == s) continue;
      const int64_t i = j < s ? n - j : n + 1 - j;
      ok = checked_add(gen(j), alpha(i)) == target;
    }
    if (ok) return build(s, 0);
  }

  {
    const int64_t delta = gen(2) - gen(1);
    const int64_t target = h.frobenius() + gen(1) + delta;
    bool ok = true;
    for (int64_t j = 2; j <= n && ok; ++j) {
      ok = checked_add(gen(j), alpha(n + 1 - j)) == target;
    }
    if (ok) return build(1, delta);
  }
  return std::nullopt;
}

// The least Teter shift and its offset over the floor frobenius + a_1, when
// the ring is Teter at all.
inline std::optional<std::pair<int64_t, int64_t>> gamma_delta(
    const NumericalSemigroup& h) {
  const auto cert = teter_oracle(h);
  if (!cert) return std::nullopt;
  return std::make_pair(cert->gamma, cert->delta);
}

// Scans 1 <= gamma < frobenius + a_1 for members of T1, which must not
// exist; returns the first offender.
inline std::optional<int64_t> t1_floor_violation(const NumericalSemigroup& h) {
  detail::require_not_symmetric(h);
  for (int64_t gamma = 1; gamma < h.frobenius() + h.multiplicity(); ++gamma) {
    if (scaled_canonical(h, gamma).is_proper_in_ring()) return gamma;
  }
  return std::nullopt;
}

// Everything the CLI reports about one semigroup.
struct ClassificationReport {
  SemigroupInvariants invariants;
  std::vector<int64_t> min_gens;
  std::vector<int64_t> pf;
  bool symmetric = false;
  bool pseudo_symmetric = false;
  bool almost_symmetric = false;
  bool nearly_gorenstein = false;
  bool teter = false;
  // Why teter is reported false without running a decider; empty otherwise.
  std::string teter_reason;
  std::optional<TeterCertificate> certificate;
  std::vector<int64_t> trace_min_gens;
  bool trace_is_unit = false;

  friend bool operator==(const ClassificationReport&,
                         const ClassificationReport&) = default;
};

inline ClassificationReport classify(const NumericalSemigroup& h) {
  ClassificationReport report;
  report.invariants = h.invariants();
  report.min_gens = h.min_gens();

  if (h.is_trivial()) {
    report.symmetric = true;
    report.almost_symmetric = true;
    report.nearly_gorenstein = true;
    report.teter_reason = "gorenstein";
    report.trace_min_gens = {0};
    report.trace_is_unit = true;
    return report;
  }

  report.pf = h.pseudo_frobenius();
  report.symmetric = is_symmetric(h);
  report.pseudo_symmetric = is_pseudo_symmetric(h);
  report.almost_symmetric = is_almost_symmetric(h);
  const auto tr = trace_ideal(h);
  report.trace_min_gens = tr.generators();
  report.trace_is_unit = report.trace_min_gens == std::vector<int64_t>{0};
  report.nearly_gorenstein = true;
  for (int64_t a : h.min_gens()) {
    if (!tr.contains_exponent(a)) {
      report.nearly_gorenstein = false;
      break;
    }
  }

  if (report.symmetric) {
    report.teter_reason = "gorenstein";
    return report;
  }

  report.certificate = teter_criterion(h);
  report.teter = report.certificate.has_value();
  return report;
}

}  // namespace nsring
