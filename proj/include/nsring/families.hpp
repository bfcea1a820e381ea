#pragma once

// Parameterized families of numerical semigroups with closed-form
// predictions for their invariants, plus a checker that compares the
// predictions against the computed classification instance by instance.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nsring/classification.hpp"
#include "nsring/errors.hpp"
#include "nsring/semigroup.hpp"

namespace nsring {

// H = <a, sa + d, sa + 2d, ..., sa + nd>, a generalized arithmetic
// sequence: n + 1 listed generators, requiring gcd(a, d) = 1, s, d >= 1 and
// 2 <= n < a. If the listed generators fail to be minimal the semigroup is
// still returned and *non_minimal is set.
inline NumericalSemigroup generalized_arithmetic(int64_t a, int64_t s,
                                                 int64_t d, int64_t n,
                                                 bool* non_minimal = nullptr) {
  if (n < 2) {
    throw ParameterViolation("need n >= 2 listed steps, got n = " +
                             std::to_string(n));
  }
  if (a <= n) {
    throw ParameterViolation(
        "need a > n so the residues stay distinct, got a = " +
        std::to_string(a) + ", n = " + std::to_string(n));
  }
  if (s < 1 || d < 1) {
    throw ParameterViolation("need s >= 1 and d >= 1");
  }
  if (std::gcd(a, d) != 1) {
    throw ParameterViolation("need gcd(a, d) = 1, got gcd " +
                             std::to_string(std::gcd(a, d)));
  }
  std::vector<int64_t> gens = {a};
  const int64_t base = checked_add(checked_mul(s, a), 0);
  for (int64_t i = 1; i <= n; ++i) {
    gens.push_back(checked_add(base, checked_mul(i, d)));
  }
  auto h = NumericalSemigroup::from_generators(gens);
  if (non_minimal != nullptr) {
    *non_minimal = h.embdim() != n + 1;
  }
  return h;
}

// H = <bc + b + 1, ac + c + 1, ab + a + 1> for a, b, c >= 1; the
// three-generator pseudo-symmetric family. The first two listed generators
// must be coprime and the three values must be distinct minimal generators.
inline NumericalSemigroup pseudo_symmetric_3gen(int64_t a, int64_t b,
                                                int64_t c) {
  if (a < 1 || b < 1 || c < 1) {
    throw ParameterViolation("need a, b, c >= 1");
  }
  const int64_t g1 = checked_add(checked_mul(b, c), checked_add(b, 1));
  const int64_t g2 = checked_add(checked_mul(a, c), checked_add(c, 1));
  const int64_t g3 = checked_add(checked_mul(a, b), checked_add(a, 1));
  if (g1 == g2 || g1 == g3 || g2 == g3) {
    throw ParameterViolation("generators collide: " + std::to_string(g1) +
                             ", " + std::to_string(g2) + ", " +
                             std::to_string(g3));
  }
  if (std::gcd(g1, g2) != 1) {
    throw ParameterViolation("need gcd(" + std::to_string(g1) + ", " +
                             std::to_string(g2) + ") = 1");
  }
  auto h = NumericalSemigroup::from_generators({g1, g2, g3});
  if (h.embdim() != 3) {
    throw ParameterViolation("listed generators are not minimal: " +
                             std::to_string(g1) + ", " + std::to_string(g2) +
                             ", " + std::to_string(g3));
  }
  return h;
}

struct GeneralizedArithmeticParams {
  int64_t a = 0;
  int64_t s = 0;
  int64_t d = 0;
  int64_t n = 0;
};

struct PseudoSymmetric3GenParams {
  int64_t a = 0;
  int64_t b = 0;
  int64_t c = 0;
};

using FamilySpec =
    std::variant<GeneralizedArithmeticParams, PseudoSymmetric3GenParams>;

// What the family formulas promise for one parameter choice. Fields are
// optional because some predictions only apply to part of the parameter
// space (the arithmetic family predicts nothing unless a % n == 1).
struct FamilyPrediction {
  std::optional<int64_t> type;
  std::optional<std::vector<int64_t>> pf;
  std::optional<int64_t> frobenius;
  std::optional<bool> pseudo_symmetric;
  std::optional<bool> teter;
};

struct FamilyComparison {
  FamilyPrediction predicted;
  ClassificationReport actual;
  bool agree = false;
};

inline FamilyPrediction predict(const GeneralizedArithmeticParams& p) {
  FamilyPrediction out;
  if (p.a % p.n != 1) return out;
  // With remainder 1, type is n and the ring is Teter; the
  // pseudo-Frobenius numbers are saq + id - a for (q-1)n < i <= qn, where
  // q = (a - 1) / n.
  const int64_t q = p.a / p.n;
  out.type = p.n;
  out.teter = true;
  std::vector<int64_t> pf;
  for (int64_t i = (q - 1) * p.n + 1; i <= q * p.n; ++i) {
    pf.push_back(checked_add(
        checked_sub(checked_mul(checked_mul(p.s, p.a), q), p.a),
        checked_mul(i, p.d)));
  }
  std::sort(pf.begin(), pf.end());
  out.pf = std::move(pf);
  return out;
}

inline FamilyPrediction predict(const PseudoSymmetric3GenParams& p) {
  FamilyPrediction out;
  const int64_t abc =
      checked_mul(checked_mul(p.a, p.b), p.c);
  out.pseudo_symmetric = true;
  out.frobenius = 2 * (abc - 1);
  out.pf = std::vector<int64_t>{abc - 1, 2 * (abc - 1)};
  out.type = 2;
  // Teter exactly when some parameter is 1, equivalently when two
  // generators differ by half the Frobenius number.
  out.teter = std::min({p.a, p.b, p.c}) == 1;
  return out;
}

inline NumericalSemigroup realize(const FamilySpec& spec) {
  if (const auto* p = std::get_if<GeneralizedArithmeticParams>(&spec)) {
    return generalized_arithmetic(p->a, p->s, p->d, p->n);
  }
  const auto& p = std::get<PseudoSymmetric3GenParams>(spec);
  return pseudo_symmetric_3gen(p.a, p.b, p.c);
}

// Builds the semigroup, classifies it, and compares against the closed-form
// predictions that apply.
inline FamilyComparison predicted_vs_actual(const FamilySpec& spec) {
  FamilyComparison out;
  const auto h = realize(spec);
  out.predicted = std::visit(
      [](const auto& p) { return predict(p); }, spec);
  out.actual = classify(h);
  out.agree = true;
  const auto& pr = out.predicted;
  if (pr.type && *pr.type != out.actual.invariants.type) out.agree = false;
  if (pr.pf && !(h.is_trivial() ? pr.pf->empty()
                                : *pr.pf == h.pseudo_frobenius())) {
    out.agree = false;
  }
  if (pr.frobenius && *pr.frobenius != out.actual.invariants.frobenius) {
    out.agree = false;
  }
  if (pr.pseudo_symmetric &&
      *pr.pseudo_symmetric != out.actual.pseudo_symmetric) {
    out.agree = false;
  }
  if (pr.teter && *pr.teter != out.actual.teter) out.agree = false;
  return out;
}

}  // namespace nsring
