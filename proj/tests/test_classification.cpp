#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "catch_amalgamated.hpp"
#include "nsring/classification.hpp"
#include "nsring/enumeration.hpp"
#include "nsring/semigroup.hpp"

using nsring::classify;
using nsring::gamma_delta;
using nsring::is_almost_symmetric;
using nsring::is_nearly_gorenstein;
using nsring::is_pseudo_symmetric;
using nsring::is_symmetric;
using nsring::NumericalSemigroup;
using nsring::t1_contains;
using nsring::t2_contains;
using nsring::teter_criterion;
using nsring::teter_oracle;
using nsring::TeterCertificate;

namespace {

NumericalSemigroup make(std::vector<int64_t> gens) {
  return NumericalSemigroup::from_generators(std::move(gens));
}

}  // namespace

TEST_CASE("symmetry predicates on reference semigroups", "[classification]") {
  const auto h345 = make({3, 4, 5});
  REQUIRE_FALSE(is_symmetric(h345));
  REQUIRE(is_pseudo_symmetric(h345));
  REQUIRE(is_almost_symmetric(h345));
  REQUIRE(is_nearly_gorenstein(h345));

  const auto sym = make({2, 3});
  REQUIRE(is_symmetric(sym));
  REQUIRE_FALSE(is_pseudo_symmetric(sym));
  REQUIRE(is_almost_symmetric(sym));
  REQUIRE(is_nearly_gorenstein(sym));

  const auto h11 = make({11, 12, 14, 15});
  REQUIRE_FALSE(is_symmetric(h11));
  REQUIRE_FALSE(is_pseudo_symmetric(h11));
  REQUIRE_FALSE(is_almost_symmetric(h11));
  REQUIRE(is_nearly_gorenstein(h11));

  const auto h4 = make({4, 7, 9, 10});
  REQUIRE_FALSE(is_almost_symmetric(h4));
  REQUIRE_FALSE(is_nearly_gorenstein(h4));

  const auto maxmin = make({5, 6, 7, 8, 9});
  REQUIRE(is_almost_symmetric(maxmin));

  const auto full = make({1});
  REQUIRE(is_symmetric(full));
  REQUIRE_FALSE(is_pseudo_symmetric(full));
  REQUIRE(is_almost_symmetric(full));
  REQUIRE(is_nearly_gorenstein(full));
}

TEST_CASE("shift set membership", "[classification]") {
  const auto h = make({3, 4, 5});
  REQUIRE(t1_contains(h, 5));
  REQUIRE(t2_contains(h, 5));
  // Shift 4 drops a generator exponent below the ring.
  REQUIRE_FALSE(t1_contains(h, 4));
  // Shifting by the Frobenius number always puts exponent 0 in the ideal.
  REQUIRE_FALSE(t1_contains(h, h.frobenius()));

  REQUIRE_THROWS_AS(t1_contains(make({2, 3}), 5), nsring::SymmetricInput);
  REQUIRE_THROWS_AS(t2_contains(make({2, 3}), 5), nsring::SymmetricInput);
  REQUIRE_THROWS_AS(teter_oracle(make({1})), nsring::SymmetricInput);
  REQUIRE_THROWS_AS(teter_criterion(make({2, 7})), nsring::SymmetricInput);
}

TEST_CASE("shifting by the Frobenius number never gives a proper ideal",
          "[classification][property]") {
  for (const auto& h : nsring::enumerate_by_genus(8)) {
    if (is_symmetric(h)) continue;
    CAPTURE(h.min_gens());
    REQUIRE_FALSE(t1_contains(h, h.frobenius()));
  }
}

TEST_CASE("teter oracle on reference semigroups", "[classification]") {
  SECTION("smallest pseudo-symmetric semigroup") {
    const auto cert = teter_oracle(make({3, 4, 5}));
    REQUIRE(cert.has_value());
    REQUIRE(cert->gamma == 5);
    REQUIRE(cert->delta == 0);
    REQUIRE(cert->omitted_index == 3);
    REQUIRE(cert->matches ==
            std::vector<std::pair<int, int>>{{1, 2}, {2, 1}});
  }
  SECTION("minimal multiplicity but not Teter") {
    REQUIRE_FALSE(teter_oracle(make({4, 7, 9, 10})).has_value());
  }
  SECTION("nearly Gorenstein but not Teter") {
    REQUIRE_FALSE(teter_oracle(make({11, 12, 14, 15})).has_value());
  }
  SECTION("arithmetic generators") {
    const auto cert = teter_oracle(make({4, 5, 6, 7}));
    REQUIRE(cert.has_value());
    REQUIRE(cert->gamma == 7);
    REQUIRE(cert->delta == 0);
    REQUIRE(cert->omitted_index == 4);

    const auto wide = teter_oracle(make({7, 8, 9, 10}));
    REQUIRE(wide.has_value());
    REQUIRE(wide->gamma == 20);
    REQUIRE(wide->omitted_index == 4);
  }
  SECTION("maximal embedding dimension") {
    const auto cert = teter_oracle(make({5, 6, 7, 8, 9}));
    REQUIRE(cert.has_value());
    REQUIRE(cert->gamma == 9);
    REQUIRE(cert->delta == 0);
    REQUIRE(cert->omitted_index == 5);
  }
}

TEST_CASE("teter criterion matches the oracle certificate for certificate",
          "[classification][property]") {
  for (const auto& h : nsring::enumerate_by_genus(10)) {
    if (is_symmetric(h)) continue;
    const auto by_scan = teter_oracle(h);
    const auto by_match = teter_criterion(h);
    CAPTURE(h.min_gens());
    REQUIRE(by_scan.has_value() == by_match.has_value());
    if (by_scan) {
      REQUIRE(by_scan->gamma == by_match->gamma);
      REQUIRE(by_scan->delta == by_match->delta);
      REQUIRE(by_scan->omitted_index == by_match->omitted_index);
      REQUIRE(by_scan->matches == by_match->matches);
    }
  }
}

TEST_CASE("paranoid oracle scan agrees with the fast window",
          "[classification][property]") {
  for (const auto& h : nsring::enumerate_by_genus(8)) {
    if (is_symmetric(h)) continue;
    const auto fast = teter_oracle(h);
    const auto slow = teter_oracle(h, true);
    CAPTURE(h.min_gens());
    REQUIRE(fast.has_value() == slow.has_value());
    if (fast) {
      REQUIRE(fast->gamma == slow->gamma);
      REQUIRE(fast->omitted_index == slow->omitted_index);
    }
  }
}

TEST_CASE("no proper shifted ideal below the floor",
          "[classification][property]") {
  for (const auto& h : nsring::enumerate_by_genus(8)) {
    if (is_symmetric(h)) continue;
    CAPTURE(h.min_gens());
    REQUIRE_FALSE(nsring::t1_floor_violation(h).has_value());
  }
}

TEST_CASE("certificate structure for every small Teter semigroup",
          "[classification][property]") {
  int64_t teter_count = 0;
  for (const auto& h : nsring::enumerate_by_genus(10)) {
    if (is_symmetric(h)) continue;
    const auto cert = teter_oracle(h);
    if (!cert) continue;
    ++teter_count;
    CAPTURE(h.min_gens());
    // Type is one below the embedding dimension.
    REQUIRE(h.type() == h.embdim() - 1);
    // The shift offset is 0 or the difference of the first two generators,
    // and positive offset happens exactly when the first generator is the
    // omitted one.
    const int64_t step = h.min_gens()[1] - h.min_gens()[0];
    REQUIRE((cert->delta == 0 || cert->delta == step));
    REQUIRE((cert->delta > 0) == (cert->omitted_index == 1));
    // Valid indices: an omitted generator and a full match list.
    REQUIRE(cert->omitted_index >= 1);
    REQUIRE(cert->omitted_index <= h.embdim());
    REQUIRE(static_cast<int64_t>(cert->matches.size()) == h.embdim() - 1);
    for (const auto& [gen_index, pf_index] : cert->matches) {
      REQUIRE(gen_index >= 1);
      REQUIRE(pf_index >= 1);
      REQUIRE(h.min_gens()[gen_index - 1] ==
              cert->gamma - h.pseudo_frobenius()[pf_index - 1]);
    }
    // The witness shift is genuinely in both shift sets.
    REQUIRE(t1_contains(h, cert->gamma));
    REQUIRE(t2_contains(h, cert->gamma));
  }
  REQUIRE(teter_count > 0);
}

TEST_CASE("gamma and delta accessor", "[classification]") {
  const auto gd = gamma_delta(make({3, 4, 5}));
  REQUIRE(gd.has_value());
  REQUIRE(gd->first == 5);
  REQUIRE(gd->second == 0);
  REQUIRE_FALSE(gamma_delta(make({4, 7, 9, 10})).has_value());
}

TEST_CASE("classify aggregates a full report", "[classification]") {
  SECTION("pseudo-symmetric Teter instance") {
    const auto report = classify(make({3, 4, 5}));
    REQUIRE(report.invariants.type == 2);
    REQUIRE(report.pf == std::vector<int64_t>{1, 2});
    REQUIRE_FALSE(report.symmetric);
    REQUIRE(report.pseudo_symmetric);
    REQUIRE(report.almost_symmetric);
    REQUIRE(report.nearly_gorenstein);
    REQUIRE(report.teter);
    REQUIRE(report.teter_reason.empty());
    REQUIRE(report.certificate.has_value());
    REQUIRE(report.certificate->gamma == 5);
    REQUIRE(report.trace_min_gens == std::vector<int64_t>{3, 4, 5});
    REQUIRE_FALSE(report.trace_is_unit);
  }
  SECTION("symmetric input reports a reason instead of failing") {
    const auto report = classify(make({2, 3}));
    REQUIRE(report.symmetric);
    REQUIRE_FALSE(report.teter);
    REQUIRE(report.teter_reason == "gorenstein");
    REQUIRE_FALSE(report.certificate.has_value());
    REQUIRE(report.trace_is_unit);
  }
  SECTION("full semigroup") {
    const auto report = classify(make({1}));
    REQUIRE(report.symmetric);
    REQUIRE(report.almost_symmetric);
    REQUIRE(report.nearly_gorenstein);
    REQUIRE_FALSE(report.pseudo_symmetric);
    REQUIRE_FALSE(report.teter);
    REQUIRE(report.teter_reason == "gorenstein");
    REQUIRE(report.trace_is_unit);
    REQUIRE(report.pf.empty());
  }
  SECTION("minimal multiplicity, not nearly Gorenstein") {
    const auto report = classify(make({4, 7, 9, 10}));
    REQUIRE(report.invariants.min_multiplicity);
    REQUIRE_FALSE(report.nearly_gorenstein);
    REQUIRE_FALSE(report.almost_symmetric);
    REQUIRE_FALSE(report.teter);
    REQUIRE_FALSE(report.certificate.has_value());
  }
}

TEST_CASE("pseudo-symmetric semigroups are almost symmetric",
          "[classification][property]") {
  for (const auto& h : nsring::enumerate_by_genus(10)) {
    if (h.is_trivial()) continue;
    CAPTURE(h.min_gens());
    if (is_pseudo_symmetric(h)) {
      REQUIRE(is_almost_symmetric(h));
      REQUIRE(h.type() == 2);
    }
    if (is_symmetric(h)) {
      REQUIRE(is_nearly_gorenstein(h));
      REQUIRE(is_almost_symmetric(h));
    }
  }
}
