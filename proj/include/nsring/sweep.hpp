#pragma once

// Batch verification over the genus tree.
//
// Every numerical semigroup of genus <= g_max is classified, tallied per
// genus, and run through a battery of cross-checks: the two Teter deciders
// must agree certificate for certificate, and the classification predicates
// must satisfy the implications that tie the Teter property to almost
// symmetry, near-Gorensteinness, minimal multiplicity and pseudo-symmetry.
// A violation is any failed implication; the regression runs expect none.
//
// The walk is split into disjoint subtrees fed to a small worker pool; each
// worker fills a private report and the pieces are merged commutatively,
// with the final violation list sorted, so the result is identical no
// matter the worker count.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "nsring/classification.hpp"
#include "nsring/enumeration.hpp"
#include "nsring/errors.hpp"
#include "nsring/relative_ideal.hpp"
#include "nsring/semigroup.hpp"

namespace nsring {

// Which part of the check battery to run. "all" is the regression default;
// the narrower suites exist to time-box targeted reruns.
enum class Suite { all, teter, min_multiplicity, embdim3 };

inline const char* suite_name(Suite suite) {
  switch (suite) {
    case Suite::all:
      return "all";
    case Suite::teter:
      return "teter";
    case Suite::min_multiplicity:
      return "min-multiplicity";
    case Suite::embdim3:
      return "embdim3";
  }
  return "all";
}

inline Suite parse_suite(const std::string& name) {
  if (name == "all") return Suite::all;
  if (name == "teter") return Suite::teter;
  if (name == "min-multiplicity") return Suite::min_multiplicity;
  if (name == "embdim3") return Suite::embdim3;
  throw ParameterViolation(
      "unknown suite \"" + name +
      "\" (expected all, teter, min-multiplicity or embdim3)");
}

struct SweepOptions {
  int64_t g_max = 0;
  Suite suite = Suite::all;
  bool paranoid = false;
  // Worker count; 0 defers to NSRING_THREADS, then hardware concurrency.
  int threads = 0;
};

struct SweepViolation {
  std::string check;
  std::vector<int64_t> min_gens;
  int64_t genus = 0;
  std::string detail;

  friend bool operator==(const SweepViolation&,
                         const SweepViolation&) = default;
  friend bool operator<(const SweepViolation& a, const SweepViolation& b) {
    return std::tie(a.genus, a.min_gens, a.check, a.detail) <
           std::tie(b.genus, b.min_gens, b.check, b.detail);
  }
};

struct GenusTally {
  int64_t total = 0;
  int64_t symmetric = 0;
  int64_t pseudo_symmetric = 0;
  int64_t almost_symmetric = 0;
  int64_t nearly_gorenstein = 0;
  int64_t min_multiplicity = 0;
  int64_t teter = 0;

  GenusTally& operator+=(const GenusTally& o) {
    total += o.total;
    symmetric += o.symmetric;
    pseudo_symmetric += o.pseudo_symmetric;
    almost_symmetric += o.almost_symmetric;
    nearly_gorenstein += o.nearly_gorenstein;
    min_multiplicity += o.min_multiplicity;
    teter += o.teter;
    return *this;
  }
  friend bool operator==(const GenusTally&, const GenusTally&) = default;
};

struct SweepReport {
  int64_t g_max = 0;
  Suite suite = Suite::all;
  bool paranoid = false;
  std::vector<GenusTally> by_genus;  // indexed by genus, 0..g_max
  std::vector<SweepViolation> violations;

  int64_t total() const {
    int64_t out = 0;
    for (const auto& t : by_genus) out += t.total;
    return out;
  }
  int64_t teter_total() const {
    int64_t out = 0;
    for (const auto& t : by_genus) out += t.teter;
    return out;
  }

  // Commutative merge of disjoint partial reports; callers sort violations
  // once all pieces are in.
  void merge(const SweepReport& o) {
    for (size_t g = 0; g < by_genus.size() && g < o.by_genus.size(); ++g) {
      by_genus[g] += o.by_genus[g];
    }
    violations.insert(violations.end(), o.violations.begin(),
                      o.violations.end());
  }
};

namespace detail {

inline int resolved_worker_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("NSRING_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0 || v > 1024) {
      throw ParameterViolation(
          "NSRING_THREADS must be a positive integer, got \"" +
          std::string(env) + "\"");
    }
    return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// x lies in the relative ideal generated by gens over h.
inline bool ideal_contains(const NumericalSemigroup& h,
                           const std::vector<int64_t>& gens, int64_t x) {
  for (int64_t g : gens) {
    if (x >= g && h.contains(x - g)) return true;
  }
  return false;
}

inline void run_checks(const NumericalSemigroup& h,
                       const ClassificationReport& c, const SweepOptions& o,
                       SweepReport& r) {
  auto flag = [&](const char* check, std::string detail) {
    r.violations.push_back(SweepViolation{check, c.min_gens,
                                          c.invariants.genus,
                                          std::move(detail)});
  };
  const bool teter_suite = o.suite == Suite::all || o.suite == Suite::teter;
  const bool minmult_suite =
      o.suite == Suite::all || o.suite == Suite::min_multiplicity;
  const bool embdim3_suite =
      o.suite == Suite::all || o.suite == Suite::embdim3;

  if (teter_suite && !c.symmetric) {
    // The scan decider and the closed-form decider must agree, witness for
    // witness.
    const auto oracle = teter_oracle(h, o.paranoid);
    if (oracle.has_value() != c.certificate.has_value()) {
      flag("deciders-agree",
           oracle ? "scan finds a shift, closed form finds none"
                  : "closed form finds a shift, scan finds none");
    } else if (oracle && !(*oracle == *c.certificate)) {
      flag("deciders-agree", "witnesses differ: scan shift " +
                                 std::to_string(oracle->gamma) +
                                 ", closed-form shift " +
                                 std::to_string(c.certificate->gamma));
    }
    if (o.paranoid) {
      if (const auto gamma = t1_floor_violation(h)) {
        flag("shift-floor",
             "shifted canonical ideal already proper at shift " +
                 std::to_string(*gamma) + ", below the floor " +
                 std::to_string(h.frobenius() + h.multiplicity()));
      }
    }
    if (c.teter) {
      const auto& cert = *c.certificate;
      if (c.invariants.type != c.invariants.embdim - 1) {
        flag("teter-type-codim",
             "type " + std::to_string(c.invariants.type) + " with embdim " +
                 std::to_string(c.invariants.embdim));
      }
      const int64_t step = c.min_gens[1] - c.min_gens[0];
      if (cert.delta != 0 && cert.delta != step) {
        flag("shift-offset-range", "offset " + std::to_string(cert.delta) +
                                       " with generator step " +
                                       std::to_string(step));
      }
      if ((cert.delta > 0) != (cert.omitted_index == 1)) {
        flag("shift-offset-omitted",
             "offset " + std::to_string(cert.delta) + " but omitted index " +
                 std::to_string(cert.omitted_index));
      }
      const auto shifted = scaled_canonical(h, cert.gamma);
      if ((cert.delta > 0) != !shifted.contains_exponent(h.multiplicity())) {
        flag("shift-offset-multiplicity",
             "offset " + std::to_string(cert.delta) +
                 " disagrees with multiplicity membership in the shifted "
                 "ideal");
      }
      // Witness structure: exactly one omitted generator, and each of the
      // others matches exactly one pseudo-Frobenius number.
      if (cert.omitted_index == 0 ||
          static_cast<int64_t>(cert.matches.size()) !=
              c.invariants.embdim - 1) {
        flag("witness-structure",
             "omitted index " + std::to_string(cert.omitted_index) + " with " +
                 std::to_string(cert.matches.size()) + " matches for embdim " +
                 std::to_string(c.invariants.embdim));
      }
      for (const auto& [j, i] : cert.matches) {
        if (i == 0) {
          flag("matching-unique",
               "generator index " + std::to_string(j) +
                   " lies in the shifted ideal but matches no "
                   "pseudo-Frobenius number");
          continue;
        }
        if (c.min_gens[static_cast<size_t>(j - 1)] !=
            cert.gamma - c.pf[static_cast<size_t>(i - 1)]) {
          flag("matching-unique", "recorded match (" + std::to_string(j) +
                                      ", " + std::to_string(i) +
                                      ") fails its equation");
        }
      }
      for (size_t j = 0; j < c.min_gens.size(); ++j) {
        const bool in_set = shifted.contains_exponent(c.min_gens[j]);
        int hits = 0;
        for (int64_t f : c.pf) {
          if (c.min_gens[j] == cert.gamma - f) ++hits;
        }
        if (in_set != (hits == 1) || hits > 1) {
          flag("matching-unique",
               "generator " + std::to_string(c.min_gens[j]) + " has " +
                   std::to_string(hits) +
                   (in_set ? " matches while in the shifted ideal"
                           : " matches while outside the shifted ideal"));
        }
      }
    }
  }

  if (minmult_suite && c.invariants.min_multiplicity) {
    // Multiplicity in the trace, almost symmetry and near-Gorensteinness
    // stand or fall together at minimal multiplicity.
    const bool mult_in_trace =
        ideal_contains(h, c.trace_min_gens, h.multiplicity());
    if (mult_in_trace != c.almost_symmetric ||
        c.almost_symmetric != c.nearly_gorenstein) {
      flag("minmult-chain",
           std::string("multiplicity in trace: ") +
               (mult_in_trace ? "yes" : "no") + ", almost symmetric: " +
               (c.almost_symmetric ? "yes" : "no") + ", nearly Gorenstein: " +
               (c.nearly_gorenstein ? "yes" : "no"));
    }
    if (!c.symmetric) {
      const bool teter_offset0 = c.teter && c.certificate->delta == 0;
      if (c.almost_symmetric != teter_offset0) {
        flag("minmult-almost-shift",
             std::string("almost symmetric: ") +
                 (c.almost_symmetric ? "yes" : "no") +
                 ", teter with offset 0: " + (teter_offset0 ? "yes" : "no"));
      }
      if (c.almost_symmetric && c.teter) {
        // At minimal multiplicity the shifted canonical ideal of an almost
        // symmetric ring is generated by all minimal generators but the
        // last.
        const auto shifted = scaled_canonical(h, c.certificate->gamma);
        const std::vector<int64_t> head(c.min_gens.begin(),
                                        c.min_gens.end() - 1);
        if (shifted.generators() != head) {
          flag("minmult-shifted-generators",
               "shifted ideal generators do not equal the first embdim - 1 "
               "generators");
        }
      }
    }
  }

  if ((minmult_suite || embdim3_suite) && c.invariants.min_multiplicity &&
      c.invariants.embdim == 3 && !c.symmetric) {
    if (!c.teter) {
      flag("minmult-embdim3", "minimal multiplicity with three generators "
                              "and not symmetric, yet not Teter");
    }
  }

  if (embdim3_suite && c.invariants.embdim == 3) {
    if (c.nearly_gorenstein && !c.almost_symmetric && !c.teter) {
      flag("embdim3-ng-not-as",
           "nearly Gorenstein, not almost symmetric, yet not Teter");
    }
    if (c.pseudo_symmetric) {
      const int64_t half = c.invariants.frobenius / 2;
      bool pair_difference = false;
      for (size_t i = 0; i < c.min_gens.size(); ++i) {
        for (size_t j = i + 1; j < c.min_gens.size(); ++j) {
          if (c.min_gens[j] - c.min_gens[i] == half) pair_difference = true;
        }
      }
      if (c.teter != pair_difference) {
        flag("pseudo-symmetric-pair",
             std::string("teter: ") + (c.teter ? "yes" : "no") +
                 ", generator pair with difference half the Frobenius "
                 "number: " +
                 (pair_difference ? "yes" : "no"));
      }
    }
  }
}

inline void sweep_visit(const NumericalSemigroup& h, const SweepOptions& o,
                        SweepReport& r) {
  const ClassificationReport c = classify(h);
  GenusTally& t = r.by_genus[static_cast<size_t>(c.invariants.genus)];
  ++t.total;
  if (c.symmetric) ++t.symmetric;
  if (c.pseudo_symmetric) ++t.pseudo_symmetric;
  if (c.almost_symmetric) ++t.almost_symmetric;
  if (c.nearly_gorenstein) ++t.nearly_gorenstein;
  if (c.invariants.min_multiplicity) ++t.min_multiplicity;
  if (c.teter) ++t.teter;
  if (h.is_trivial()) return;
  run_checks(h, c, o, r);
}

}  // namespace detail

inline SweepReport sweep(const SweepOptions& options) {
  if (options.g_max < 0) throw ParameterViolation("genus bound must be >= 0");
  if (options.g_max > max_enumeration_genus) {
    throw ResourceLimit("genus bound " + std::to_string(options.g_max) +
                        " exceeds the enumeration guard " +
                        std::to_string(max_enumeration_genus));
  }

  SweepReport report;
  report.g_max = options.g_max;
  report.suite = options.suite;
  report.paranoid = options.paranoid;
  report.by_genus.assign(static_cast<size_t>(options.g_max) + 1, GenusTally{});

  const int workers = detail::resolved_worker_count(options.threads);
  if (workers == 1) {
    enumerate_by_genus(options.g_max, [&](const EnumerationNode& node) {
      detail::sweep_visit(node.semigroup, options, report);
    });
  } else {
    // Visit a shallow prefix of the tree inline while collecting enough
    // disjoint subtree roots to keep the pool busy.
    std::deque<NumericalSemigroup> frontier;
    frontier.push_back(NumericalSemigroup::from_generators({1}));
    const size_t enough = static_cast<size_t>(workers) * 8;
    while (!frontier.empty() && frontier.size() < enough) {
      const NumericalSemigroup h = std::move(frontier.front());
      frontier.pop_front();
      detail::sweep_visit(h, options, report);
      if (h.genus() < options.g_max) {
        for (int64_t g : detail::removable_generators(h)) {
          frontier.push_back(detail::remove_generator(h, g));
        }
      }
    }

    const std::vector<NumericalSemigroup> tasks(frontier.begin(),
                                                frontier.end());
    std::vector<SweepReport> partials(static_cast<size_t>(workers));
    for (auto& p : partials) {
      p.by_genus.assign(static_cast<size_t>(options.g_max) + 1, GenusTally{});
    }
    std::atomic<size_t> next{0};
    std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (size_t i = next.fetch_add(1); i < tasks.size();
               i = next.fetch_add(1)) {
            detail::walk(tasks[i], options.g_max,
                         [&](const EnumerationNode& node) {
                           detail::sweep_visit(node.semigroup, options,
                                               partials[static_cast<size_t>(w)]);
                         });
          }
        } catch (...) {
          errors[static_cast<size_t>(w)] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (const auto& p : partials) report.merge(p);
  }

  std::sort(report.violations.begin(), report.violations.end());
  return report;
}

}  // namespace nsring
