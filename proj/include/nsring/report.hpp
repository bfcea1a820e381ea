#pragma once

// JSON views of the library's result types.
//
// Every serializer emits objects with a fixed key order (nlohmann's
// ordered_json) and lists that are sorted by construction, so a given input
// and flag set always produces the same bytes. Keys whose value depends on
// wall clock or is undefined for the input (timing, an empty teter_reason,
// predictions a family does not make) are omitted rather than emitted as
// placeholders. Documents round-trip: from_json(to_json(x)) == x.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "nsring/classification.hpp"
#include "nsring/families.hpp"
#include "nsring/semigroup.hpp"
#include "nsring/sweep.hpp"

namespace nsring {

using ordered_json = nlohmann::ordered_json;

// Bumped whenever a serialized key changes meaning, is added or removed.
inline constexpr int64_t schema_version = 1;

inline ordered_json to_json(const SemigroupInvariants& inv) {
  return ordered_json{{"multiplicity", inv.multiplicity},
                      {"embdim", inv.embdim},
                      {"codim", inv.codim},
                      {"type", inv.type},
                      {"frobenius", inv.frobenius},
                      {"genus", inv.genus},
                      {"conductor", inv.conductor},
                      {"a_invariant", inv.a_invariant},
                      {"min_multiplicity", inv.min_multiplicity}};
}

inline void from_json(const ordered_json& j, SemigroupInvariants& inv) {
  j.at("multiplicity").get_to(inv.multiplicity);
  j.at("embdim").get_to(inv.embdim);
  j.at("codim").get_to(inv.codim);
  j.at("type").get_to(inv.type);
  j.at("frobenius").get_to(inv.frobenius);
  j.at("genus").get_to(inv.genus);
  j.at("conductor").get_to(inv.conductor);
  j.at("a_invariant").get_to(inv.a_invariant);
  j.at("min_multiplicity").get_to(inv.min_multiplicity);
}

inline ordered_json to_json(const TeterCertificate& cert) {
  ordered_json matches = ordered_json::array();
  for (const auto& [j, i] : cert.matches) {
    matches.push_back(ordered_json::array({j, i}));
  }
  return ordered_json{{"gamma", cert.gamma},
                      {"delta", cert.delta},
                      {"omitted_index", cert.omitted_index},
                      {"matches", std::move(matches)}};
}

inline void from_json(const ordered_json& j, TeterCertificate& cert) {
  j.at("gamma").get_to(cert.gamma);
  j.at("delta").get_to(cert.delta);
  j.at("omitted_index").get_to(cert.omitted_index);
  cert.matches.clear();
  for (const auto& m : j.at("matches")) {
    cert.matches.emplace_back(m.at(0).get<int>(), m.at(1).get<int>());
  }
}

inline ordered_json to_json(const ClassificationReport& report) {
  ordered_json j{{"min_gens", report.min_gens},
                 {"invariants", to_json(report.invariants)},
                 {"pf", report.pf},
                 {"symmetric", report.symmetric},
                 {"pseudo_symmetric", report.pseudo_symmetric},
                 {"almost_symmetric", report.almost_symmetric},
                 {"nearly_gorenstein", report.nearly_gorenstein},
                 {"teter", report.teter}};
  if (!report.teter_reason.empty()) {
    j["teter_reason"] = report.teter_reason;
  }
  j["certificate"] = report.certificate.has_value()
                         ? to_json(*report.certificate)
                         : ordered_json(nullptr);
  j["trace_min_gens"] = report.trace_min_gens;
  j["trace_is_unit"] = report.trace_is_unit;
  return j;
}

inline void from_json(const ordered_json& j, ClassificationReport& report) {
  j.at("min_gens").get_to(report.min_gens);
  from_json(j.at("invariants"), report.invariants);
  j.at("pf").get_to(report.pf);
  j.at("symmetric").get_to(report.symmetric);
  j.at("pseudo_symmetric").get_to(report.pseudo_symmetric);
  j.at("almost_symmetric").get_to(report.almost_symmetric);
  j.at("nearly_gorenstein").get_to(report.nearly_gorenstein);
  j.at("teter").get_to(report.teter);
  report.teter_reason =
      j.contains("teter_reason") ? j.at("teter_reason").get<std::string>()
                                 : std::string{};
  if (j.at("certificate").is_null()) {
    report.certificate.reset();
  } else {
    TeterCertificate cert;
    from_json(j.at("certificate"), cert);
    report.certificate = std::move(cert);
  }
  j.at("trace_min_gens").get_to(report.trace_min_gens);
  j.at("trace_is_unit").get_to(report.trace_is_unit);
}

// One `analyze` result: the generators as given, the classification, and an
// optional wall-clock reading (omitted by default to keep output
// byte-deterministic).
struct ReportDocument {
  std::vector<int64_t> input;
  ClassificationReport report;
  std::optional<int64_t> timing_ms;

  friend bool operator==(const ReportDocument&,
                         const ReportDocument&) = default;
};

inline ordered_json to_json(const ReportDocument& doc) {
  ordered_json j{{"schema", schema_version}, {"input", doc.input}};
  const ordered_json body = to_json(doc.report);
  for (const auto& [key, value] : body.items()) {
    j[key] = value;
  }
  if (doc.timing_ms.has_value()) j["timing_ms"] = *doc.timing_ms;
  return j;
}

inline void from_json(const ordered_json& j, ReportDocument& doc) {
  j.at("input").get_to(doc.input);
  from_json(j, doc.report);
  if (j.contains("timing_ms")) {
    doc.timing_ms = j.at("timing_ms").get<int64_t>();
  } else {
    doc.timing_ms.reset();
  }
}

inline ordered_json to_json(const SweepViolation& v) {
  return ordered_json{{"check", v.check},
                      {"min_gens", v.min_gens},
                      {"genus", v.genus},
                      {"detail", v.detail}};
}

inline ordered_json to_json(const SweepReport& report) {
  ordered_json by_genus = ordered_json::array();
  for (size_t g = 0; g < report.by_genus.size(); ++g) {
    const GenusTally& t = report.by_genus[g];
    by_genus.push_back(
        ordered_json{{"genus", static_cast<int64_t>(g)},
                     {"total", t.total},
                     {"symmetric", t.symmetric},
                     {"pseudo_symmetric", t.pseudo_symmetric},
                     {"almost_symmetric", t.almost_symmetric},
                     {"nearly_gorenstein", t.nearly_gorenstein},
                     {"min_multiplicity", t.min_multiplicity},
                     {"teter", t.teter}});
  }
  ordered_json violations = ordered_json::array();
  for (const auto& v : report.violations) violations.push_back(to_json(v));
  return ordered_json{
      {"schema", schema_version},
      {"g_max", report.g_max},
      {"suite", suite_name(report.suite)},
      {"paranoid", report.paranoid},
      {"total", report.total()},
      {"teter_total", report.teter_total()},
      {"by_genus", std::move(by_genus)},
      {"violation_count", static_cast<int64_t>(report.violations.size())},
      {"violations", std::move(violations)}};
}

inline ordered_json to_json(const FamilySpec& spec) {
  if (const auto* p = std::get_if<GeneralizedArithmeticParams>(&spec)) {
    return ordered_json{{"family", "generalized-arithmetic"},
                        {"params",
                         ordered_json{{"a", p->a},
                                      {"s", p->s},
                                      {"d", p->d},
                                      {"n", p->n}}}};
  }
  const auto& p = std::get<PseudoSymmetric3GenParams>(spec);
  return ordered_json{
      {"family", "pseudo-symmetric-3gen"},
      {"params", ordered_json{{"a", p.a}, {"b", p.b}, {"c", p.c}}}};
}

inline ordered_json to_json(const FamilySpec& spec,
                            const FamilyComparison& cmp) {
  ordered_json j{{"schema", schema_version}};
  const ordered_json head = to_json(spec);
  for (const auto& [key, value] : head.items()) {
    j[key] = value;
  }
  ordered_json predicted = ordered_json::object();
  if (cmp.predicted.type) predicted["type"] = *cmp.predicted.type;
  if (cmp.predicted.pf) predicted["pf"] = *cmp.predicted.pf;
  if (cmp.predicted.frobenius) {
    predicted["frobenius"] = *cmp.predicted.frobenius;
  }
  if (cmp.predicted.pseudo_symmetric) {
    predicted["pseudo_symmetric"] = *cmp.predicted.pseudo_symmetric;
  }
  if (cmp.predicted.teter) predicted["teter"] = *cmp.predicted.teter;
  j["predicted"] = std::move(predicted);
  j["agree"] = cmp.agree;
  j["actual"] = to_json(cmp.actual);
  return j;
}

}  // namespace nsring
