#include "tspectra/io.hpp"

#include <sstream>

namespace tspectra {

json to_json(const Partition& p) { return json(p.parts()); }

json to_json(const MultiplicitySpec& spec) {
  json out = json::array();
  for (const auto& [part, count] : spec.entries) {
    out.push_back(json::array({part, count}));
  }
  return out;
}

json to_json(const SpectrumReport& report) {
  json out;
  out["n"] = report.n;
  out["values"] = report.values;
  if (report.multiplicities) {
    json mult = json::object();
    for (const auto& [value, count] : *report.multiplicities) {
      mult[std::to_string(value)] = count;
    }
    out["multiplicities"] = std::move(mult);
  } else {
    out["multiplicities"] = nullptr;
  }
  if (report.witnesses) {
    json wit = json::object();
    for (const auto& [value, partition] : *report.witnesses) {
      wit[std::to_string(value)] = partition.parts();
    }
    out["witnesses"] = std::move(wit);
  } else {
    out["witnesses"] = nullptr;
  }
  return out;
}

json to_json(const ConstructionResult& result) {
  json out;
  out["recipe"] = std::string(to_string(result.recipe));
  out["raw"] = result.raw.parts;
  out["partition"] =
      result.partition ? json(result.partition->parts()) : json(nullptr);
  out["target"] = result.target;
  out["achieved"] = result.achieved ? json(*result.achieved) : json(nullptr);
  return out;
}

json to_json(const DerivationStep& step) {
  json out;
  switch (step.kind) {
    case DerivationStep::Kind::Recipe:
      out["step"] = "recipe";
      out["id"] = std::string(to_string(step.recipe));
      out["a"] = step.a;
      out["c"] = step.c;
      break;
    case DerivationStep::Kind::Lift:
      out["step"] = "lift";
      out["lambda1"] = step.lambda1;
      break;
    case DerivationStep::Kind::Conjugate:
      out["step"] = "conjugate";
      break;
    case DerivationStep::Kind::Search:
      out["step"] = "search";
      out["budget"] = step.budget;
      break;
  }
  return out;
}

json to_json(const WitnessCertificate& cert) {
  json out;
  out["n"] = cert.n;
  out["target"] = cert.target;
  out["partition"] = cert.partition.parts();
  json steps = json::array();
  for (const DerivationStep& step : cert.derivation) steps.push_back(to_json(step));
  out["derivation"] = std::move(steps);
  out["achieved"] = cert.achieved;
  out["verified"] = cert.verified;
  return out;
}

json to_json(const CoverageReport& report) {
  json out;
  out["n"] = report.n;
  out["lo"] = report.lo;
  out["hi"] = report.hi;
  out["covered"] = report.covered;
  out["missing"] = report.missing;
  json derivations = json::array();
  for (const auto& [target, summary] : report.derivations) {
    json entry;
    entry["target"] = target;
    entry["derivation"] = summary;
    derivations.push_back(std::move(entry));
  }
  out["derivations"] = std::move(derivations);
  return out;
}

json to_json(const ErrataRecord& record) {
  json out;
  out["recipe"] = std::string(to_string(record.recipe));
  out["n"] = record.n;
  out["a"] = record.a;
  out["c"] = record.c;
  out["target"] = record.target;
  out["raw"] = record.raw;
  out["failure"] = record.failure;
  out["sorted_achieves_target"] = record.sorted_achieves_target;
  return out;
}

std::string to_csv(const SpectrumReport& report) {
  std::ostringstream out;
  bool mult = report.multiplicities.has_value();
  bool wit = report.witnesses.has_value();
  out << "value";
  if (mult) out << ",multiplicity";
  if (wit) out << ",witness";
  out << "\n";
  for (i64 value : report.values) {
    out << value;
    if (mult) {
      auto it = report.multiplicities->find(value);
      out << "," << (it == report.multiplicities->end() ? 0 : it->second);
    }
    if (wit) {
      out << ",";
      auto it = report.witnesses->find(value);
      if (it != report.witnesses->end()) {
        const auto& parts = it->second.parts();
        for (size_t i = 0; i < parts.size(); ++i) {
          if (i) out << " ";
          out << parts[i];
        }
      }
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace tspectra
