#pragma once

#include <string>

#include <json.hpp>

#include "tspectra/recipes.hpp"
#include "tspectra/spectrum.hpp"
#include "tspectra/witness.hpp"

namespace tspectra {

// All machine output uses ordered_json so identical inputs serialize to
// byte-identical text.
using json = nlohmann::ordered_json;

json to_json(const Partition& p);
json to_json(const MultiplicitySpec& spec);
json to_json(const SpectrumReport& report);
json to_json(const ConstructionResult& result);
json to_json(const DerivationStep& step);
json to_json(const WitnessCertificate& cert);
json to_json(const CoverageReport& report);
json to_json(const ErrataRecord& record);

std::string to_csv(const SpectrumReport& report);

}  // namespace tspectra
