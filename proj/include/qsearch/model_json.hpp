#pragma once

#include <string>

#include <json.hpp>

#include "qsearch/spectral_model.hpp"

namespace qsearch {

// Schema:
// {"phi": number,
//  "levels": [{"theta": number, "tau_mag": number, "tau_phase": number,
//              "multiplicity": integer, "label": string}],
//  "meta": string}
// tau_phase, multiplicity and label default to 0, 1 and "" on input.
nlohmann::json model_to_json(const SpectralModel& model);
SpectralModel model_from_json(const nlohmann::json& j);

SpectralModel load_model(const std::string& path);
void save_model(const std::string& path, const SpectralModel& model);

} // namespace qsearch
