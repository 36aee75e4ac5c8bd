#include "qsearch/model_json.hpp"

#include <fstream>

#include "qsearch/errors.hpp"

namespace qsearch {

nlohmann::json model_to_json(const SpectralModel& model) {
    nlohmann::json j;
    j["phi"] = model.phi;
    j["meta"] = model.meta;
    nlohmann::json levels = nlohmann::json::array();
    for (const Level& lv : model.levels) {
        levels.push_back({{"theta", lv.theta},
                          {"tau_mag", lv.tau_mag},
                          {"tau_phase", lv.tau_phase},
                          {"multiplicity", lv.multiplicity},
                          {"label", lv.label}});
    }
    j["levels"] = std::move(levels);
    return j;
}

SpectralModel model_from_json(const nlohmann::json& j) {
    SpectralModel m;
    m.phi = j.at("phi").get<double>();
    m.meta = j.value("meta", std::string{});
    for (const auto& lj : j.at("levels")) {
        Level lv;
        lv.theta = lj.at("theta").get<double>();
        lv.tau_mag = lj.at("tau_mag").get<double>();
        lv.tau_phase = lj.value("tau_phase", 0.0);
        lv.multiplicity = lj.value("multiplicity", 1);
        lv.label = lj.value("label", std::string{});
        m.levels.push_back(std::move(lv));
    }
    return m;
}

SpectralModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open model file: " + path);
    nlohmann::json j;
    in >> j;
    return model_from_json(j);
}

void save_model(const std::string& path, const SpectralModel& model) {
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write model file: " + path);
    out << model_to_json(model).dump(2) << "\n";
}

} // namespace qsearch
