#ifndef PWT_JSONIO_HPP
#define PWT_JSONIO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "pwt/bnb.hpp"
#include "pwt/model.hpp"
#include "pwt/preprocess.hpp"
#include "pwt/ttp.hpp"

namespace pwt {

/// Native JSON instance format plus an optional free-form meta block
/// (gen-ssp stores the decision threshold there).
struct InstanceFile {
  Instance instance;
  nlohmann::json meta;  // object, possibly empty
};

nlohmann::json instance_to_json(const Instance& instance,
                                const nlohmann::json& meta = nlohmann::json::object());
InstanceFile instance_from_json(const nlohmann::json& j);

/// Loads either the native JSON format or a TTP benchmark file (detected by
/// content). TTP files need a tour; with no tour path the identity tour is
/// used.
InstanceFile load_instance(const std::string& instance_path,
                           const std::string& tour_path = "",
                           DistanceMetric metric = DistanceMetric::Ceil2D);

nlohmann::json eval_to_json(const EvalResult& result);
nlohmann::json report_to_json(const PreprocessReport& report);
nlohmann::json solve_to_json(const SolveResult& result, bool with_timing = true);

}  // namespace pwt

#endif
