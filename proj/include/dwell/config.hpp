#pragma once

#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "dwell/driver.hpp"

namespace dwell {

/// Parse one model entry of the run configuration. Schema:
/// {
///   "name": "model1", "K": 2,
///   "A": {"0": 1.0, "2": -2.0, "4": -2.0, "6": 1.0},
///   "omega": 4.0 | "auto",          (default "auto")
///   "M": 10,                        (default 10)
///   "N_list": [5, 10, ..., 50],     (default 5..50 step 5)
///   "parity": "even"|"odd"|"both",  (default "both")
///   "report_halved": false          (default false)
/// }
inline ModelConfig parse_model_config(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("config: model entry must be an object");
  ModelConfig cfg;
  cfg.name = j.at("name").get<std::string>();
  const int k = j.at("K").get<int>();
  std::map<int, double> coeffs;
  for (const auto& [key, val] : j.at("A").items())
    coeffs[std::stoi(key)] = val.get<double>();
  cfg.potential = EvenPolynomialPotential(k, coeffs);
  if (j.contains("omega") && !j.at("omega").is_string()) {
    cfg.omega = j.at("omega").get<double>();
  } else if (j.contains("omega") && j.at("omega").get<std::string>() != "auto") {
    throw std::invalid_argument("config: omega must be a number or \"auto\"");
  }
  if (j.contains("M")) cfg.m = j.at("M").get<std::size_t>();
  if (j.contains("N_list"))
    cfg.n_list = j.at("N_list").get<std::vector<std::size_t>>();
  if (j.contains("parity")) {
    const auto p = j.at("parity").get<std::string>();
    if (p == "even") cfg.parity = ParityChoice::even;
    else if (p == "odd") cfg.parity = ParityChoice::odd;
    else if (p == "both") cfg.parity = ParityChoice::both;
    else throw std::invalid_argument("config: parity must be even|odd|both");
  }
  if (j.contains("report_halved"))
    cfg.report_halved = j.at("report_halved").get<bool>();
  cfg.validate();
  return cfg;
}

inline std::vector<ModelConfig> load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& ex) {
    throw std::runtime_error("config: " + path + ": " + ex.what());
  }
  if (!j.is_object() || !j.contains("models") || !j.at("models").is_array())
    throw std::runtime_error("config: " + path +
                             ": expected an object with a \"models\" array");
  std::vector<ModelConfig> out;
  for (const auto& entry : j.at("models")) {
    try {
      out.push_back(parse_model_config(entry));
    } catch (const std::exception& ex) {
      throw std::runtime_error("config: " + path + ": " + ex.what());
    }
  }
  return out;
}

}  // namespace dwell
