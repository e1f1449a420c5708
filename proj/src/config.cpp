// Copyright 2026 The Blockade Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "blockade/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "blockade/errors.hpp"

namespace blockade {

namespace {

[[noreturn]] void bad_config(const std::string& what) { fail(ErrorKind::InvalidConfig, what); }

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

double number_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    bad_config(std::string("missing or non-numeric field '") + key + "'");
  }
  return j.at(key).get<double>();
}

}  // namespace

std::vector<double> Axis::values() const {
  std::vector<double> v(points);
  for (int i = 0; i < points; ++i) {
    const double t = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
    if (scale == AxisScale::Linear) {
      v[i] = start + t * (stop - start);
    } else {
      v[i] = std::exp(std::log(start) + t * (std::log(stop) - std::log(start)));
    }
  }
  if (points > 1) v.back() = stop;
  return v;
}

const std::vector<std::string>& parameter_names(ModelKind model) {
  static const std::vector<std::string> kerr{"delta1", "delta2", "delta",  "U",
                                             "eps",    "kappa1", "kappa2", "phi"};
  static const std::vector<std::string> jc{"delta1", "delta_a", "delta2",  "g",  "eps",
                                           "kappa1", "kappa2",  "kappa_a", "phi"};
  return model == ModelKind::Kerr ? kerr : jc;
}

std::string to_string(ModelKind model) { return model == ModelKind::Kerr ? "kerr" : "jc"; }

ModelKind parse_model(const std::string& name) {
  if (name == "kerr") return ModelKind::Kerr;
  if (name == "jc") return ModelKind::JC;
  bad_config("unknown model '" + name + "' (expected kerr or jc)");
}

void SweepSpec::validate() const {
  const auto& names = parameter_names(model);
  std::set<std::string> assigned;
  for (const auto& [name, value] : params) {
    if (!contains(names, name)) bad_config("unknown parameter '" + name + "'");
    if (!std::isfinite(value)) bad_config("parameter '" + name + "' is not finite");
    assigned.insert(name);
  }
  // No axes is a single-point run.
  if (axes.size() > 2) bad_config("a sweep takes at most two axes");
  for (const auto& a : axes) {
    if (!contains(names, a.name)) bad_config("unknown axis parameter '" + a.name + "'");
    if (assigned.count(a.name)) bad_config("parameter '" + a.name + "' assigned twice");
    assigned.insert(a.name);
    if (a.points < 2) bad_config("axis '" + a.name + "' needs at least 2 points");
    if (!std::isfinite(a.start) || !std::isfinite(a.stop)) {
      bad_config("axis '" + a.name + "' has non-finite endpoints");
    }
    if (a.scale == AxisScale::Log && !(a.start > 0.0 && a.stop > 0.0)) {
      bad_config("log axis '" + a.name + "' needs positive endpoints");
    }
  }
  for (const auto& l : links) {
    if (!contains(names, l.target)) bad_config("unknown link target '" + l.target + "'");
    if (!contains(names, l.source)) bad_config("unknown link source '" + l.source + "'");
    if (assigned.count(l.target)) bad_config("parameter '" + l.target + "' assigned twice");
    assigned.insert(l.target);
  }
  if (model == ModelKind::Kerr && assigned.count("delta") && assigned.count("delta2")) {
    bad_config("set at most one of 'delta' and 'delta2'");
  }
  if (cutoff < 1) bad_config("cutoff must be >= 1");
  if (outputs.empty()) bad_config("outputs must not be empty");
  for (const auto& o : outputs) {
    if (!contains(observable_names(), o)) bad_config("unknown output '" + o + "'");
  }
  if (!refine_minimum.empty()) {
    if (!contains(observable_names(), refine_minimum)) {
      bad_config("unknown refine_minimum observable '" + refine_minimum + "'");
    }
    if (axes.size() != 1) bad_config("refine_minimum needs a one-axis sweep");
  }
  if (!(residual_tol > 0.0)) bad_config("residual tolerance must be positive");
  if (threads < 0) bad_config("threads must be >= 0");
  for (std::size_t i = 0; i < grid_size(); ++i) {
    try {
      std::visit([](const auto& q) { q.validate(); }, resolve(grid_point(i)));
    } catch (const Error& e) {
      bad_config("grid point " + std::to_string(i) + ": " + e.what());
    }
  }
}

std::size_t SweepSpec::grid_size() const {
  std::size_t n = 1;
  for (const auto& a : axes) n *= static_cast<std::size_t>(a.points);
  return n;
}

std::vector<double> SweepSpec::grid_point(std::size_t index) const {
  std::vector<double> out(axes.size());
  for (std::size_t k = axes.size(); k-- > 0;) {
    const auto n = static_cast<std::size_t>(axes[k].points);
    out[k] = axes[k].values()[index % n];
    index /= n;
  }
  return out;
}

ModelParams SweepSpec::resolve(const std::vector<double>& axis_values) const {
  if (axis_values.size() != axes.size()) {
    fail(ErrorKind::InvalidArgument, "axis value count does not match the sweep axes");
  }
  std::map<std::string, double> v = params;
  for (std::size_t k = 0; k < axes.size(); ++k) v[axes[k].name] = axis_values[k];

  const auto lookup = [&](const std::string& name) -> double {
    if (auto it = v.find(name); it != v.end()) return it->second;
    if (model == ModelKind::Kerr) {
      const KerrParams d;
      if (name == "delta1") return d.delta1;
      if (name == "delta2") return d.delta2;
      if (name == "delta") return d.delta2 - d.delta1;
      if (name == "U") return d.U;
      if (name == "eps") return d.eps;
      if (name == "kappa1") return d.kappa1;
      if (name == "kappa2") return d.kappa2;
      if (name == "phi") return d.phi;
    } else {
      const JCParams d;
      if (name == "delta1") return d.delta1;
      if (name == "delta_a") return v.count("delta1") ? v.at("delta1") : d.delta_a;
      if (name == "delta2") return d.delta2;
      if (name == "g") return d.g;
      if (name == "eps") return d.eps;
      if (name == "kappa1") return d.kappa1;
      if (name == "kappa2") return d.kappa2;
      if (name == "kappa_a") return d.kappa_a;
      if (name == "phi") return d.phi;
    }
    fail(ErrorKind::InvalidConfig, "unknown parameter '" + name + "'");
  };
  for (const auto& l : links) v[l.target] = l.scale * lookup(l.source) + l.offset;

  if (model == ModelKind::Kerr) {
    KerrParams p;
    p.delta1 = lookup("delta1");
    p.delta2 = v.count("delta") ? p.delta1 + v.at("delta") : lookup("delta2");
    p.U = lookup("U");
    p.eps = lookup("eps");
    p.kappa1 = lookup("kappa1");
    p.kappa2 = lookup("kappa2");
    p.phi = lookup("phi");
    return p;
  }
  JCParams p;
  p.delta1 = lookup("delta1");
  p.delta_a = lookup("delta_a");
  p.delta2 = lookup("delta2");
  p.g = lookup("g");
  p.eps = lookup("eps");
  p.kappa1 = lookup("kappa1");
  p.kappa2 = lookup("kappa2");
  p.kappa_a = lookup("kappa_a");
  p.phi = lookup("phi");
  return p;
}

SweepSpec parse_sweep_spec(const nlohmann::json& config) {
  if (!config.is_object()) bad_config("config must be a JSON object");
  SweepSpec spec;
  try {
    spec.model = parse_model(config.at("model").get<std::string>());
    if (config.contains("params")) {
      for (const auto& [name, value] : config.at("params").items()) {
        if (!value.is_number()) bad_config("parameter '" + name + "' must be a number");
        spec.params[name] = value.get<double>();
      }
    }
    for (const auto& a : config.value("axes", nlohmann::json::array())) {
      Axis axis;
      axis.name = a.at("name").get<std::string>();
      axis.start = number_field(a, "start");
      axis.stop = number_field(a, "stop");
      axis.points = a.at("points").get<int>();
      const std::string scale = a.value("scale", "linear");
      if (scale == "linear") {
        axis.scale = AxisScale::Linear;
      } else if (scale == "log") {
        axis.scale = AxisScale::Log;
      } else {
        bad_config("axis scale must be 'linear' or 'log'");
      }
      spec.axes.push_back(axis);
    }
    if (config.contains("links")) {
      for (const auto& l : config.at("links")) {
        Link link;
        link.target = l.at("target").get<std::string>();
        link.source = l.at("source").get<std::string>();
        link.scale = l.value("scale", 1.0);
        link.offset = l.value("offset", 0.0);
        spec.links.push_back(link);
      }
    }
    spec.cutoff = config.value("cutoff", spec.cutoff);
    if (config.contains("outputs")) {
      spec.outputs = config.at("outputs").get<std::vector<std::string>>();
    }
    if (config.contains("tolerances")) {
      spec.residual_tol = config.at("tolerances").value("residual", spec.residual_tol);
    }
    spec.threads = config.value("threads", 0);
    spec.refine_minimum = config.value("refine_minimum", std::string{});
    spec.output = config.value("output", std::string{});
  } catch (const nlohmann::json::exception& e) {
    bad_config(std::string("malformed config: ") + e.what());
  }
  spec.validate();
  return spec;
}

SweepSpec load_sweep_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad_config("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    bad_config(std::string("config is not valid JSON: ") + e.what());
  }
  return parse_sweep_spec(j);
}

nlohmann::json to_json(const SweepSpec& spec) {
  nlohmann::json j;
  j["model"] = to_string(spec.model);
  j["params"] = spec.params;
  j["axes"] = nlohmann::json::array();
  for (const auto& a : spec.axes) {
    j["axes"].push_back({{"name", a.name},
                         {"start", a.start},
                         {"stop", a.stop},
                         {"points", a.points},
                         {"scale", a.scale == AxisScale::Log ? "log" : "linear"}});
  }
  j["links"] = nlohmann::json::array();
  for (const auto& l : spec.links) {
    j["links"].push_back(
        {{"target", l.target}, {"source", l.source}, {"scale", l.scale}, {"offset", l.offset}});
  }
  j["cutoff"] = spec.cutoff;
  j["outputs"] = spec.outputs;
  j["tolerances"] = {{"residual", spec.residual_tol}};
  j["threads"] = spec.threads;
  if (!spec.refine_minimum.empty()) j["refine_minimum"] = spec.refine_minimum;
  if (!spec.output.empty()) j["output"] = spec.output;
  return j;
}

}  // namespace blockade
