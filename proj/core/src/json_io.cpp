// Copyright 2026 hardybox contributors
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

#include "hardybox/json_io.hpp"

#include <cmath>

#include <json.hpp>

namespace hardybox {

namespace {

using nlohmann::json;

constexpr double kPi = 3.14159265358979323846;

json parse_document(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("malformed JSON document");
  if (!doc.is_object()) throw ParseError("top-level JSON value must be an object");
  return doc;
}

double require_number(const json& value, const std::string& where) {
  if (!value.is_number()) {
    throw ParseError(where + " must be a number");
  }
  const double d = value.get<double>();
  if (!std::isfinite(d)) throw ParseError(where + " must be finite");
  return d;
}

const json& require_member(const json& doc, const std::string& key) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw ParseError("missing \"" + key + "\" member");
  return *it;
}

std::string dump(const json& doc, int indent) {
  return indent > 0 ? doc.dump(indent) : doc.dump();
}

json setup_body(const quantum::MeasurementSetup& setup) {
  json doc;
  doc["A"] = {setup.a0.theta, setup.a0.phi};
  doc["Ap"] = {setup.a1.theta, setup.a1.phi};
  doc["B"] = {setup.b0.theta, setup.b0.phi};
  doc["Bp"] = {setup.b1.theta, setup.b1.phi};
  return doc;
}

quantum::Observable observable_from(const json& value,
                                    const std::string& where) {
  if (!value.is_array() || value.size() != 2) {
    throw ParseError(where + " must be an array [theta, phi]");
  }
  const double theta = require_number(value[0], where + "[0]");
  const double phi = require_number(value[1], where + "[1]");
  if (theta < -1e-9 || theta > kPi + 1e-9) {
    throw ParseError(where + " polar angle must lie in [0, pi]");
  }
  return quantum::Observable(theta, phi);
}

}  // namespace

std::string box_to_json(const BipartiteBox& box, int indent) {
  json doc;
  doc["p"] = json::array();
  for (int row = 0; row < 4; ++row) {
    json r = json::array();
    for (int col = 0; col < 4; ++col) r.push_back(box.entry(row, col));
    doc["p"].push_back(std::move(r));
  }
  if (!box.label().empty()) doc["label"] = box.label();
  return dump(doc, indent);
}

BipartiteBox box_from_json(const std::string& text) {
  const json doc = parse_document(text);
  const json& p = require_member(doc, "p");
  if (!p.is_array() || p.size() != 4) {
    throw ParseError("\"p\" must be an array of 4 rows");
  }
  BipartiteBox::Grid grid{};
  for (int row = 0; row < 4; ++row) {
    const json& r = p[row];
    if (!r.is_array() || r.size() != 4) {
      throw ParseError("every row of \"p\" must hold 4 numbers");
    }
    double sum = 0.0;
    for (int col = 0; col < 4; ++col) {
      const std::string where = "p[" + std::to_string(row) + "][" +
                                std::to_string(col) + "]";
      double v = require_number(r[col], where);
      if (v < -1e-9 || v > 1.0 + 1e-9) {
        throw ParseError(where + " is not a probability");
      }
      if (v < 0.0) v = 0.0;
      grid[row][col] = v;
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-6) {
      throw ParseError("row " + std::to_string(row) +
                       " of \"p\" does not sum to one within 1e-6");
    }
  }
  std::string label;
  if (const auto it = doc.find("label"); it != doc.end()) {
    if (!it->is_string()) throw ParseError("\"label\" must be a string");
    label = it->get<std::string>();
  }
  return BipartiteBox(grid, label, 1e-6);
}

std::string coefficients_to_json(const HardyCoefficients& c, int indent) {
  json doc;
  doc["c"] = c.as_array();
  return dump(doc, indent);
}

HardyCoefficients coefficients_from_json(const std::string& text) {
  const json doc = parse_document(text);
  const json& c = require_member(doc, "c");
  if (!c.is_array() || c.size() != 6) {
    throw ParseError("\"c\" must be an array of 6 numbers");
  }
  std::array<double, 6> values{};
  for (int i = 0; i < 6; ++i) {
    values[i] = require_number(c[i], "c[" + std::to_string(i) + "]");
  }
  return HardyCoefficients::from_array(values);
}

std::string setup_to_json(const quantum::MeasurementSetup& setup, int indent) {
  return dump(setup_body(setup), indent);
}

std::string setup_to_json(const quantum::TwoQubitState& state,
                          const quantum::MeasurementSetup& setup, int indent) {
  json doc = setup_body(setup);
  doc["state"] = {state.beta, state.gamma};
  return dump(doc, indent);
}

SetupDocument setup_from_json(const std::string& text) {
  const json doc = parse_document(text);
  quantum::MeasurementSetup setup{
      observable_from(require_member(doc, "A"), "A"),
      observable_from(require_member(doc, "Ap"), "Ap"),
      observable_from(require_member(doc, "B"), "B"),
      observable_from(require_member(doc, "Bp"), "Bp"),
  };
  std::optional<quantum::TwoQubitState> state;
  if (const auto it = doc.find("state"); it != doc.end()) {
    if (!it->is_array() || it->size() != 2) {
      throw ParseError("\"state\" must be an array [beta, gamma]");
    }
    state.emplace(require_number((*it)[0], "state[0]"),
                  require_number((*it)[1], "state[1]"));
  }
  return SetupDocument{state, setup};
}

std::string weights_to_json(const ConvexWeights& weights, int indent) {
  json doc;
  doc["weights"] = json::array();
  for (const WeightedVertex& entry : weights.entries()) {
    doc["weights"].push_back(
        {{"vertex", entry.vertex.name()}, {"w", entry.weight}});
  }
  return dump(doc, indent);
}

ConvexWeights weights_from_json(const std::string& text) {
  const json doc = parse_document(text);
  const json& list = require_member(doc, "weights");
  if (!list.is_array() || list.empty()) {
    throw ParseError("\"weights\" must be a non-empty array");
  }
  std::vector<WeightedVertex> entries;
  entries.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    const json& item = list[i];
    const std::string where = "weights[" + std::to_string(i) + "]";
    if (!item.is_object()) throw ParseError(where + " must be an object");
    const json& vertex = require_member(item, "vertex");
    if (!vertex.is_string()) {
      throw ParseError(where + ".vertex must be a string");
    }
    VertexId id = [&] {
      try {
        return VertexId::parse(vertex.get<std::string>());
      } catch (const Error& e) {
        throw ParseError(where + ": " + e.what());
      }
    }();
    const double w = require_number(require_member(item, "w"), where + ".w");
    entries.push_back(WeightedVertex{id, w});
  }
  return ConvexWeights(std::move(entries));
}

}  // namespace hardybox
