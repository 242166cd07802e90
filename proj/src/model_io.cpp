// SPDX-License-Identifier: Apache-2.0
//
// blockcast - mmWave/sub-THz LoS-blockage early-warning workbench
// Copyright (C) 2026 blockcast authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "blockcast/model_io.hpp"

#include <fstream>

#include "json.hpp"

namespace blockcast {

namespace {

using Json = nlohmann::ordered_json;

Json vec_json(const Vec& v) {
  Json j = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(v(i));
  return j;
}

Vec vec_from(const Json& j) {
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = j[i].get<Scalar>();
  return v;
}

}  // namespace

std::string model_to_json(const TrainedModel& model) {
  const auto& t = model.transform;
  Json j;
  j["format"] = "blockcast-model";
  j["version"] = 1;
  Json tj;
  tj["mode"] = t.mode == FeatureMode::kMiniRocket ? "minirocket" : "rocket12";
  tj["input_length"] = t.input_length;
  tj["dilations"] = t.dilations;
  tj["features_per_dilation"] = t.features_per_dilation;
  tj["biases"] = t.biases;
  tj["kernel_weights"] = t.kernel_weights;
  tj["kernel_dilations"] = t.kernel_dilations;
  tj["kernel_padding"] = t.kernel_padding;
  tj["kernel_biases"] = t.kernel_biases;
  j["transform"] = tj;
  Json rj;
  rj["alpha"] = model.ridge.alpha;
  rj["intercept"] = model.ridge.intercept;
  rj["feature_mean"] = vec_json(model.ridge.feature_mean);
  rj["feature_scale"] = vec_json(model.ridge.feature_scale);
  rj["weights"] = vec_json(model.ridge.weights);
  j["ridge"] = rj;
  return j.dump();
}

TrainedModel model_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw IoError(std::string("model JSON parse failure: ") + e.what());
  }
  try {
    if (j.value("format", "") != "blockcast-model") throw IoError("model JSON: wrong format tag");
    TrainedModel m;
    const auto& tj = j.at("transform");
    m.transform.mode = tj.at("mode").get<std::string>() == "rocket12" ? FeatureMode::kRocket12
                                                                      : FeatureMode::kMiniRocket;
    m.transform.input_length = tj.at("input_length").get<int>();
    m.transform.dilations = tj.at("dilations").get<std::vector<int>>();
    m.transform.features_per_dilation = tj.at("features_per_dilation").get<std::vector<int>>();
    m.transform.biases = tj.at("biases").get<std::vector<Scalar>>();
    m.transform.kernel_weights = tj.at("kernel_weights").get<std::vector<Scalar>>();
    m.transform.kernel_dilations = tj.at("kernel_dilations").get<std::vector<int>>();
    m.transform.kernel_padding = tj.at("kernel_padding").get<std::vector<std::uint8_t>>();
    m.transform.kernel_biases = tj.at("kernel_biases").get<std::vector<Scalar>>();
    const auto& rj = j.at("ridge");
    m.ridge.alpha = rj.at("alpha").get<Scalar>();
    m.ridge.intercept = rj.at("intercept").get<Scalar>();
    m.ridge.feature_mean = vec_from(rj.at("feature_mean"));
    m.ridge.feature_scale = vec_from(rj.at("feature_scale"));
    m.ridge.weights = vec_from(rj.at("weights"));
    return m;
  } catch (const IoError&) {
    throw;
  } catch (const std::exception& e) {
    throw IoError(std::string("model JSON missing/invalid field: ") + e.what());
  }
}

void save_model(const std::string& path, const TrainedModel& model) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << model_to_json(model) << "\n";
  if (!out) throw IoError("write failure: " + path);
}

TrainedModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return model_from_json(text);
}

}  // namespace blockcast
