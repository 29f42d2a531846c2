// Copyright 2026 The Friendfoe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "friendfoe/game_io.h"

#include <charconv>
#include <sstream>

#include "friendfoe/format.h"
#include "json.hpp"

namespace friendfoe {
namespace {

using nlohmann::json;

json ParseDocument(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

const json& Field(const json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) {
    throw ParseError(std::string("missing field '") + name + "'");
  }
  return doc.at(name);
}

template <typename T>
T As(const json& value, const char* name) {
  try {
    return value.get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field '") + name + "' has the wrong type");
  }
}

std::size_t ParseIndex(std::string_view text, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("line " + std::to_string(line) +
                     ": expected an action index, got '" + std::string(text) +
                     "'");
  }
  return value;
}

}  // namespace

Game ParseGameJson(std::string_view text) {
  const json doc = ParseDocument(text);
  const auto rows =
      As<std::vector<std::vector<double>>>(Field(doc, "utility"), "utility");
  auto q_agent = As<std::vector<double>>(Field(doc, "q_agent"), "q_agent");
  auto q_env = As<std::vector<double>>(Field(doc, "q_env"), "q_env");
  auto agent_labels = doc.contains("agent_labels")
                          ? As<std::vector<std::string>>(doc["agent_labels"],
                                                         "agent_labels")
                          : IndexLabels(q_agent.size());
  auto env_labels =
      doc.contains("env_labels")
          ? As<std::vector<std::string>>(doc["env_labels"], "env_labels")
          : IndexLabels(q_env.size());
  const double alpha = As<double>(Field(doc, "alpha"), "alpha");
  const double beta = As<double>(Field(doc, "beta"), "beta");
  return Game(Matrix::FromRows(rows),
              Dist(std::move(agent_labels), std::move(q_agent)),
              Dist(std::move(env_labels), std::move(q_env)), alpha, beta);
}

std::string GameToJson(const Game& game) {
  json doc;
  json rows = json::array();
  for (std::size_t r = 0; r < game.utility().rows(); ++r) {
    auto row = game.utility().row(r);
    rows.push_back(std::vector<double>(row.begin(), row.end()));
  }
  doc["utility"] = std::move(rows);
  doc["agent_labels"] = game.prior_agent().labels();
  doc["env_labels"] = game.prior_env().labels();
  const auto qa = game.prior_agent().probs();
  const auto qe = game.prior_env().probs();
  doc["q_agent"] = std::vector<double>(qa.begin(), qa.end());
  doc["q_env"] = std::vector<double>(qe.begin(), qe.end());
  doc["alpha"] = game.alpha();
  doc["beta"] = game.beta();
  return doc.dump(2);
}

std::map<std::string, Dist> ParseStrategiesJson(std::string_view text) {
  const json doc = ParseDocument(text);
  if (!doc.is_object()) throw ParseError("strategies must be a JSON object");
  std::map<std::string, Dist> strategies;
  for (const auto& [id, probs] : doc.items()) {
    strategies.emplace(id, Dist::WithIndexLabels(
                               As<std::vector<double>>(probs, "strategy")));
  }
  return strategies;
}

std::string StrategiesToJson(const std::map<std::string, Dist>& strategies) {
  json doc = json::object();
  for (const auto& [id, dist] : strategies) {
    doc[id] = std::vector<double>(dist.probs().begin(), dist.probs().end());
  }
  return doc.dump(2);
}

InteractionLog ReadInteractionCsv(std::istream& in,
                                  std::map<std::string, Dist> strategies) {
  InteractionLog log;
  log.strategies = std::move(strategies);
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header_seen) {
      header_seen = true;
      if (line != "strategy_id,x,z") {
        throw ParseError("expected header 'strategy_id,x,z'");
      }
      continue;
    }
    const auto first = line.find(',');
    const auto second =
        first == std::string::npos ? first : line.find(',', first + 1);
    if (second == std::string::npos) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected three columns");
    }
    const std::string_view view(line);
    log.records.push_back(
        {line.substr(0, first),
         ParseIndex(view.substr(first + 1, second - first - 1), line_no),
         ParseIndex(view.substr(second + 1), line_no)});
  }
  if (!header_seen) throw ParseError("empty interaction log");
  return log;
}

void WriteInteractionCsv(std::ostream& out, const InteractionLog& log) {
  out << "strategy_id,x,z\n";
  for (const auto& r : log.records) {
    out << r.strategy_id << ',' << r.x << ',' << r.z << '\n';
  }
}

void WritePosteriorCsv(std::ostream& out, const BetaPosterior& posterior) {
  out << "beta,posterior_weight\n";
  const auto weights = posterior.Weights();
  for (std::size_t i = 0; i < weights.size(); ++i) {
    out << FormatNumber(posterior.grid()[i]) << ',' << FormatNumber(weights[i])
        << '\n';
  }
}

}  // namespace friendfoe
