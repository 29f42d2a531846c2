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

#ifndef FRIENDFOE_GAME_IO_H_
#define FRIENDFOE_GAME_IO_H_

// Text formats shared by the library and the command-line tool.
//
// Game JSON:
//   {"utility": [[...], ...],          rows are agent actions
//    "agent_labels": ["a", ...], "env_labels": ["z", ...],
//    "q_agent": [...], "q_env": [...], "alpha": 10, "beta": -10}
//
// Interaction log CSV: header "strategy_id,x,z", one round per line, x and z
// are action indices. Strategies sidecar JSON: {"<strategy_id>": [p, ...]}.

#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

#include "friendfoe/detection.h"
#include "friendfoe/error.h"
#include "friendfoe/game.h"

namespace friendfoe {

// Throws ParseError on malformed JSON or missing fields, Error on invalid
// game contents.
Game ParseGameJson(std::string_view text);
std::string GameToJson(const Game& game);

std::map<std::string, Dist> ParseStrategiesJson(std::string_view text);
std::string StrategiesToJson(const std::map<std::string, Dist>& strategies);

InteractionLog ReadInteractionCsv(std::istream& in,
                                  std::map<std::string, Dist> strategies);
void WriteInteractionCsv(std::ostream& out, const InteractionLog& log);

// Columns: beta, posterior_weight.
void WritePosteriorCsv(std::ostream& out, const BetaPosterior& posterior);

}  // namespace friendfoe

#endif  // FRIENDFOE_GAME_IO_H_
