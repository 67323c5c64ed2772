/*
   Copyright 2026 The rzcert authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace rz {

using Json = nlohmann::ordered_json;

/// Machine-checkable record of one theorem check: a claim id, the inputs it
/// was run on, and one pass/fail line per sub-assertion with witness data.
/// holds() is the conjunction of the sub-assertion results.
class Certificate {
  public:
    struct SubAssertion {
        std::string description;
        bool pass = false;
        Json witness;
    };

    explicit Certificate(std::string claim_id) : claim_id_(std::move(claim_id)) {}

    void echo_input(const std::string& key, Json value) { inputs_[key] = std::move(value); }
    /// Record one sub-assertion result; returns pass for chaining.
    bool require(const std::string& description, bool pass, Json witness = Json::object());

    const std::string& claim_id() const { return claim_id_; }
    bool holds() const;
    const std::vector<SubAssertion>& assertions() const { return subs_; }

    Json to_json() const;
    /// One summary line plus one line per sub-assertion.
    std::string pretty() const;
    /// FNV-1a digest of the canonical JSON; used by regression baselines.
    std::string digest() const;

  private:
    std::string claim_id_;
    Json inputs_ = Json::object();
    std::vector<SubAssertion> subs_;
};

}  // namespace rz
