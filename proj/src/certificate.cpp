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

#include "rzcert/certificate.hpp"

#include <cstdint>
#include <sstream>

namespace rz {

bool Certificate::require(const std::string& description, bool pass, Json witness) {
    subs_.push_back({description, pass, std::move(witness)});
    return pass;
}

bool Certificate::holds() const {
    for (const auto& s : subs_) {
        if (!s.pass) return false;
    }
    return true;
}

Json Certificate::to_json() const {
    Json subs = Json::array();
    for (const auto& s : subs_) {
        Json j;
        j["description"] = s.description;
        j["pass"] = s.pass;
        j["witness"] = s.witness;
        subs.push_back(std::move(j));
    }
    Json j;
    j["claim_id"] = claim_id_;
    j["holds"] = holds();
    j["inputs"] = inputs_;
    j["sub_assertions"] = subs;
    return j;
}

std::string Certificate::pretty() const {
    std::ostringstream os;
    os << (holds() ? "PASS " : "FAIL ") << claim_id_;
    if (!inputs_.empty()) os << "  inputs=" << inputs_.dump();
    os << "\n";
    for (const auto& s : subs_) {
        os << "  [" << (s.pass ? "ok" : "FAIL") << "] " << s.description;
        if (!s.pass && !s.witness.is_null()) os << "  witness=" << s.witness.dump();
        os << "\n";
    }
    return os.str();
}

std::string Certificate::digest() const {
    const std::string text = to_json().dump();
    std::uint64_t h = 1469598103934665603ULL;
    for (const unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace rz
