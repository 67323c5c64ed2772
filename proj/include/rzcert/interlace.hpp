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

#include "rzcert/realroots.hpp"

namespace rz {

/// One root in the merged, nonincreasing witness sequence. tag is "f", "F"
/// or "shared"; shared entries carry the common multiplicity min(m_f, m_F)
/// and any excess multiplicity follows as a separate single-sided entry.
struct WitnessEntry {
    std::string tag;
    RootDescriptor root;
    int mult = 0;
    Json to_json() const;
};

/// Outcome of the separation check f "precedes" F: deg f <= deg F <=
/// deg f + 1 and the nonincreasing root sequences (with multiplicity)
/// interlace as s_1 >= r_1 >= s_2 >= r_2 >= ...
struct SeparationVerdict {
    bool holds = false;
    bool degree_ok = false;
    std::vector<WitnessEntry> witness;  // nonincreasing root order
    std::string failure_reason;         // empty when holds

    Json to_json() const;
};

/// Exact trichotomy comparison of two root descriptors. Equality of two
/// interval roots is decided algebraically via gcd of their factors, never
/// by tolerance; provably distinct roots are separated by bounded interval
/// refinement (RefinementDefect beyond the bound). Descriptors may be
/// refined in place; the root values they denote never change.
int compare_roots(RootDescriptor& a, RootDescriptor& b);

/// Decide whether f separates F. Both inputs must be nonzero; inputs that
/// are not real-rooted yield a false verdict with reason "NotRealRooted".
SeparationVerdict separates(const UniPoly& f, const UniPoly& F);

/// separates(f', f): the Rolle property, exposed as a named self-test.
/// Requires deg f >= 1.
SeparationVerdict derivative_interlaces(const UniPoly& f);

}  // namespace rz
