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

#include <stdexcept>

namespace rz {

/// Division was requested to be exact but left a nonzero remainder.
struct NotDivisible : std::domain_error {
    using std::domain_error::domain_error;
};

/// A substitution requires deg p <= n and the input violates that.
struct DegreeTooHigh : std::domain_error {
    using std::domain_error::domain_error;
};

/// Sturm counting requires a squarefree input.
struct NotSquarefree : std::domain_error {
    using std::domain_error::domain_error;
};

/// A brute-force enumeration oracle was asked to exceed its size cap.
struct TooLarge : std::domain_error {
    using std::domain_error::domain_error;
};

/// Knuth-identity evaluation point w must lie in (0, 1).
struct InvalidW : std::domain_error {
    using std::domain_error::domain_error;
};

/// A certificate checker's preconditions do not hold for the given input.
struct NotApplicable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An interval-refinement loop exceeded its iteration bound. Distinct
/// algebraic numbers separate after finitely many bisections, so hitting
/// the bound indicates an implementation defect, not a mathematical one.
struct RefinementDefect : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace rz
