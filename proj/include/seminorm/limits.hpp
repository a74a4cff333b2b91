/*
   Copyright 2026 The seminorm authors

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

#ifndef SEMINORM_LIMITS_HPP
#define SEMINORM_LIMITS_HPP

#include <cstddef>

namespace seminorm {

// Ceilings that make Groebner blow-up fail loudly instead of hanging.
struct ComputeLimits {
    std::size_t max_basis_elements = 10000;  // per Groebner run
    unsigned max_poly_degree = 64;           // total degree of any basis element
    unsigned max_factor_degree = 12;         // total degree accepted by multivariate factor()
    std::size_t max_module_basis = 20000;    // per module Groebner run
    std::size_t max_pushforward_rank = 4096; // module basis size of a finite map
};

// Process-wide defaults. The CLI adjusts these once before running a command;
// library callers may also pass explicit limits to the Groebner entry points.
inline ComputeLimits& global_limits() {
    static ComputeLimits limits;
    return limits;
}

}  // namespace seminorm

#endif
