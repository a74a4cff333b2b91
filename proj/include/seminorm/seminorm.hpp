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

// Umbrella header: exact commutative algebra over QQ and GF(p) with
// normalization and seminormalization of reduced affine rings.

#ifndef SEMINORM_SEMINORM_HPP
#define SEMINORM_SEMINORM_HPP

#include "constructions.hpp"
#include "decomposition.hpp"
#include "factor.hpp"
#include "groebner.hpp"
#include "ideal.hpp"
#include "module_gb.hpp"
#include "monomial.hpp"
#include "normalization.hpp"
#include "parser.hpp"
#include "polynomial.hpp"
#include "ring.hpp"
#include "ring_file.hpp"
#include "ringmap.hpp"
#include "scalar.hpp"
#include "seminormalization.hpp"

#endif
