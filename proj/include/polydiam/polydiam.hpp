/*
   Copyright 2026 The polydiam authors

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

// Convenience umbrella: the whole library in one include.

#pragma once

#include "polydiam/acceptance.hpp"
#include "polydiam/bounds.hpp"
#include "polydiam/cayley.hpp"
#include "polydiam/charsum.hpp"
#include "polydiam/common.hpp"
#include "polydiam/dlog.hpp"
#include "polydiam/ff.hpp"
#include "polydiam/poly_enum.hpp"
#include "polydiam/sweep.hpp"
