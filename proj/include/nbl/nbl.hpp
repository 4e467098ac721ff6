// Copyright 2026 The NBL Reference Gates Authors
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

#pragma once

#include "nbl/affine_gf2.hpp"
#include "nbl/bit_vector.hpp"
#include "nbl/errors.hpp"
#include "nbl/gate_compiler.hpp"
#include "nbl/hyperspace.hpp"
#include "nbl/insertion_program.hpp"
#include "nbl/keyed_rng.hpp"
#include "nbl/rtw_reference.hpp"
#include "nbl/stat_report.hpp"
#include "nbl/verifier.hpp"
