// Copyright 2026 The vflat Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VFLAT_VFLAT_HPP_
#define VFLAT_VFLAT_HPP_

#include "vflat/columns.hpp"
#include "vflat/decimal.hpp"
#include "vflat/error.hpp"
#include "vflat/instance.hpp"
#include "vflat/io.hpp"
#include "vflat/lattice.hpp"
#include "vflat/level_sets.hpp"
#include "vflat/mc_level.hpp"
#include "vflat/solutions.hpp"
#include "vflat/value_table.hpp"
#include "vflat/verify.hpp"

#endif  // VFLAT_VFLAT_HPP_
