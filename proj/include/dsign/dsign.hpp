// Copyright 2026 The dsign Authors
//
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

// Umbrella header.

#pragma once

#include "dsign/census.hpp"
#include "dsign/cycle_space.hpp"
#include "dsign/error.hpp"
#include "dsign/generate.hpp"
#include "dsign/graph.hpp"
#include "dsign/group.hpp"
#include "dsign/lemma_lab.hpp"
#include "dsign/oracle.hpp"
#include "dsign/serialize.hpp"
#include "dsign/solver.hpp"
#include "dsign/switching.hpp"
