// Copyright 2026 The edgeguess Authors
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

#pragma once

#include "edgeguess/check.hpp"
#include "edgeguess/directed.hpp"
#include "edgeguess/edge_list.hpp"
#include "edgeguess/enumerate.hpp"
#include "edgeguess/error.hpp"
#include "edgeguess/graph.hpp"
#include "edgeguess/labeling.hpp"
#include "edgeguess/oracle.hpp"
#include "edgeguess/pre_agreed.hpp"
#include "edgeguess/predictor.hpp"
#include "edgeguess/speech_mode.hpp"
