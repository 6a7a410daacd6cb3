// Copyright 2026 The imix authors
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

#include "imix/channels.hpp"
#include "imix/errors.hpp"
#include "imix/io.hpp"
#include "imix/measures.hpp"
#include "imix/mims.hpp"
#include "imix/rng.hpp"
#include "imix/search.hpp"
#include "imix/states.hpp"
#include "imix/tradeoffs.hpp"
