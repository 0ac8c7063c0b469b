// Copyright 2026 The covercount Authors
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

#include "covercount/coloring.hpp"
#include "covercount/core_builder.hpp"
#include "covercount/covers.hpp"
#include "covercount/errors.hpp"
#include "covercount/graph.hpp"
#include "covercount/moments.hpp"
#include "covercount/rng.hpp"
#include "covercount/whitening.hpp"
