// Copyright 2026 The blockpeek Authors
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

// Umbrella header pulling in the whole library.

#pragma once

#include "blockpeek/array_pattern.hpp"
#include "blockpeek/channel.hpp"
#include "blockpeek/config.hpp"
#include "blockpeek/errors.hpp"
#include "blockpeek/experiment.hpp"
#include "blockpeek/fading.hpp"
#include "blockpeek/game.hpp"
#include "blockpeek/io.hpp"
#include "blockpeek/manifest.hpp"
#include "blockpeek/matrix.hpp"
#include "blockpeek/polar.hpp"
#include "blockpeek/propagation.hpp"
#include "blockpeek/scenario.hpp"
#include "blockpeek/version.hpp"
