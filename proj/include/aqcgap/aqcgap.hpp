// Copyright 2026 The aqcgap Authors
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

#include "aqcgap/cases.hpp"
#include "aqcgap/certifier.hpp"
#include "aqcgap/error.hpp"
#include "aqcgap/paulialg.hpp"
#include "aqcgap/perron.hpp"
#include "aqcgap/render.hpp"
#include "aqcgap/specfile.hpp"
#include "aqcgap/spectral.hpp"
#include "aqcgap/sweep.hpp"
