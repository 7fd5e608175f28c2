/*
 * Copyright 2026 the hhsq authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <exception>
#include <functional>

namespace hhsq {

// Serial is the reference path; OpenMp fans independent iterations out across
// threads. Results must be written into preallocated per-index slots so both
// modes produce identical output.
enum class ExecutionMode { Serial, OpenMp };

// Runs fn(0), ..., fn(n - 1). The first exception thrown by any iteration is
// rethrown after the loop finishes; iterations never see partial state of
// one another.
void parallel_for(int n, ExecutionMode mode, const std::function<void(int)>& fn);

}  // namespace hhsq
