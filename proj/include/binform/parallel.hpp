// Copyright 2026 The binform Authors
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

#include <cstddef>
#include <functional>

namespace binform {

/// Worker count for internal parallel loops. Defaults to the value of the
/// BINFORM_THREADS environment variable, else the hardware concurrency.
unsigned thread_count();

/// Overrides the worker count for the whole process; 0 restores the default.
void set_thread_count(unsigned n);

/// Runs body(0..n-1) across the configured workers. Each index is handled
/// by exactly one call, so results written per index are deterministic.
/// The first exception thrown by any call is rethrown on the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace binform
