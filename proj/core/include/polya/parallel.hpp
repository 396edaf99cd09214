/*
   Copyright 2026 The polya-cert Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef POLYA_PARALLEL_HPP
#define POLYA_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace polya {

/// Hardware concurrency, capped by the POLYA_CERT_THREADS environment variable.
unsigned worker_count();

/// Runs body(i) for i in [0, n) on up to `workers` threads. Indices are
/// statically strided across workers; body must only write to slot i of any
/// shared output. The first exception thrown is rethrown after joining.
void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& body);

}  // namespace polya

#endif
