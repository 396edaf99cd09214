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

#include <doctest.h>

#include <atomic>
#include <stdexcept>
#include <vector>

#include "polya/parallel.hpp"

TEST_CASE("every index runs exactly once") {
    for (unsigned workers : {1u, 2u, 5u, 16u}) {
        std::vector<std::atomic<int>> hits(37);
        polya::parallel_for(hits.size(), workers, [&](std::size_t i) { hits[i].fetch_add(1); });
        for (const auto& h : hits) CHECK(h.load() == 1);
    }
}

TEST_CASE("empty range is a no-op") {
    bool called = false;
    polya::parallel_for(0, 4, [&](std::size_t) { called = true; });
    CHECK_FALSE(called);
}

TEST_CASE("exceptions propagate after join") {
    CHECK_THROWS_AS(polya::parallel_for(10, 3,
                                        [](std::size_t i) {
                                            if (i == 7) throw std::runtime_error("boom");
                                        }),
                    std::runtime_error);
}

TEST_CASE("worker_count is positive") { CHECK(polya::worker_count() >= 1); }
