/*
   Copyright 2026 the gabidulin contributors

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

#ifndef GABIDULIN_BENCH_HPP
#define GABIDULIN_BENCH_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gabidulin/field.hpp"

namespace gabidulin {

/// Counter deltas around one timed operation at input size s; setup work
/// (field construction, input generation) is excluded.
struct BenchRecord {
    std::string op;
    std::size_t s = 0;
    OpCounts counts;
    std::uint64_t wall_ns = 0;
};

/// The benchmarkable operations:
/// mul-naive, mul-fast, div-naive, div-fast, msp, mpe, interpolate, leea.
const std::vector<std::string>& bench_ops();

/// Runs each (op, size) pair over F_{2^(2*max size)}; deterministic per seed.
std::vector<BenchRecord> run_bench(const std::vector<std::string>& ops,
                                   const std::vector<std::size_t>& sizes, std::uint64_t seed);

/// CSV with header op,s,mul,inv,add,frob,wall_ns.
std::string bench_csv(const std::vector<BenchRecord>& records);

/// Ordinary least squares slope of log(mul count) against log(s) per op,
/// with the two smallest sizes dropped as warm-up.
std::map<std::string, double> bench_slopes(const std::vector<BenchRecord>& records);

}  // namespace gabidulin

#endif
