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

#include "gabidulin/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gabidulin/skew_poly.hpp"
#include "gabidulin/subspace.hpp"

namespace gabidulin {

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::vector<FieldElement> random_points(const FieldCtx& ctx, std::size_t count,
                                        std::mt19937_64& rng) {
    std::vector<FieldElement> pts;
    pts.reserve(count);
    for (std::size_t i = 0; i < count; ++i) pts.push_back(ctx.random_element(rng));
    return pts;
}

}  // namespace

const std::vector<std::string>& bench_ops() {
    static const std::vector<std::string> ops = {"mul-naive", "mul-fast",    "div-naive",
                                                 "div-fast",  "msp",         "mpe",
                                                 "interpolate", "leea"};
    return ops;
}

std::vector<BenchRecord> run_bench(const std::vector<std::string>& ops,
                                   const std::vector<std::size_t>& sizes, std::uint64_t seed) {
    if (sizes.empty()) return {};
    for (const auto& op : ops)
        if (std::find(bench_ops().begin(), bench_ops().end(), op) == bench_ops().end())
            throw std::invalid_argument("unknown bench operation: " + op);
    const std::size_t smax = *std::max_element(sizes.begin(), sizes.end());
    if (smax < 2) throw std::invalid_argument("bench sizes must be at least 2");
    // All degree-s inputs live untouched by reduction when m dominates s.
    FieldCtx ctx = FieldCtx::build(2, 1, static_cast<unsigned>(2 * smax), seed);

    std::vector<BenchRecord> out;
    for (const auto& op : ops) {
        for (std::size_t s : sizes) {
            std::mt19937_64 rng(seed ^ fnv1a(op) ^ (0x9e3779b97f4a7c15ull * (s + 1)));
            const long ds = static_cast<long>(s);
            SkewPoly a = SkewPoly::zero(ctx, 1), b = SkewPoly::zero(ctx, 1);
            std::vector<FieldElement> pts;
            std::vector<std::pair<FieldElement, FieldElement>> pairs;
            if (op == "mul-naive" || op == "mul-fast") {
                a = random_poly(ctx, ds, rng);
                b = random_poly(ctx, ds, rng);
            } else if (op == "div-naive" || op == "div-fast") {
                a = random_poly(ctx, ds, rng);
                b = random_poly(ctx, ds / 2, rng);
            } else if (op == "msp") {
                pts = random_points(ctx, s, rng);
            } else if (op == "mpe") {
                a = random_poly(ctx, ds, rng);
                pts = random_points(ctx, s, rng);
            } else if (op == "interpolate") {
                for (std::size_t i = 0; i < s; ++i)
                    pairs.emplace_back(ctx.random_element(rng), ctx.random_element(rng));
            } else if (op == "leea") {
                a = random_poly(ctx, ds, rng);
                b = random_poly(ctx, ds - 1, rng);
            }

            OpCounts before = ctx.counts();
            auto t0 = std::chrono::steady_clock::now();
            if (op == "mul-naive")
                (void)naive_mul(a, b);
            else if (op == "mul-fast")
                (void)fast_mul(a, b);
            else if (op == "div-naive")
                (void)naive_right_div(a, b);
            else if (op == "div-fast")
                (void)fast_right_div(a, b);
            else if (op == "msp")
                (void)msp(ctx, pts);
            else if (op == "mpe")
                (void)mpe(a, pts);
            else if (op == "interpolate")
                (void)interpolate(ctx, pairs);
            else if (op == "leea")
                (void)leea(a, b, std::max<long>(1, ds / 2));
            auto t1 = std::chrono::steady_clock::now();

            BenchRecord rec;
            rec.op = op;
            rec.s = s;
            rec.counts = ctx.counts() - before;
            rec.wall_ns = static_cast<std::uint64_t>(
                std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
            out.push_back(std::move(rec));
        }
    }
    return out;
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
    std::ostringstream os;
    os << "op,s,mul,inv,add,frob,wall_ns\n";
    for (const auto& r : records)
        os << r.op << ',' << r.s << ',' << r.counts.mul << ',' << r.counts.inv << ','
           << r.counts.add << ',' << r.counts.frob << ',' << r.wall_ns << '\n';
    return os.str();
}

std::map<std::string, double> bench_slopes(const std::vector<BenchRecord>& records) {
    std::map<std::string, std::vector<std::pair<std::size_t, std::uint64_t>>> by_op;
    for (const auto& r : records) by_op[r.op].emplace_back(r.s, r.counts.mul);
    std::map<std::string, double> slopes;
    for (auto& [op, pts] : by_op) {
        std::sort(pts.begin(), pts.end());
        std::size_t skip = pts.size() > 2 ? 2 : 0;  // warm-up sizes
        std::vector<std::pair<double, double>> xy;
        for (std::size_t i = skip; i < pts.size(); ++i)
            xy.emplace_back(std::log(static_cast<double>(pts[i].first)),
                            std::log(static_cast<double>(std::max<std::uint64_t>(1, pts[i].second))));
        if (xy.size() < 2) continue;
        double mx = 0, my = 0;
        for (auto& [x, y] : xy) {
            mx += x;
            my += y;
        }
        mx /= xy.size();
        my /= xy.size();
        double num = 0, den = 0;
        for (auto& [x, y] : xy) {
            num += (x - mx) * (y - my);
            den += (x - mx) * (x - mx);
        }
        slopes[op] = num / den;
    }
    return slopes;
}

}  // namespace gabidulin
