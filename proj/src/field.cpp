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

#include "gabidulin/field.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <stdexcept>

namespace gabidulin {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<u64> distinct_prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// ---------------------------------------------------------------------------
// F_2[x] on packed words, bit i = coefficient of x^i
// ---------------------------------------------------------------------------

long bp_deg(const std::vector<u64>& a) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i]) return static_cast<long>(i * kWordBits + (kWordBits - 1 - std::countl_zero(a[i])));
    return -1;
}

bool bp_get(const std::vector<u64>& a, std::size_t i) {
    std::size_t w = i / kWordBits;
    return w < a.size() && ((a[w] >> (i % kWordBits)) & 1u);
}

void bp_set(std::vector<u64>& a, std::size_t i) {
    std::size_t w = i / kWordBits;
    if (w >= a.size()) a.resize(w + 1, 0);
    a[w] |= u64(1) << (i % kWordBits);
}

// a ^= b << shift (a grows as needed)
void bp_xor_shifted(std::vector<u64>& a, const std::vector<u64>& b, std::size_t shift) {
    std::size_t ws = shift / kWordBits, bs = shift % kWordBits;
    std::size_t need = b.size() + ws + 1;
    if (a.size() < need) a.resize(need, 0);
    if (bs == 0) {
        for (std::size_t i = 0; i < b.size(); ++i) a[i + ws] ^= b[i];
    } else {
        u64 carry = 0;
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[i + ws] ^= (b[i] << bs) | carry;
            carry = b[i] >> (kWordBits - bs);
        }
        a[b.size() + ws] ^= carry;
    }
}

void bp_trim(std::vector<u64>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<u64> bp_gcd(std::vector<u64> a, std::vector<u64> b) {
    bp_trim(a);
    bp_trim(b);
    long da = bp_deg(a), db = bp_deg(b);
    while (db >= 0) {
        if (da < db) {
            std::swap(a, b);
            std::swap(da, db);
            continue;
        }
        bp_xor_shifted(a, b, static_cast<std::size_t>(da - db));
        bp_trim(a);
        da = bp_deg(a);
    }
    return a;
}

// Carryless product r = a*b; a spans aw words, b spans bw; r gets aw+bw words.
void bp_mul_raw(const u64* a, std::size_t aw, const u64* b, std::size_t bw, std::vector<u64>& r) {
    r.assign(aw + bw, 0);
    thread_local std::vector<u64> tbl;
    tbl.assign(16 * (bw + 1), 0);
    auto row = [&](unsigned u) { return tbl.data() + std::size_t(u) * (bw + 1); };
    std::memcpy(row(1), b, bw * sizeof(u64));
    for (unsigned u = 2; u < 16; ++u) {
        u64* d = row(u);
        if ((u & 1) == 0) {
            const u64* h = row(u / 2);
            u64 carry = 0;
            for (std::size_t i = 0; i <= bw; ++i) {
                u64 v = h[i];
                d[i] = (v << 1) | carry;
                carry = v >> 63;
            }
        } else {
            const u64* h = row(u - 1);
            for (std::size_t i = 0; i <= bw; ++i) d[i] = h[i];
            for (std::size_t i = 0; i < bw; ++i) d[i] ^= b[i];
        }
    }
    // one shift per nibble position; word offsets place the rest
    for (unsigned pos = 16; pos-- > 0;) {
        if (pos != 15) {
            u64 carry = 0;
            for (std::size_t i = 0; i < r.size(); ++i) {
                u64 v = r[i];
                r[i] = (v << 4) | carry;
                carry = v >> 60;
            }
        }
        for (std::size_t k = 0; k < aw; ++k) {
            unsigned nib = static_cast<unsigned>((a[k] >> (pos * 4)) & 0xF);
            if (!nib) continue;
            const u64* t = row(nib);
            u64* dst = r.data() + k;
            for (std::size_t i = 0; i <= bw; ++i) dst[i] ^= t[i];
        }
    }
}

// Copies len bits of src starting at s_off into dst starting at d_off.
// The destination bits must be clear beforehand.
void bp_blit(const std::vector<u64>& src, std::size_t s_off, std::vector<u64>& dst,
             std::size_t d_off, std::size_t len) {
    for (std::size_t i = 0; i < len;) {
        std::size_t s = s_off + i, d = d_off + i;
        std::size_t chunk =
            std::min({len - i, kWordBits - (s % kWordBits), kWordBits - (d % kWordBits)});
        u64 bits = src[s / kWordBits] >> (s % kWordBits);
        if (chunk < kWordBits) bits &= (u64(1) << chunk) - 1;
        dst[d / kWordBits] |= bits << (d % kWordBits);
        i += chunk;
    }
}

// ---------------------------------------------------------------------------
// small F_p[y] helpers (p prime, plain integer coefficients)
// ---------------------------------------------------------------------------

using PPoly = std::vector<u32>;

void pp_trim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long pp_deg(const PPoly& a) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i]) return static_cast<long>(i);
    return -1;
}

PPoly pp_mulmod(const PPoly& a, const PPoly& b, const PPoly& f, u32 p) {
    std::size_t d = f.size() - 1;  // f monic of degree d
    PPoly r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<u32>((r[i + j] + u64(a[i]) * b[j]) % p);
    }
    for (std::size_t i = r.size(); i-- > d;) {
        u32 c = r[i];
        if (!c) continue;
        r[i] = 0;
        for (std::size_t j = 0; j < d; ++j) {
            u64 sub = u64(c) * f[j] % p;
            r[i - d + j] = static_cast<u32>((r[i - d + j] + p - sub) % p);
        }
    }
    r.resize(d);
    return r;
}

PPoly pp_powmod(PPoly base, u64 exp, const PPoly& f, u32 p) {
    PPoly r(f.size() - 1, 0);
    r[0] = 1;
    while (exp) {
        if (exp & 1) r = pp_mulmod(r, base, f, p);
        base = pp_mulmod(base, base, f, p);
        exp >>= 1;
    }
    return r;
}

PPoly pp_gcd(PPoly a, PPoly b, u32 p) {
    auto inv_mod_p = [&](u32 x) {
        u64 r = 1, bpow = x, e2 = p - 2;
        while (e2) {
            if (e2 & 1) r = r * bpow % p;
            bpow = bpow * bpow % p;
            e2 >>= 1;
        }
        return static_cast<u32>(r);
    };
    pp_trim(a);
    pp_trim(b);
    while (pp_deg(b) >= 0) {
        long da = pp_deg(a), db = pp_deg(b);
        if (da < db) {
            std::swap(a, b);
            continue;
        }
        u32 lead_inv = inv_mod_p(b[db]);
        while (da >= db && da >= 0) {
            u32 c = static_cast<u32>(u64(a[da]) * lead_inv % p);
            for (long j = 0; j <= db; ++j) {
                u64 sub = u64(c) * b[j] % p;
                a[da - db + j] = static_cast<u32>((a[da - db + j] + p - sub) % p);
            }
            pp_trim(a);
            da = pp_deg(a);
        }
        std::swap(a, b);
    }
    return a;
}

// Rabin irreducibility test for monic f over F_p.
bool pp_irreducible(const PPoly& f, u32 p) {
    long d = pp_deg(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    if (f[0] == 0) return false;
    std::vector<u64> targets;
    for (u64 r : distinct_prime_factors(static_cast<u64>(d)))
        targets.push_back(static_cast<u64>(d) / r);
    std::sort(targets.begin(), targets.end());
    PPoly t(f.size() - 1, 0);
    t[1] = 1;  // x
    u64 done = 0;
    for (u64 target : targets) {
        while (done < target) {
            t = pp_powmod(t, p, f, p);
            ++done;
        }
        PPoly diff = t;
        diff[1] = (diff[1] + p - 1) % p;
        if (pp_deg(pp_gcd(diff, f, p)) != 0) return false;
    }
    while (done < static_cast<u64>(d)) {
        t = pp_powmod(t, p, f, p);
        ++done;
    }
    PPoly diff = t;
    diff[1] = (diff[1] + p - 1) % p;
    pp_trim(diff);
    return pp_deg(diff) < 0;
}

// ---------------------------------------------------------------------------
// degree-m binary modulus helpers (f = x^m + f_low)
// ---------------------------------------------------------------------------

// x^{m+j} mod f for j = 0..m-2
std::vector<std::vector<u64>> reduction_rows_b(const std::vector<u64>& f_low, unsigned m) {
    std::size_t W = word_count(m);
    std::vector<std::vector<u64>> rows;
    if (m < 2) return rows;
    rows.reserve(m - 1);
    std::vector<u64> r(W, 0);
    for (std::size_t i = 0; i < f_low.size() && i < W; ++i) r[i] = f_low[i];
    unsigned rem = m % kWordBits;
    if (rem) r[W - 1] &= (u64(1) << rem) - 1;
    rows.push_back(r);
    for (unsigned j = 1; j + 1 < m; ++j) {
        std::vector<u64> nxt(W, 0);
        u64 carry = 0;
        for (std::size_t i = 0; i < W; ++i) {
            nxt[i] = (r[i] << 1) | carry;
            carry = r[i] >> 63;
        }
        bool overflow;
        if (rem) {
            overflow = (nxt[W - 1] >> rem) & 1;
            nxt[W - 1] &= (u64(1) << rem) - 1;
        } else {
            overflow = carry != 0;
        }
        if (overflow)
            for (std::size_t i = 0; i < W; ++i) nxt[i] ^= rows[0][i];
        rows.push_back(nxt);
        r = nxt;
    }
    return rows;
}

// square a (m bits) modulo f
std::vector<u64> sq_mod_b(const std::vector<u64>& a, unsigned m,
                          const std::vector<std::vector<u64>>& red) {
    std::size_t W = word_count(m);
    std::vector<u64> wide(word_count(2 * m), 0);
    for (unsigned i = 0; i < m; ++i)
        if (bp_get(a, i)) bp_set(wide, 2 * i);
    std::vector<u64> out(W, 0);
    bp_blit(wide, 0, out, 0, m);
    for (unsigned j = 0; j + 1 < m; ++j) {
        if (bp_get(wide, m + j))
            for (std::size_t i = 0; i < W; ++i) out[i] ^= red[j][i];
    }
    return out;
}

bool bp_irreducible(const std::vector<u64>& f_low, unsigned m) {
    if (m == 1) return true;
    if (!bp_get(f_low, 0)) return false;  // divisible by x
    auto red = reduction_rows_b(f_low, m);
    std::size_t W = word_count(m);
    std::vector<u64> full_f = f_low;
    full_f.resize(word_count(m + 1), 0);
    bp_set(full_f, m);

    std::vector<u64> targets;
    // cheap screen: rule out factors of degree <= 4 before the full ladder
    for (u64 d = 1; d <= std::min<u64>(4, m - 1); ++d) targets.push_back(d);
    for (u64 r : distinct_prime_factors(m)) {
        u64 t = m / r;
        if (t > 4) targets.push_back(t);
    }
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

    std::vector<u64> t(W, 0);
    bp_set(t, 1);  // x
    u64 done = 0;
    for (u64 target : targets) {
        while (done < target) {
            t = sq_mod_b(t, m, red);
            ++done;
        }
        std::vector<u64> diff = t;
        diff[0] ^= 2;  // subtract x
        bp_trim(diff);
        if (bp_deg(bp_gcd(full_f, diff)) != 0) return false;
    }
    while (done < m) {
        t = sq_mod_b(t, m, red);
        ++done;
    }
    std::vector<u64> diff = t;
    diff[0] ^= 2;
    bp_trim(diff);
    return bp_deg(diff) < 0;  // x^{2^m} == x
}

}  // namespace

// ---------------------------------------------------------------------------
// detail::F2LinearMap
// ---------------------------------------------------------------------------

namespace detail {

void F2LinearMap::build(std::size_t in, std::size_t out_bits,
                        const std::vector<std::vector<u64>>& columns) {
    in_bits = in;
    out_words = word_count(out_bits == 0 ? 1 : out_bits);
    // 8-bit groups up to ~4 MB of table, narrower beyond that
    group_bits = ((in_bits + 7) / 8 * 256 * out_words * 8 <= (std::size_t(32) << 20)) ? 8 : 4;
    const unsigned gsz = 1u << group_bits;
    std::size_t groups = (in_bits + group_bits - 1) / group_bits;
    tbl.assign(groups * gsz * out_words, 0);
    for (std::size_t g = 0; g < groups; ++g) {
        u64* base = tbl.data() + g * gsz * out_words;
        for (unsigned b = 1; b < gsz; ++b) {
            unsigned low = static_cast<unsigned>(std::countr_zero(b));
            std::size_t colidx = g * group_bits + low;
            const u64* prev = base + std::size_t(b ^ (1u << low)) * out_words;
            u64* dst = base + std::size_t(b) * out_words;
            std::memcpy(dst, prev, out_words * sizeof(u64));
            if (colidx < in_bits) {
                const auto& col = columns[colidx];
                for (std::size_t i = 0; i < col.size() && i < out_words; ++i) dst[i] ^= col[i];
            }
        }
    }
}

void F2LinearMap::apply(const u64* in, u64* out) const {
    std::memset(out, 0, out_words * sizeof(u64));
    const unsigned mask = (1u << group_bits) - 1;
    const std::size_t groups = (in_bits + group_bits - 1) / group_bits;
    // gather the active rows first so the loads overlap
    constexpr std::size_t kMaxGroups = 2048;
    const u64* rows[kMaxGroups];
    std::size_t cnt = 0;
    if (groups <= kMaxGroups) {
        for (std::size_t g = 0; g < groups; ++g) {
            std::size_t bit = g * group_bits;
            unsigned chunk =
                static_cast<unsigned>((in[bit / kWordBits] >> (bit % kWordBits)) & mask);
            if (!chunk) continue;
            const u64* row = tbl.data() + (g * (std::size_t(mask) + 1) + chunk) * out_words;
            __builtin_prefetch(row);
            rows[cnt++] = row;
        }
        std::size_t i = 0;
        for (; i + 4 <= cnt; i += 4) {
            const u64 *r0 = rows[i], *r1 = rows[i + 1], *r2 = rows[i + 2], *r3 = rows[i + 3];
            for (std::size_t w = 0; w < out_words; ++w)
                out[w] ^= r0[w] ^ r1[w] ^ r2[w] ^ r3[w];
        }
        for (; i < cnt; ++i)
            for (std::size_t w = 0; w < out_words; ++w) out[w] ^= rows[i][w];
        return;
    }
    for (std::size_t g = 0; g < groups; ++g) {
        std::size_t bit = g * group_bits;
        unsigned chunk = static_cast<unsigned>((in[bit / kWordBits] >> (bit % kWordBits)) & mask);
        if (!chunk) continue;
        const u64* row = tbl.data() + (g * (std::size_t(mask) + 1) + chunk) * out_words;
        for (std::size_t i = 0; i < out_words; ++i) out[i] ^= row[i];
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// FieldCtx
// ---------------------------------------------------------------------------

FieldCtx::FieldCtx(FieldCtx&& other) noexcept { *this = std::move(other); }

FieldCtx& FieldCtx::operator=(FieldCtx&& other) noexcept {
    params_ = std::move(other.params_);
    q_ = other.q_;
    binary_ = other.binary_;
    words_ = other.words_;
    fq_log_ = std::move(other.fq_log_);
    fq_alog_ = std::move(other.fq_alog_);
    ext_mod_bits_ = std::move(other.ext_mod_bits_);
    to_poly_b_ = std::move(other.to_poly_b_);
    to_normal_b_ = std::move(other.to_normal_b_);
    fold_b_ = std::move(other.fold_b_);
    to_poly_g_ = std::move(other.to_poly_g_);
    to_normal_g_ = std::move(other.to_normal_g_);
    c_mul_.store(other.c_mul_.load());
    c_inv_.store(other.c_inv_.load());
    c_add_.store(other.c_add_.load());
    c_frob_.store(other.c_frob_.load());
    return *this;
}

// ---- F_q scalar layer ----

std::uint32_t FieldCtx::fq_add(u32 a, u32 b) const {
    if (params_.p == 2) return a ^ b;
    if (params_.e == 1) {
        u32 s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    u32 out = 0, mul = 1;
    for (unsigned d = 0; d < params_.e; ++d) {
        out += ((a % params_.p + b % params_.p) % params_.p) * mul;
        a /= params_.p;
        b /= params_.p;
        mul *= params_.p;
    }
    return out;
}

std::uint32_t FieldCtx::fq_neg(u32 a) const {
    if (params_.p == 2) return a;
    u32 out = 0, mul = 1;
    for (unsigned d = 0; d < params_.e; ++d) {
        u32 da = a % params_.p;
        out += (da ? params_.p - da : 0) * mul;
        a /= params_.p;
        mul *= params_.p;
    }
    return out;
}

std::uint32_t FieldCtx::fq_sub(u32 a, u32 b) const { return fq_add(a, fq_neg(b)); }

std::uint32_t FieldCtx::fq_mul(u32 a, u32 b) const {
    if (a == 0 || b == 0) return 0;
    if (q_ == 2) return 1;
    return fq_alog_[fq_log_[a] + fq_log_[b]];
}

std::uint32_t FieldCtx::fq_inv(u32 a) const {
    if (a == 0) throw std::domain_error("division by zero in F_q");
    if (q_ == 2) return 1;
    return fq_alog_[(q_ - 1 - fq_log_[a]) % (q_ - 1)];
}

// ---- construction ----

void FieldCtx::init_base_field() {
    const u32 p = params_.p;
    const unsigned e = params_.e;
    q_ = 1;
    for (unsigned i = 0; i < e; ++i) q_ *= p;
    if (q_ == 2) return;

    auto mul_slow = [&](u32 a, u32 b) -> u32 {
        if (e == 1) return static_cast<u32>(u64(a) * b % p);
        PPoly pa, pb;
        for (u32 t = a; t; t /= p) pa.push_back(t % p);
        for (u32 t = b; t; t /= p) pb.push_back(t % p);
        if (pa.empty() || pb.empty()) return 0;
        PPoly fb(params_.base_modulus.begin(), params_.base_modulus.end());
        PPoly r = pp_mulmod(pa, pb, fb, p);
        u32 code = 0, m1 = 1;
        for (std::size_t i = 0; i < r.size(); ++i) {
            code += r[i] * m1;
            m1 *= p;
        }
        return code;
    };
    auto pow_slow = [&](u32 g, u64 exp) {
        u32 r = 1;
        while (exp) {
            if (exp & 1) r = mul_slow(r, g);
            g = mul_slow(g, g);
            exp >>= 1;
        }
        return r;
    };
    auto factors = distinct_prime_factors(q_ - 1);
    u32 gen = 0;
    for (u32 cand = 2; cand < q_; ++cand) {
        bool ok = true;
        for (u64 r : factors)
            if (pow_slow(cand, (q_ - 1) / r) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            gen = cand;
            break;
        }
    }
    if (gen == 0) throw std::logic_error("no generator of F_q^* found");
    fq_alog_.assign(2 * (q_ - 1), 0);
    fq_log_.assign(q_, 0);
    u32 v = 1;
    for (u32 i = 0; i < q_ - 1; ++i) {
        fq_alog_[i] = v;
        fq_alog_[i + (q_ - 1)] = v;
        fq_log_[v] = i;
        v = mul_slow(v, gen);
    }
}

void FieldCtx::finish_tables() {
    const unsigned m = params_.m;
    if (binary_) {
        std::size_t W = word_count(m);
        ext_mod_bits_.assign(W, 0);
        for (unsigned i = 0; i < m; ++i)
            if (params_.ext_modulus[i]) bp_set(ext_mod_bits_, i);
        auto red = reduction_rows_b(ext_mod_bits_, m);

        std::vector<u64> b(W, 0);
        for (unsigned i = 0; i < m; ++i)
            if (params_.beta_poly[i]) bp_set(b, i);
        std::vector<std::vector<u64>> orbit(m);
        for (unsigned i = 0; i < m; ++i) {
            orbit[i] = b;
            b = sq_mod_b(b, m, red);
        }
        // invert the basis-change matrix with packed Gauss-Jordan
        std::size_t W2 = word_count(2 * std::size_t(m));
        std::vector<std::vector<u64>> rowsm(m, std::vector<u64>(W2, 0));
        for (unsigned c = 0; c < m; ++c)
            for (unsigned r = 0; r < m; ++r)
                if (bp_get(orbit[c], r)) bp_set(rowsm[r], c);
        for (unsigned r = 0; r < m; ++r) bp_set(rowsm[r], m + r);
        for (unsigned col = 0; col < m; ++col) {
            unsigned piv = col;
            while (piv < m && !bp_get(rowsm[piv], col)) ++piv;
            if (piv == m) throw std::invalid_argument("beta is not a normal element");
            std::swap(rowsm[col], rowsm[piv]);
            for (unsigned r = 0; r < m; ++r) {
                if (r != col && bp_get(rowsm[r], col))
                    for (std::size_t i = 0; i < W2; ++i) rowsm[r][i] ^= rowsm[col][i];
            }
        }
        std::vector<std::vector<u64>> inv_cols(m, std::vector<u64>(W, 0));
        for (unsigned c = 0; c < m; ++c)
            for (unsigned r = 0; r < m; ++r)
                if (bp_get(rowsm[r], m + c)) bp_set(inv_cols[c], r);

        to_poly_b_.build(m, m, orbit);
        to_normal_b_.build(m, m, inv_cols);
        fold_b_.build(m >= 2 ? m - 1 : 0, m, red);
        words_ = W;
    } else {
        auto elem_pow_q = [&](std::vector<u32> base) {
            std::vector<u32> acc(m, 0);
            acc[0] = 1;
            u32 exp = q_;
            while (exp) {
                if (exp & 1) acc = poly_mulmod_g(acc, base);
                base = poly_mulmod_g(base, base);
                exp >>= 1;
            }
            return acc;
        };
        std::vector<std::vector<u32>> orbit(m);
        std::vector<u32> b(params_.beta_poly.begin(), params_.beta_poly.end());
        b.resize(m, 0);
        for (unsigned i = 0; i < m; ++i) {
            orbit[i] = b;
            b = elem_pow_q(b);
        }
        to_poly_g_.assign(std::size_t(m) * m, 0);
        for (unsigned c = 0; c < m; ++c)
            for (unsigned r = 0; r < m; ++r) to_poly_g_[std::size_t(r) * m + c] = orbit[c][r];
        std::vector<std::vector<u32>> aug(m, std::vector<u32>(2 * std::size_t(m), 0));
        for (unsigned r = 0; r < m; ++r) {
            for (unsigned c = 0; c < m; ++c) aug[r][c] = to_poly_g_[std::size_t(r) * m + c];
            aug[r][m + r] = 1;
        }
        for (unsigned col = 0; col < m; ++col) {
            unsigned piv = col;
            while (piv < m && aug[piv][col] == 0) ++piv;
            if (piv == m) throw std::invalid_argument("beta is not a normal element");
            std::swap(aug[col], aug[piv]);
            u32 s = fq_inv(aug[col][col]);
            for (unsigned c = 0; c < 2 * m; ++c) aug[col][c] = fq_mul(aug[col][c], s);
            for (unsigned r = 0; r < m; ++r) {
                if (r == col || aug[r][col] == 0) continue;
                u32 fct = aug[r][col];
                for (unsigned c = 0; c < 2 * m; ++c)
                    aug[r][c] = fq_sub(aug[r][c], fq_mul(fct, aug[col][c]));
            }
        }
        to_normal_g_.assign(std::size_t(m) * m, 0);
        for (unsigned r = 0; r < m; ++r)
            for (unsigned c = 0; c < m; ++c) to_normal_g_[std::size_t(r) * m + c] = aug[r][m + c];
        words_ = m;
    }
}

std::vector<u32> FieldCtx::poly_mulmod_g(const std::vector<u32>& a,
                                         const std::vector<u32>& b) const {
    const unsigned m = params_.m;
    std::vector<u32> r(2 * std::size_t(m), 0);
    for (unsigned i = 0; i < m; ++i) {
        if (!a[i]) continue;
        for (unsigned j = 0; j < m; ++j)
            if (b[j]) r[i + j] = fq_add(r[i + j], fq_mul(a[i], b[j]));
    }
    for (std::size_t i = 2 * std::size_t(m); i-- > m;) {
        u32 c = r[i];
        if (!c) continue;
        r[i] = 0;
        for (unsigned j = 0; j < m; ++j)
            if (params_.ext_modulus[j])
                r[i - m + j] = fq_sub(r[i - m + j], fq_mul(c, params_.ext_modulus[j]));
    }
    r.resize(m);
    return r;
}

namespace {

// Rabin test over F_q via a context's scalar layer and a candidate modulus f.
bool fq_irreducible(const FieldCtx& ctx, const std::vector<u32>& f, unsigned m) {
    if (m == 1) return f[0] != 0;
    if (f[0] == 0) return false;
    auto mulmod = [&](const std::vector<u32>& a, const std::vector<u32>& b) {
        std::vector<u32> r(2 * std::size_t(m), 0);
        for (unsigned i = 0; i < m; ++i) {
            if (!a[i]) continue;
            for (unsigned j = 0; j < m; ++j)
                if (b[j]) r[i + j] = ctx.fq_add(r[i + j], ctx.fq_mul(a[i], b[j]));
        }
        for (std::size_t i = 2 * std::size_t(m); i-- > m;) {
            u32 c = r[i];
            if (!c) continue;
            r[i] = 0;
            for (unsigned j = 0; j < m; ++j)
                if (f[j]) r[i - m + j] = ctx.fq_sub(r[i - m + j], ctx.fq_mul(c, f[j]));
        }
        r.resize(m);
        return r;
    };
    auto powq = [&](std::vector<u32> base) {
        std::vector<u32> acc(m, 0);
        acc[0] = 1;
        u32 exp = ctx.q();
        while (exp) {
            if (exp & 1) acc = mulmod(acc, base);
            base = mulmod(base, base);
            exp >>= 1;
        }
        return acc;
    };
    auto deg = [](const std::vector<u32>& v) {
        for (std::size_t i = v.size(); i-- > 0;)
            if (v[i]) return static_cast<long>(i);
        return -1L;
    };
    auto gcd_deg_with_f = [&](std::vector<u32> y) {
        std::vector<u32> x(f.begin(), f.end());
        x.push_back(1);  // monic top coefficient
        while (deg(y) >= 0) {
            long dx = deg(x), dy = deg(y);
            if (dx < dy) {
                std::swap(x, y);
                continue;
            }
            u32 s = ctx.fq_mul(x[dx], ctx.fq_inv(y[dy]));
            for (long j = 0; j <= dy; ++j)
                x[dx - dy + j] = ctx.fq_sub(x[dx - dy + j], ctx.fq_mul(s, y[j]));
        }
        return deg(x);
    };
    std::vector<u64> targets;
    for (u64 r : distinct_prime_factors(m)) targets.push_back(m / r);
    std::sort(targets.begin(), targets.end());
    std::vector<u32> t(m, 0);
    t[1] = 1;
    u64 done = 0;
    for (u64 target : targets) {
        while (done < target) {
            t = powq(t);
            ++done;
        }
        auto diff = t;
        diff[1] = ctx.fq_sub(diff[1], 1);
        if (gcd_deg_with_f(diff) != 0) return false;
    }
    while (done < m) {
        t = powq(t);
        ++done;
    }
    auto diff = t;
    diff[1] = ctx.fq_sub(diff[1], 1);
    return deg(diff) < 0;
}

}  // namespace

FieldCtx FieldCtx::build(u32 p, unsigned e, unsigned m, u64 seed) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (e < 1 || m < 1) throw std::invalid_argument("e and m must be positive");
    {
        u64 q = 1;
        for (unsigned i = 0; i < e; ++i) {
            q *= p;
            if (q > 65536) throw std::invalid_argument("q = p^e must not exceed 2^16");
        }
    }
    FieldCtx ctx;
    ctx.params_.p = p;
    ctx.params_.e = e;
    ctx.params_.m = m;
    ctx.binary_ = (p == 2 && e == 1);
    std::mt19937_64 rng(seed);

    if (e == 1) {
        ctx.params_.base_modulus = {0, 1};
    } else {
        while (true) {
            PPoly f(e + 1, 0);
            f[e] = 1;
            for (unsigned i = 0; i < e; ++i) f[i] = static_cast<u32>(rng() % p);
            if (f[0] == 0) continue;
            if (pp_irreducible(f, p)) {
                ctx.params_.base_modulus.assign(f.begin(), f.end());
                break;
            }
        }
    }
    ctx.init_base_field();

    if (ctx.binary_) {
        std::size_t W = word_count(m);
        while (true) {
            std::vector<u64> low(W, 0);
            for (auto& w : low) w = rng();
            unsigned rem = m % kWordBits;
            if (rem) low[W - 1] &= (u64(1) << rem) - 1;
            low[0] |= 1;
            if (m == 1) low = {1};  // x + 1
            if (!bp_irreducible(low, m)) continue;
            ctx.params_.ext_modulus.assign(m + 1, 0);
            for (unsigned i = 0; i < m; ++i) ctx.params_.ext_modulus[i] = bp_get(low, i) ? 1 : 0;
            ctx.params_.ext_modulus[m] = 1;
            break;
        }
    } else {
        while (true) {
            std::vector<u32> f(m + 1, 0);
            f[m] = 1;
            for (unsigned i = 0; i < m; ++i) f[i] = static_cast<u32>(rng() % ctx.q_);
            if (f[0] == 0) continue;
            std::vector<u32> flow(f.begin(), f.begin() + m);
            if (!fq_irreducible(ctx, flow, m)) continue;
            ctx.params_.ext_modulus = f;
            break;
        }
    }

    while (true) {
        std::vector<u32> cand(m, 0);
        bool nz = false;
        for (unsigned i = 0; i < m; ++i) {
            cand[i] = static_cast<u32>(rng() % ctx.q_);
            nz |= cand[i] != 0;
        }
        if (!nz) continue;
        ctx.params_.beta_poly = cand;
        try {
            ctx.finish_tables();
            break;
        } catch (const std::invalid_argument&) {
            continue;
        }
    }
    return ctx;
}

FieldCtx FieldCtx::from_params(const FieldParams& params) {
    if (!is_prime(params.p)) throw std::invalid_argument("p must be prime");
    if (params.e < 1 || params.m < 1) throw std::invalid_argument("e and m must be positive");
    if (params.base_modulus.size() != params.e + 1 || params.base_modulus[params.e] != 1)
        throw std::invalid_argument("base modulus must be monic of degree e");
    if (params.ext_modulus.size() != params.m + 1 || params.ext_modulus[params.m] != 1)
        throw std::invalid_argument("extension modulus must be monic of degree m");
    if (params.beta_poly.size() != params.m)
        throw std::invalid_argument("beta must have m polynomial coordinates");
    {
        u64 q = 1;
        for (unsigned i = 0; i < params.e; ++i) {
            q *= params.p;
            if (q > 65536) throw std::invalid_argument("q = p^e must not exceed 2^16");
        }
    }
    for (auto c : params.base_modulus)
        if (c >= params.p) throw std::invalid_argument("base modulus coefficient out of range");
    if (params.e > 1) {
        PPoly f(params.base_modulus.begin(), params.base_modulus.end());
        if (!pp_irreducible(f, params.p))
            throw std::invalid_argument("base modulus is not irreducible");
    }
    FieldCtx ctx;
    ctx.params_ = params;
    ctx.binary_ = (params.p == 2 && params.e == 1);
    ctx.init_base_field();
    for (auto c : params.ext_modulus)
        if (c >= ctx.q_) throw std::invalid_argument("extension modulus coefficient out of range");
    for (auto c : params.beta_poly)
        if (c >= ctx.q_) throw std::invalid_argument("beta coordinate out of range");
    if (ctx.binary_) {
        std::vector<u64> low(word_count(params.m), 0);
        for (unsigned i = 0; i < params.m; ++i)
            if (params.ext_modulus[i]) bp_set(low, i);
        if (!bp_irreducible(low, params.m))
            throw std::invalid_argument("extension modulus is not irreducible");
    } else {
        std::vector<u32> flow(params.ext_modulus.begin(), params.ext_modulus.begin() + params.m);
        if (!fq_irreducible(ctx, flow, params.m))
            throw std::invalid_argument("extension modulus is not irreducible");
    }
    ctx.finish_tables();
    return ctx;
}

// ---- element basics ----

FieldElement FieldCtx::zero() const {
    FieldElement e;
    e.w_.assign(words_, 0);
    return e;
}

FieldElement FieldCtx::one() const {
    std::vector<u32> pc(params_.m, 0);
    pc[0] = 1;
    return from_poly_coords(pc);
}

FieldElement FieldCtx::basis_element(unsigned i) const {
    if (i >= params_.m) throw std::invalid_argument("basis index out of range");
    FieldElement e = zero();
    if (binary_)
        e.w_[i / kWordBits] |= u64(1) << (i % kWordBits);
    else
        e.w_[i] = 1;
    return e;
}

FieldElement FieldCtx::from_coords(const std::vector<u32>& coords) const {
    if (coords.size() != params_.m) throw std::invalid_argument("coordinate count mismatch");
    FieldElement e = zero();
    for (unsigned i = 0; i < params_.m; ++i) {
        u32 c = coords[i];
        if (c >= q_) throw std::invalid_argument("coordinate out of range");
        if (binary_) {
            if (c) e.w_[i / kWordBits] |= u64(1) << (i % kWordBits);
        } else {
            e.w_[i] = c;
        }
    }
    return e;
}

std::vector<u32> FieldCtx::coords(const FieldElement& a) const {
    std::vector<u32> out(params_.m, 0);
    for (unsigned i = 0; i < params_.m; ++i) out[i] = coord(a, i);
    return out;
}

std::uint32_t FieldCtx::coord(const FieldElement& a, unsigned i) const {
    if (binary_) return static_cast<u32>((a.w_[i / kWordBits] >> (i % kWordBits)) & 1u);
    return static_cast<u32>(a.w_[i]);
}

FieldElement FieldCtx::from_poly_coords(const std::vector<u32>& coords) const {
    if (coords.size() != params_.m) throw std::invalid_argument("coordinate count mismatch");
    FieldElement e = zero();
    if (binary_) {
        std::vector<u64> in(words_, 0);
        for (unsigned i = 0; i < params_.m; ++i)
            if (coords[i]) bp_set(in, i);
        in.resize(words_, 0);
        to_normal_b_.apply(in.data(), e.w_.data());
    } else {
        const unsigned m = params_.m;
        for (unsigned r = 0; r < m; ++r) {
            u32 acc = 0;
            for (unsigned c = 0; c < m; ++c)
                if (coords[c])
                    acc = fq_add(acc, fq_mul(to_normal_g_[std::size_t(r) * m + c], coords[c]));
            e.w_[r] = acc;
        }
    }
    return e;
}

std::vector<u32> FieldCtx::poly_coords(const FieldElement& a) const {
    const unsigned m = params_.m;
    std::vector<u32> out(m, 0);
    if (binary_) {
        std::vector<u64> res(words_, 0);
        to_poly_b_.apply(a.w_.data(), res.data());
        for (unsigned i = 0; i < m; ++i) out[i] = bp_get(res, i) ? 1 : 0;
    } else {
        for (unsigned r = 0; r < m; ++r) {
            u32 acc = 0;
            for (unsigned c = 0; c < m; ++c)
                if (a.w_[c])
                    acc = fq_add(acc, fq_mul(to_poly_g_[std::size_t(r) * m + c],
                                             static_cast<u32>(a.w_[c])));
            out[r] = acc;
        }
    }
    return out;
}

bool FieldCtx::is_zero(const FieldElement& a) const {
    for (u64 w : a.w_)
        if (w) return false;
    return true;
}

FieldElement FieldCtx::random_element(std::mt19937_64& rng) const {
    FieldElement e = zero();
    if (binary_) {
        for (auto& w : e.w_) w = rng();
        unsigned rem = params_.m % kWordBits;
        if (rem) e.w_.back() &= (u64(1) << rem) - 1;
    } else {
        for (auto& w : e.w_) w = rng() % q_;
    }
    return e;
}

bool FieldCtx::integer_serializable() const noexcept {
    u64 v = 1;
    for (unsigned i = 0; i < params_.m; ++i) {
        if (v > (u64(1) << 62) / q_) return false;
        v *= q_;
    }
    return true;
}

std::uint64_t FieldCtx::to_integer(const FieldElement& a) const {
    if (!integer_serializable())
        throw std::domain_error("field too large for integer element serialization");
    u64 v = 0;
    for (unsigned i = params_.m; i-- > 0;) v = v * q_ + coord(a, i);
    return v;
}

FieldElement FieldCtx::from_integer(u64 v) const {
    if (!integer_serializable())
        throw std::domain_error("field too large for integer element serialization");
    std::vector<u32> c(params_.m, 0);
    for (unsigned i = 0; i < params_.m; ++i) {
        c[i] = static_cast<u32>(v % q_);
        v /= q_;
    }
    if (v != 0) throw std::invalid_argument("element integer out of range");
    return from_coords(c);
}

// ---- counted operations ----

FieldElement FieldCtx::add(const FieldElement& a, const FieldElement& b) const {
    if (a.w_.size() != words_ || b.w_.size() != words_)
        throw std::invalid_argument("element size mismatch");
    FieldElement r = a;
    if (binary_) {
        for (std::size_t i = 0; i < words_; ++i) r.w_[i] ^= b.w_[i];
    } else {
        for (std::size_t i = 0; i < words_; ++i)
            r.w_[i] = fq_add(static_cast<u32>(r.w_[i]), static_cast<u32>(b.w_[i]));
    }
    c_add_.fetch_add(1, std::memory_order_relaxed);
    return r;
}

FieldElement FieldCtx::neg(const FieldElement& a) const {
    if (binary_) return a;
    FieldElement r = a;
    for (std::size_t i = 0; i < words_; ++i) r.w_[i] = fq_neg(static_cast<u32>(r.w_[i]));
    return r;
}

FieldElement FieldCtx::sub(const FieldElement& a, const FieldElement& b) const {
    if (binary_) return add(a, b);
    if (a.w_.size() != words_ || b.w_.size() != words_)
        throw std::invalid_argument("element size mismatch");
    FieldElement r = a;
    for (std::size_t i = 0; i < words_; ++i)
        r.w_[i] = fq_sub(static_cast<u32>(r.w_[i]), static_cast<u32>(b.w_[i]));
    c_add_.fetch_add(1, std::memory_order_relaxed);
    return r;
}

FieldElement FieldCtx::mul(const FieldElement& a, const FieldElement& b) const {
    if (a.w_.size() != words_ || b.w_.size() != words_)
        throw std::invalid_argument("element size mismatch");
    const unsigned m = params_.m;
    FieldElement r = zero();
    if (binary_) {
        thread_local std::vector<u64> pa, pb, prod, low, highin, folded;
        pa.assign(words_, 0);
        pb.assign(words_, 0);
        to_poly_b_.apply(a.w_.data(), pa.data());
        to_poly_b_.apply(b.w_.data(), pb.data());
        bp_mul_raw(pa.data(), words_, pb.data(), words_, prod);
        prod.resize(std::max(prod.size(), word_count(2 * std::size_t(m))), 0);
        low.assign(words_, 0);
        bp_blit(prod, 0, low, 0, m);
        if (m >= 2) {
            highin.assign(word_count(m - 1), 0);
            bp_blit(prod, m, highin, 0, m - 1);
            folded.assign(words_, 0);
            fold_b_.apply(highin.data(), folded.data());
            for (std::size_t i = 0; i < words_; ++i) low[i] ^= folded[i];
        }
        to_normal_b_.apply(low.data(), r.w_.data());
    } else {
        auto pc = poly_mulmod_g(poly_coords(a), poly_coords(b));
        r = from_poly_coords(pc);
    }
    c_mul_.fetch_add(1, std::memory_order_relaxed);
    return r;
}

FieldElement FieldCtx::inv(const FieldElement& a) const {
    if (is_zero(a)) throw std::domain_error("inverse of zero");
    const unsigned m = params_.m;
    FieldElement r = zero();
    if (binary_) {
        std::vector<u64> pa(words_, 0);
        to_poly_b_.apply(a.w_.data(), pa.data());
        std::vector<u64> f = ext_mod_bits_;
        f.resize(word_count(m + 1), 0);
        bp_set(f, m);
        std::vector<u64> g = pa;
        bp_trim(f);
        bp_trim(g);
        std::vector<u64> uf, ug{1};
        long df = bp_deg(f), dg = bp_deg(g);
        while (dg > 0) {
            if (df < dg) {
                std::swap(f, g);
                std::swap(uf, ug);
                std::swap(df, dg);
                continue;
            }
            std::size_t sh = static_cast<std::size_t>(df - dg);
            bp_xor_shifted(f, g, sh);
            bp_xor_shifted(uf, ug, sh);
            bp_trim(f);
            df = bp_deg(f);
        }
        if (dg < 0) throw std::logic_error("inverse does not exist");
        // g == 1 here; reduce the cofactor modulo the field polynomial
        std::vector<u64> fm = ext_mod_bits_;
        fm.resize(word_count(m + 1), 0);
        bp_set(fm, m);
        long du = bp_deg(ug);
        while (du >= static_cast<long>(m)) {
            bp_xor_shifted(ug, fm, static_cast<std::size_t>(du - m));
            bp_trim(ug);
            du = bp_deg(ug);
        }
        ug.resize(words_, 0);
        to_normal_b_.apply(ug.data(), r.w_.data());
    } else {
        auto deg = [](const std::vector<u32>& v) {
            for (std::size_t i = v.size(); i-- > 0;)
                if (v[i]) return static_cast<long>(i);
            return -1L;
        };
        std::vector<u32> f(params_.ext_modulus.begin(), params_.ext_modulus.end());
        std::vector<u32> g = poly_coords(a);
        std::vector<u32> uf, ug{1};
        long df = deg(f), dg = deg(g);
        auto xor_scaled = [&](std::vector<u32>& x, const std::vector<u32>& y, u32 s,
                              std::size_t sh) {
            if (x.size() < y.size() + sh) x.resize(y.size() + sh, 0);
            for (std::size_t j = 0; j < y.size(); ++j)
                x[j + sh] = fq_sub(x[j + sh], fq_mul(s, y[j]));
        };
        while (dg > 0) {
            if (df < dg) {
                std::swap(f, g);
                std::swap(uf, ug);
                std::swap(df, dg);
                continue;
            }
            u32 s = fq_mul(f[df], fq_inv(g[dg]));
            std::size_t sh = static_cast<std::size_t>(df - dg);
            xor_scaled(f, g, s, sh);
            xor_scaled(uf, ug, s, sh);
            while (!f.empty() && f.back() == 0) f.pop_back();
            df = deg(f);
        }
        if (dg < 0) throw std::logic_error("inverse does not exist");
        u32 s = fq_inv(g[dg]);
        // reduce cofactor modulo the field polynomial
        long du = deg(ug);
        while (du >= static_cast<long>(m)) {
            u32 c = ug[du];
            std::size_t sh = static_cast<std::size_t>(du - m);
            for (unsigned j = 0; j <= m; ++j)
                ug[sh + j] = fq_sub(ug[sh + j], fq_mul(c, params_.ext_modulus[j]));
            du = deg(ug);
        }
        std::vector<u32> res(m, 0);
        for (unsigned i = 0; i < m && i < ug.size(); ++i) res[i] = fq_mul(ug[i], s);
        r = from_poly_coords(res);
    }
    c_inv_.fetch_add(1, std::memory_order_relaxed);
    return r;
}

FieldElement FieldCtx::frob(const FieldElement& a, long i) const {
    const unsigned m = params_.m;
    long rot = i % static_cast<long>(m);
    if (rot < 0) rot += m;
    FieldElement out = zero();
    if (rot == 0) {
        out = a;
    } else if (binary_) {
        std::vector<u64> tmp(words_, 0);
        bp_blit(a.w_, 0, tmp, static_cast<std::size_t>(rot), m - static_cast<std::size_t>(rot));
        bp_blit(a.w_, m - static_cast<std::size_t>(rot), tmp, 0, static_cast<std::size_t>(rot));
        out.w_ = std::move(tmp);
    } else {
        for (unsigned t = 0; t < m; ++t) out.w_[(t + rot) % m] = a.w_[t];
    }
    c_frob_.fetch_add(1, std::memory_order_relaxed);
    return out;
}

FieldElement FieldCtx::scale_fq(u32 lambda, const FieldElement& a) const {
    if (lambda >= q_) throw std::invalid_argument("scalar out of range");
    if (lambda == 0) return zero();
    if (lambda == 1) return a;
    FieldElement r = a;  // only reachable for q > 2
    for (std::size_t i = 0; i < words_; ++i) r.w_[i] = fq_mul(static_cast<u32>(r.w_[i]), lambda);
    return r;
}

OpCounts FieldCtx::counts() const noexcept {
    return {c_mul_.load(std::memory_order_relaxed), c_inv_.load(std::memory_order_relaxed),
            c_add_.load(std::memory_order_relaxed), c_frob_.load(std::memory_order_relaxed)};
}

void FieldCtx::reset_counts() const noexcept {
    c_mul_.store(0, std::memory_order_relaxed);
    c_inv_.store(0, std::memory_order_relaxed);
    c_add_.store(0, std::memory_order_relaxed);
    c_frob_.store(0, std::memory_order_relaxed);
}

// ---------------------------------------------------------------------------
// F_q linear algebra
// ---------------------------------------------------------------------------

std::pair<FqMatrix, std::vector<std::size_t>> fq_rref(const FieldCtx& ctx, const FqMatrix& M) {
    if (M.a.size() != M.rows * M.cols) throw std::invalid_argument("malformed matrix");
    FqMatrix R = M;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < R.cols && r < R.rows; ++c) {
        std::size_t piv = r;
        while (piv < R.rows && R.at(piv, c) == 0) ++piv;
        if (piv == R.rows) continue;
        for (std::size_t j = 0; j < R.cols; ++j) std::swap(R.at(r, j), R.at(piv, j));
        u32 s = ctx.fq_inv(R.at(r, c));
        for (std::size_t j = 0; j < R.cols; ++j) R.at(r, j) = ctx.fq_mul(R.at(r, j), s);
        for (std::size_t i = 0; i < R.rows; ++i) {
            if (i == r || R.at(i, c) == 0) continue;
            u32 f = R.at(i, c);
            for (std::size_t j = 0; j < R.cols; ++j)
                R.at(i, j) = ctx.fq_sub(R.at(i, j), ctx.fq_mul(f, R.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {R, pivots};
}

std::size_t fq_rank(const FieldCtx& ctx, const FqMatrix& M) { return fq_rref(ctx, M).second.size(); }

bool independent_over_fq(const FieldCtx& ctx, const std::vector<FieldElement>& elems) {
    if (elems.empty()) return true;
    if (elems.size() > ctx.m()) return false;
    FqMatrix M(ctx.m(), elems.size());
    for (std::size_t j = 0; j < elems.size(); ++j)
        for (unsigned i = 0; i < ctx.m(); ++i) M.at(i, j) = ctx.coord(elems[j], i);
    return fq_rank(ctx, M) == elems.size();
}

}  // namespace gabidulin
