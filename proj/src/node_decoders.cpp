/*------------------------------------------------------------------------
Constituent-code decoders

Copyright 2026 fastssc contributors

Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
--------------------------------------------------------------------------*/
#include "fastssc/node_decoders.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace fastssc {

namespace {

void require_length(std::span<const Llr> in, std::span<Bit> out, std::size_t n, const char *name)
{
    if (in.size() != n || out.size() != n)
        throw std::invalid_argument(std::string(name) + " node requires length " + std::to_string(n));
}

void require_same(std::span<const Llr> in, std::span<Bit> out, const char *name)
{
    if (in.size() != out.size() || !is_power_of_two(in.size()))
        throw std::invalid_argument(std::string(name) + ": bad node length");
}

std::vector<Llr> &scratch()
{
    thread_local std::vector<Llr> buf;
    return buf;
}

/// Wagner decoding over values produced on the fly by get(i).
template <class Get>
void spc_core(std::size_t n, Get get, std::span<Bit> out)
{
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    Bit parity = 0;
    double min_mag = 0;
    std::size_t first_one = none, last_any = none;
    for (std::size_t i = 0; i < n; ++i) {
        const Llr v = get(i);
        const Bit h = hard_decision(v);
        out[i] = h;
        parity ^= h;
        const double mag = std::abs(v);
        if (last_any == none || mag < min_mag) {
            min_mag = mag;
            first_one = h ? i : none;
            last_any = i;
        } else if (mag == min_mag) {
            if (h && first_one == none)
                first_one = i;
            last_any = i;
        }
    }
    if (parity)
        out[first_one != none ? first_one : last_any] ^= 1;
}

void sc_rate1(std::span<const Llr> a, std::span<Bit> out, const LlrArithmetic &arith)
{
    const std::size_t n = a.size();
    if (n == 1) {
        out[0] = hard_decision(a[0]);
        return;
    }
    const std::size_t h = n / 2;
    std::vector<Llr> child(h);
    for (std::size_t i = 0; i < h; ++i)
        child[i] = f_op(a[i], a[i + h]);
    sc_rate1(child, out.first(h), arith);
    for (std::size_t i = 0; i < h; ++i)
        child[i] = g_op(a[i], a[i + h], out[i], arith);
    sc_rate1(child, out.subspan(h), arith);
    for (std::size_t i = 0; i < h; ++i)
        out[i] ^= out[h + i];
}

Bit rep_bit(std::span<const Llr> in, const LlrArithmetic &arith)
{
    const std::size_t n = in.size();
    if (n == 1)
        return hard_decision(in[0]);
    auto &buf = scratch();
    buf.resize(n / 2);
    for (std::size_t i = 0; i < n / 2; ++i)
        buf[i] = arith.add(in[i + n / 2], in[i]);
    for (std::size_t h = n / 4; h >= 1; h /= 2)
        for (std::size_t i = 0; i < h; ++i)
            buf[i] = arith.add(buf[i + h], buf[i]);
    return hard_decision(buf[0]);
}

void ml01_core(Llr s0, Llr s1, std::span<Bit> out)
{
    // lexicographic order: 0000, 0101, 1010, 1111; strict > keeps the first
    static constexpr std::array<std::array<Bit, 2>, 4> words = {{{0, 0}, {0, 1}, {1, 0}, {1, 1}}};
    std::size_t best = 0;
    double best_metric = 0;
    for (std::size_t w = 0; w < words.size(); ++w) {
        const double m = (words[w][0] ? -s0 : s0) + (words[w][1] ? -s1 : s1);
        if (w == 0 || m > best_metric) {
            best = w;
            best_metric = m;
        }
    }
    out[0] = out[2] = words[best][0];
    out[1] = out[3] = words[best][1];
}

void repspc_core(std::span<const Llr> in, std::span<Bit> out, const LlrArithmetic &arith)
{
    std::array<Llr, 4> l;
    for (std::size_t i = 0; i < 4; ++i)
        l[i] = f_op(in[i], in[i + 4]);
    const Bit r = rep_bit(l, arith);
    spc_core(4, [&](std::size_t i) { return g_op(in[i], in[i + 4], r, arith); }, out.subspan(4));
    for (std::size_t i = 0; i < 4; ++i)
        out[i] = out[i + 4] ^ r;
}

} // namespace

void decode_rep(std::span<const Llr> in, std::span<Bit> out, const LlrArithmetic &arith)
{
    require_same(in, out, "Rep");
    const Bit b = rep_bit(in, arith);
    std::fill(out.begin(), out.end(), b);
}

void decode_spc(std::span<const Llr> in, std::span<Bit> out)
{
    if (in.size() != out.size() || in.size() < 2)
        throw std::invalid_argument("SPC: bad node length");
    spc_core(in.size(), [&](std::size_t i) { return in[i]; }, out);
}

void decode_rate1(std::span<const Llr> in, std::span<Bit> out, const LlrArithmetic &arith)
{
    require_same(in, out, "rate-1");
    bool tie = false;
    for (std::size_t i = 0; i < in.size(); ++i) {
        out[i] = hard_decision(in[i]);
        tie |= in[i] == 0;
    }
    if (tie)
        sc_rate1(in, out, arith);
}

void decode_ml01(std::span<const Llr> in, std::span<Bit> out, const LlrArithmetic &arith)
{
    require_length(in, out, 4, "01");
    ml01_core(arith.add(in[2], in[0]), arith.add(in[3], in[1]), out);
}

void decode_repspc(std::span<const Llr> in, std::span<Bit> out, const LlrArithmetic &arith)
{
    require_length(in, out, 8, "RepSPC");
    repspc_core(in, out, arith);
}

void decode_rep1(std::span<const Llr> in, std::span<Bit> out, const LlrArithmetic &arith)
{
    require_length(in, out, 8, "Rep1");
    std::array<Llr, 4> l, r;
    for (std::size_t i = 0; i < 4; ++i)
        l[i] = f_op(in[i], in[i + 4]);
    const Bit b = rep_bit(l, arith);
    for (std::size_t i = 0; i < 4; ++i)
        r[i] = g_op(in[i], in[i + 4], b, arith);
    decode_rate1(r, out.subspan(4), arith);
    for (std::size_t i = 0; i < 4; ++i)
        out[i] = out[i + 4] ^ b;
}

void decode_zero_spc(std::span<const Llr> in, std::span<Bit> out, const LlrArithmetic &arith)
{
    if (in.size() != out.size() || in.size() < 4 || !is_power_of_two(in.size()))
        throw std::invalid_argument("0SPC: bad node length");
    const std::size_t h = in.size() / 2;
    spc_core(h, [&](std::size_t i) { return arith.add(in[i + h], in[i]); }, out.subspan(h));
    std::copy(out.begin() + static_cast<std::ptrdiff_t>(h), out.end(), out.begin());
}

void decode_zero_01(std::span<const Llr> in, std::span<Bit> out, const LlrArithmetic &arith)
{
    require_length(in, out, 8, "001");
    ml01_core(arith.add(arith.add(in[6], in[2]), arith.add(in[4], in[0])),
              arith.add(arith.add(in[7], in[3]), arith.add(in[5], in[1])), out.subspan(4));
    std::copy(out.begin() + 4, out.end(), out.begin());
}

void decode_zero_repspc(std::span<const Llr> in, std::span<Bit> out, const LlrArithmetic &arith)
{
    require_length(in, out, 16, "0RepSPC");
    std::array<Llr, 8> r;
    for (std::size_t i = 0; i < 8; ++i)
        r[i] = arith.add(in[i + 8], in[i]);
    repspc_core(r, out.subspan(8), arith);
    std::copy(out.begin() + 8, out.end(), out.begin());
}

#define FASTSSC_ALLOCATING(name)                                                                   \
    BitVec name(std::span<const Llr> in, const LlrArithmetic &arith)                              \
    {                                                                                              \
        BitVec out(in.size());                                                                     \
        name(in, out, arith);                                                                      \
        return out;                                                                                \
    }

FASTSSC_ALLOCATING(decode_rep)
FASTSSC_ALLOCATING(decode_rate1)
FASTSSC_ALLOCATING(decode_ml01)
FASTSSC_ALLOCATING(decode_repspc)
FASTSSC_ALLOCATING(decode_rep1)
FASTSSC_ALLOCATING(decode_zero_spc)
FASTSSC_ALLOCATING(decode_zero_01)
FASTSSC_ALLOCATING(decode_zero_repspc)

#undef FASTSSC_ALLOCATING

BitVec decode_spc(std::span<const Llr> in)
{
    BitVec out(in.size());
    decode_spc(in, out);
    return out;
}

} // namespace fastssc
