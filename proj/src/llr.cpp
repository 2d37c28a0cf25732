/*------------------------------------------------------------------------
LLR arithmetic: min-sum kernels and saturating fixed-point quantization

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
#include "fastssc/llr.hpp"

#include <charconv>
#include <stdexcept>

namespace fastssc {

void QuantSpec::validate() const
{
    if (q_frac < 0 || !(q_frac < q_channel) || !(q_channel <= q_internal) || q_internal > 30)
        throw std::invalid_argument("quantization " + to_string() +
                                    " violates q_frac < q_channel <= q_internal");
}

double QuantSpec::limit(QuantDomain d) const
{
    const int q = d == QuantDomain::channel ? q_channel : q_internal;
    return std::ldexp(static_cast<double>((1 << (q - 1)) - 1), -q_frac);
}

std::string QuantSpec::to_string() const
{
    return std::to_string(q_internal) + "." + std::to_string(q_channel) + "." +
           std::to_string(q_frac);
}

Llr quantize(double v, const QuantSpec &spec, QuantDomain domain)
{
    const double scaled = std::round(std::ldexp(v, spec.q_frac));
    const double lim = spec.limit(domain);
    return std::clamp(std::ldexp(scaled, -spec.q_frac), -lim, lim);
}

LlrArithmetic LlrArithmetic::fixed(const QuantSpec &spec)
{
    spec.validate();
    LlrArithmetic a;
    a.spec_ = spec;
    a.limit_ = spec.limit(QuantDomain::internal);
    return a;
}

LlrArithmetic LlrArithmetic::parse(std::string_view mode)
{
    if (mode == "float")
        return floating();
    QuantSpec spec;
    int *fields[3] = {&spec.q_internal, &spec.q_channel, &spec.q_frac};
    const char *p = mode.data();
    const char *end = mode.data() + mode.size();
    for (int i = 0; i < 3; ++i) {
        auto [next, ec] = std::from_chars(p, end, *fields[i]);
        if (ec != std::errc())
            throw std::invalid_argument("malformed quantization '" + std::string(mode) + "'");
        p = next;
        if (i < 2) {
            if (p == end || *p != '.')
                throw std::invalid_argument("malformed quantization '" + std::string(mode) + "'");
            ++p;
        }
    }
    if (p != end)
        throw std::invalid_argument("malformed quantization '" + std::string(mode) + "'");
    return fixed(spec);
}

BitVec combine(std::span<const Bit> beta_l, std::span<const Bit> beta_r)
{
    if (beta_l.size() != beta_r.size())
        throw std::invalid_argument("combine: child lengths differ");
    const std::size_t h = beta_l.size();
    BitVec out(2 * h);
    for (std::size_t i = 0; i < h; ++i) {
        out[i] = beta_l[i] ^ beta_r[i];
        out[h + i] = beta_r[i];
    }
    return out;
}

} // namespace fastssc
