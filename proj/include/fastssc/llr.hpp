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
#pragma once

#include "fastssc/polar_code.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace fastssc {

/// Log-likelihood ratio, positive favours bit 0. Fixed-point values are
/// stored as doubles holding exact multiples of 2^-q_frac.
using Llr = double;

enum class QuantDomain { channel, internal };

/// Qi.Qc.Qf: total internal bits, total channel bits, fractional bits.
struct QuantSpec {
    int q_internal = 6;
    int q_channel = 5;
    int q_frac = 1;

    void validate() const;
    double step() const { return std::ldexp(1.0, -q_frac); }
    /// Largest representable magnitude, (2^(Q-1) - 1) * 2^-Qf.
    double limit(QuantDomain d) const;
    std::string to_string() const;

    friend bool operator==(const QuantSpec &, const QuantSpec &) = default;
};

/// Round half away from zero to the grid, then saturate symmetrically.
Llr quantize(double v, const QuantSpec &spec, QuantDomain domain);

/// Floating point or saturating fixed point, selected at run time.
class LlrArithmetic {
public:
    LlrArithmetic() = default;
    static LlrArithmetic floating() { return LlrArithmetic(); }
    static LlrArithmetic fixed(const QuantSpec &spec);
    /// "float", "6.5.1" or any "Qi.Qc.Qf".
    static LlrArithmetic parse(std::string_view mode);

    bool is_fixed() const { return spec_.has_value(); }
    const std::optional<QuantSpec> &spec() const { return spec_; }
    std::string name() const { return spec_ ? spec_->to_string() : "float"; }

    Llr saturate(Llr v) const { return spec_ ? std::clamp(v, -limit_, limit_) : v; }
    Llr add(Llr a, Llr b) const { return saturate(a + b); }
    Llr sub(Llr a, Llr b) const { return saturate(a - b); }
    /// Channel-side conversion; identity in floating mode.
    Llr from_channel(double v) const
    {
        return spec_ ? quantize(v, *spec_, QuantDomain::channel) : v;
    }

private:
    std::optional<QuantSpec> spec_;
    double limit_ = 0.0;
};

inline Bit hard_decision(Llr v) { return v < 0 ? Bit{1} : Bit{0}; }

/// sgn(a) sgn(b) min(|a|, |b|)
inline Llr f_op(Llr a, Llr b)
{
    const Llr m = std::min(std::abs(a), std::abs(b));
    if (m == 0)
        return 0;
    return ((a < 0) != (b < 0)) ? -m : m;
}

/// b + a when beta == 0, b - a otherwise.
inline Llr g_op(Llr a, Llr b, Bit beta, const LlrArithmetic &arith)
{
    return beta ? arith.sub(b, a) : arith.add(b, a);
}

/// Lower half beta_l ^ beta_r, upper half beta_r.
BitVec combine(std::span<const Bit> beta_l, std::span<const Bit> beta_r);

} // namespace fastssc
