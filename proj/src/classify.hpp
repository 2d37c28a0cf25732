/*------------------------------------------------------------------------
Segment classification shared by the tree builder and latency evaluator

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

#include "fastssc/tree.hpp"

#include <cstdint>

namespace fastssc::detail {

constexpr std::uint32_t kind_bit(NodeKind k) { return 1u << static_cast<unsigned>(k); }

/// Pattern with bit i holding mask position i; written index 0 first below.
template <std::size_t L>
constexpr std::uint32_t pattern(const char (&s)[L])
{
    std::uint32_t v = 0;
    std::size_t i = 0;
    for (char c : s) {
        if (c == '0' || c == '1') {
            if (c == '1')
                v |= 1u << i;
            ++i;
        }
    }
    return v;
}

inline constexpr std::uint32_t pattern_zero_repspc = pattern("0000 0000 0001 0111");
inline constexpr std::uint32_t pattern_rep1 = pattern("0001 1111");
inline constexpr std::uint32_t pattern_zero_01 = pattern("0000 0011");
inline constexpr std::uint32_t pattern_repspc = pattern("0001 0111");
inline constexpr std::uint32_t pattern_ml01 = pattern("0011");

/// `View` provides count(off, len) (information bits in a segment) and
/// bit(i). Precedence: 0RepSPC > Rep1 > 001 > 0SPC > RepSPC > Rep > SPC >
/// 01; rate-0 and rate-1 never overlap any of them.
template <class View>
NodeKind classify(const View &view, std::uint32_t off, std::uint32_t len, const TreeConstraints &c)
{
    const std::uint32_t count = view.count(off, len);
    if (count == 0)
        return NodeKind::rate0;
    if (count == len)
        return NodeKind::rate1;

    auto bits16 = [&]() {
        std::uint32_t v = 0;
        for (std::uint32_t i = 0; i < len; ++i)
            v |= static_cast<std::uint32_t>(view.bit(off + i)) << i;
        return v;
    };

    if (len == 16 && count == 4 && c.allows(NodeKind::zero_repspc) && bits16() == pattern_zero_repspc)
        return NodeKind::zero_repspc;
    if (len == 8 && count == 5 && c.allows(NodeKind::rep1) && bits16() == pattern_rep1)
        return NodeKind::rep1;
    if (len == 8 && count == 2 && c.allows(NodeKind::zero_01) && bits16() == pattern_zero_01)
        return NodeKind::zero_01;
    if (len >= 8 && count == len / 2 - 1 && c.allows(NodeKind::zero_spc) &&
        view.count(off, len / 2) == 0 && !view.bit(off + len / 2))
        return NodeKind::zero_spc;
    if (len == 8 && count == 4 && c.allows(NodeKind::repspc) && bits16() == pattern_repspc)
        return NodeKind::repspc;
    if (count == 1 && len <= c.rep_max && c.allows(NodeKind::rep) && view.bit(off + len - 1))
        return NodeKind::rep;
    if (len >= 4 && count == len - 1 && c.allows(NodeKind::spc) && !view.bit(off))
        return NodeKind::spc;
    if (len == 4 && count == 2 && c.allows(NodeKind::ml01) && bits16() == pattern_ml01)
        return NodeKind::ml01;
    return NodeKind::rate_r;
}

/// Internal-node label from the classified children.
inline NodeKind internal_kind(NodeKind left, NodeKind right)
{
    if (left == NodeKind::rate0)
        return NodeKind::zero_r;
    if (right == NodeKind::rate1)
        return NodeKind::r_one;
    if (right == NodeKind::spc)
        return NodeKind::r_spc;
    return NodeKind::rate_r;
}

/// Prefix-sum view over a plain mask.
class MaskView {
public:
    explicit MaskView(std::span<const Bit> mask) : mask_(mask), prefix_(mask.size() + 1, 0)
    {
        for (std::size_t i = 0; i < mask.size(); ++i)
            prefix_[i + 1] = prefix_[i] + mask[i];
    }
    std::uint32_t count(std::uint32_t off, std::uint32_t len) const
    {
        return prefix_[off + len] - prefix_[off];
    }
    Bit bit(std::uint32_t i) const { return mask_[i]; }

private:
    std::span<const Bit> mask_;
    std::vector<std::uint32_t> prefix_;
};

} // namespace fastssc::detail
