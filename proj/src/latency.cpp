/*------------------------------------------------------------------------
Cycle cost model and latency accounting

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
#include "fastssc/latency.hpp"

#include "classify.hpp"

#include <json.hpp>

#include <bit>
#include <stdexcept>
#include <vector>

namespace fastssc {

void CostModel::validate() const
{
    if (!is_power_of_two(p_lanes))
        throw std::invalid_argument("P must be a power of two");
}

std::uint64_t CostModel::cycles(Opcode op, std::uint32_t nv) const
{
    switch (op) {
    case Opcode::f:
    case Opcode::g:
    case Opcode::g_0r:
    case Opcode::combine:
    case Opcode::combine_0r:
    case Opcode::rate1_sign:
        return passes(nv);
    case Opcode::spc:
    case Opcode::zero_spc:
        return passes(nv) + spc_latency;
    case Opcode::rep:
    case Opcode::repspc:
    case Opcode::rep1:
    case Opcode::ml01:
    case Opcode::zero_01:
    case Opcode::zero_repspc:
        return 1;
    }
    return 0;
}

std::string LatencyReport::to_json() const
{
    nlohmann::ordered_json j;
    j["cycles"] = cycles;
    j["info_bits_per_cc"] = info_bits_per_cc;
    nlohmann::ordered_json b = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < opcode_count; ++i)
        if (breakdown[i] != 0)
            b[std::string(to_string(static_cast<Opcode>(i)))] = breakdown[i];
    j["breakdown"] = b;
    return j.dump();
}

namespace {

bool feeds_leaf(const Instruction &parent, const Instruction &leaf, std::uint32_t leaf_offset)
{
    return is_leaf_opcode(leaf.op) && 2 * leaf.nv == parent.nv && leaf.offset == leaf_offset;
}

/// Marks instructions absorbed into the pass of an adjacent leaf decoder.
std::vector<bool> fused_instructions(const Program &program, const CostModel &cost)
{
    const auto &ins = program.instructions;
    std::vector<bool> fused(ins.size(), false);
    if (!cost.fuse_leaf_edges)
        return fused;
    for (std::size_t i = 0; i + 1 < ins.size(); ++i) {
        const Instruction &p = ins[i];
        if (cost.passes(p.nv) != 1)
            continue;
        if (p.op == Opcode::f && feeds_leaf(p, ins[i + 1], p.offset)) {
            fused[i] = true;
        } else if ((p.op == Opcode::g || p.op == Opcode::g_0r) && i + 2 < ins.size() &&
                   feeds_leaf(p, ins[i + 1], p.offset + p.nv / 2)) {
            const Instruction &c = ins[i + 2];
            const Opcode want = p.op == Opcode::g ? Opcode::combine : Opcode::combine_0r;
            if (c.op == want && c.nv == p.nv && c.offset == p.offset)
                fused[i] = fused[i + 2] = true;
        }
    }
    return fused;
}

} // namespace

LatencyReport latency(const Program &program, const CostModel &cost)
{
    cost.validate();
    LatencyReport r;
    const std::vector<bool> fused = fused_instructions(program, cost);
    for (std::size_t i = 0; i < program.instructions.size(); ++i) {
        if (fused[i])
            continue;
        const Instruction &ins = program.instructions[i];
        const auto c = cost.cycles(ins);
        r.cycles += c;
        r.breakdown[static_cast<std::size_t>(ins.op)] += c;
    }
    r.info_bits_per_cc =
        r.cycles ? static_cast<double>(program.k_info) / static_cast<double>(r.cycles) : 0.0;
    return r;
}

namespace {

std::uint64_t leaf_cycles(NodeKind kind, std::uint32_t len, const CostModel &cost)
{
    switch (kind) {
    case NodeKind::rate0: return 0;
    case NodeKind::rate1: return cost.cycles(Opcode::rate1_sign, len);
    case NodeKind::rep: return cost.cycles(Opcode::rep, len);
    case NodeKind::spc: return cost.cycles(Opcode::spc, len);
    case NodeKind::repspc: return cost.cycles(Opcode::repspc, len);
    case NodeKind::rep1: return cost.cycles(Opcode::rep1, len);
    case NodeKind::zero_spc: return cost.cycles(Opcode::zero_spc, len);
    case NodeKind::zero_repspc: return cost.cycles(Opcode::zero_repspc, len);
    case NodeKind::ml01: return cost.cycles(Opcode::ml01, len);
    case NodeKind::zero_01: return cost.cycles(Opcode::zero_01, len);
    default: break;
    }
    throw std::logic_error("not a leaf kind");
}

/// Cycles of an internal node given its children; mirrors compile().
std::uint64_t internal_cycles(NodeKind left, NodeKind right, std::uint32_t len,
                              std::uint64_t left_cost, std::uint64_t right_cost,
                              const CostModel &cost)
{
    const std::uint64_t pass = cost.passes(len);
    const bool fuse = cost.fuse_leaf_edges && pass == 1;
    const bool fl = fuse && left != NodeKind::rate0 && is_leaf(left);
    const bool fr = fuse && right != NodeKind::rate0 && is_leaf(right);
    if (left == NodeKind::rate0)
        return (fr ? 0 : 2 * pass) + right_cost;
    if (right == NodeKind::rate0)
        return (fl ? 0 : pass) + left_cost;
    return (fl ? 0 : pass) + left_cost + (fr ? 0 : 2 * pass) + right_cost;
}

} // namespace

LatencyEvaluator::LatencyEvaluator(const PolarCode &base, const TreeConstraints &constraints,
                                   const CostModel &cost)
    : n_(base.n_bits()), mask_(base.info_mask()), constraints_(constraints), cost_model_(cost),
      count_(2 * n_), kind_(2 * n_), cost_(2 * n_)
{
    cost.validate();
    detail::MaskView view(mask_);
    // bottom-up over the heap: node id with segment length len at offset off
    for (std::size_t id = 2 * n_ - 1; id >= 1; --id) {
        const auto depth = static_cast<unsigned>(std::bit_width(id) - 1);
        const auto len = static_cast<std::uint32_t>(n_ >> depth);
        const auto off = static_cast<std::uint32_t>((id - (std::size_t{1} << depth)) * len);
        count_[id] = view.count(off, len);
        const NodeKind k = detail::classify(view, off, len, constraints_);
        if (k != NodeKind::rate_r) {
            kind_[id] = k;
            cost_[id] = leaf_cycles(k, len, cost_model_);
        } else {
            const NodeKind kl = kind_[2 * id], kr = kind_[2 * id + 1];
            kind_[id] = detail::internal_kind(kl, kr);
            cost_[id] = internal_cycles(kl, kr, len, cost_[2 * id], cost_[2 * id + 1], cost_model_);
        }
    }
}

struct FlipView {
    const LatencyEvaluator &ev;
    std::span<const std::uint32_t> flips;

    std::uint32_t count(std::uint32_t off, std::uint32_t len) const
    {
        std::uint32_t c = segment_count(off, len);
        for (std::uint32_t f : flips)
            if (f >= off && f < off + len)
                c = ev.mask_[f] ? c - 1 : c + 1;
        return c;
    }
    Bit bit(std::uint32_t i) const
    {
        Bit b = ev.mask_[i];
        for (std::uint32_t f : flips)
            if (f == i)
                b ^= 1;
        return b;
    }
    std::uint32_t segment_count(std::uint32_t off, std::uint32_t len) const
    {
        const std::size_t id = ev.n_ / len + off / len;
        return ev.count_[id];
    }
};

namespace {

bool touches(std::span<const std::uint32_t> flips, std::uint32_t off, std::uint32_t len)
{
    for (std::uint32_t f : flips)
        if (f >= off && f < off + len)
            return true;
    return false;
}

} // namespace

std::uint64_t LatencyEvaluator::cycles_with_flips(std::span<const std::uint32_t> flips) const
{
    for (std::uint32_t f : flips)
        if (f >= n_)
            throw std::out_of_range("flip index outside the code");
    FlipView view{*this, flips};

    struct Result {
        NodeKind kind;
        std::uint64_t cost;
    };
    auto eval = [&](auto &&self, std::size_t id, std::uint32_t off, std::uint32_t len) -> Result {
        if (!touches(flips, off, len))
            return {kind_[id], cost_[id]};
        const NodeKind k = detail::classify(view, off, len, constraints_);
        if (k != NodeKind::rate_r)
            return {k, leaf_cycles(k, len, cost_model_)};
        const Result l = self(self, 2 * id, off, len / 2);
        const Result r = self(self, 2 * id + 1, off + len / 2, len / 2);
        return {detail::internal_kind(l.kind, r.kind),
                internal_cycles(l.kind, r.kind, len, l.cost, r.cost, cost_model_)};
    };
    return eval(eval, 1, 0, static_cast<std::uint32_t>(n_)).cost;
}

std::uint64_t tree_cycles(const PolarCode &code, const TreeConstraints &constraints,
                          const CostModel &cost)
{
    return LatencyEvaluator(code, constraints, cost).base_cycles();
}

} // namespace fastssc
