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
#pragma once

#include "fastssc/program.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fastssc {

/// Per-instruction cycle costs of the processing unit. Kernels accept
/// p_lanes inputs per cycle; F/G/Combine and the rate-1 pass take
/// ceil(nv/P) cycles, the pipelined SPC family ceil(nv/P) + spc_latency,
/// all other leaf decoders a single cycle.
///
/// With fuse_leaf_edges, a leaf decoder reads the output of its parent's
/// F, G or G_0R unit directly and a right-hand leaf writes back through the
/// Combine unit in the same pass, so those parent operations cost nothing
/// when the parent fits in one pass (Nv <= P).
struct CostModel {
    unsigned p_lanes = 512;
    unsigned spc_latency = 4;
    bool fuse_leaf_edges = true;

    void validate() const;
    std::uint64_t passes(std::uint32_t nv) const { return (nv + p_lanes - 1) / p_lanes; }
    std::uint64_t cycles(Opcode op, std::uint32_t nv) const;
    std::uint64_t cycles(const Instruction &ins) const { return cycles(ins.op, ins.nv); }
};

struct LatencyReport {
    std::uint64_t cycles = 0;
    double info_bits_per_cc = 0.0;
    /// Cycles spent per opcode, indexed by Opcode.
    std::array<std::uint64_t, opcode_count> breakdown{};

    /// {"cycles": ..., "info_bits_per_cc": ..., "breakdown": {"F": ..., ...}};
    /// opcodes that never occur are omitted from the breakdown.
    std::string to_json() const;
};

LatencyReport latency(const Program &program, const CostModel &cost);

/// Cycle count of the tree a mask compiles to, without materialising the
/// tree or the program. Costs of every aligned segment of the base mask are
/// cached, so evaluating a handful of flipped positions only revisits the
/// segments containing them.
class LatencyEvaluator {
public:
    LatencyEvaluator(const PolarCode &base, const TreeConstraints &constraints,
                     const CostModel &cost);

    std::uint64_t base_cycles() const { return cost_[1]; }
    /// Latency of the base mask with every listed position toggled. Indices
    /// must be distinct.
    std::uint64_t cycles_with_flips(std::span<const std::uint32_t> flips) const;

private:
    friend struct FlipView;
    std::size_t n_ = 0;
    BitVec mask_;
    TreeConstraints constraints_;
    CostModel cost_model_;
    // heap layout over aligned segments: node 1 is [0, N), children 2i, 2i+1
    std::vector<std::uint32_t> count_;
    std::vector<NodeKind> kind_;
    std::vector<std::uint64_t> cost_;
};

std::uint64_t tree_cycles(const PolarCode &code, const TreeConstraints &constraints,
                          const CostModel &cost);

} // namespace fastssc
