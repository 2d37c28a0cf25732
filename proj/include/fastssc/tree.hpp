/*------------------------------------------------------------------------
Decoder tree: node kinds, constituent-code classification, tree build

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

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace fastssc {

/// Constituent-code kinds. Leaf kinds are decoded in one shot; rate_r,
/// zero_r, r_one and r_spc are internal nodes (the last three name the
/// edge fusions a parent schedules around a rate-0 left child, a rate-1
/// right child or an SPC right child).
enum class NodeKind : std::uint8_t {
    rate0,
    rate1,
    rep,
    spc,
    repspc,
    rep1,
    zero_spc,
    zero_repspc,
    ml01,
    zero_01,
    rate_r,
    zero_r,
    r_one,
    r_spc,
};

std::string_view to_string(NodeKind kind);
bool is_leaf(NodeKind kind);

/// Which leaf decoders are available and how long a repetition node may be.
/// rate0, rate1 and the internal kinds are always available.
struct TreeConstraints {
    unsigned rep_max = 32;
    std::uint32_t enabled = 0;

    bool allows(NodeKind kind) const;
    TreeConstraints with(NodeKind kind) const;
    TreeConstraints without(NodeKind kind) const;

    /// The original Fast-SSC node set: Rep up to 16, SPC, RepSPC, 0SPC, 01.
    static TreeConstraints original();
    /// Original set plus Rep1, 0RepSPC, 001 and Rep up to 32.
    static TreeConstraints extended();

    friend bool operator==(const TreeConstraints &, const TreeConstraints &) = default;
};

/// Classifies a frozen-bit pattern (1 = information) of power-of-two length.
/// Returns the highest-precedence leaf kind that matches, or rate_r.
NodeKind classify_segment(std::span<const Bit> mask_segment,
                          const TreeConstraints &constraints = TreeConstraints::extended());

struct TreeNode {
    NodeKind kind = NodeKind::rate_r;
    std::uint32_t offset = 0;
    std::uint32_t length = 0;
    std::int32_t left = -1;
    std::int32_t right = -1;

    bool leaf() const { return left < 0; }
};

/// Pruned decoder tree. nodes()[0] is the root; children are stored after
/// their parent in depth-first order.
class DecoderTree {
public:
    std::size_t n_bits() const { return n_bits_; }
    std::size_t k_info() const { return k_info_; }
    const TreeConstraints &constraints() const { return constraints_; }
    const std::vector<TreeNode> &nodes() const { return nodes_; }
    const TreeNode &root() const { return nodes_.front(); }
    const TreeNode &node(std::int32_t i) const { return nodes_[static_cast<std::size_t>(i)]; }
    /// Leaves in left-to-right order.
    std::vector<TreeNode> leaves() const;

private:
    friend DecoderTree build_tree(const PolarCode &, const TreeConstraints &);
    std::size_t n_bits_ = 0;
    std::size_t k_info_ = 0;
    TreeConstraints constraints_;
    std::vector<TreeNode> nodes_;
};

DecoderTree build_tree(const PolarCode &code,
                       const TreeConstraints &constraints = TreeConstraints::extended());

} // namespace fastssc
