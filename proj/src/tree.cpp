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
#include "fastssc/tree.hpp"

#include "classify.hpp"

#include <stdexcept>

namespace fastssc {

using detail::kind_bit;

std::string_view to_string(NodeKind kind)
{
    switch (kind) {
    case NodeKind::rate0: return "RATE0";
    case NodeKind::rate1: return "RATE1";
    case NodeKind::rep: return "REP";
    case NodeKind::spc: return "SPC";
    case NodeKind::repspc: return "REPSPC";
    case NodeKind::rep1: return "REP1";
    case NodeKind::zero_spc: return "ZERO_SPC";
    case NodeKind::zero_repspc: return "ZERO_REPSPC";
    case NodeKind::ml01: return "ML01";
    case NodeKind::zero_01: return "ZERO_01";
    case NodeKind::rate_r: return "RATE_R";
    case NodeKind::zero_r: return "ZERO_R";
    case NodeKind::r_one: return "R_ONE";
    case NodeKind::r_spc: return "R_SPC";
    }
    return "?";
}

bool is_leaf(NodeKind kind)
{
    switch (kind) {
    case NodeKind::rate_r:
    case NodeKind::zero_r:
    case NodeKind::r_one:
    case NodeKind::r_spc:
        return false;
    default:
        return true;
    }
}

bool TreeConstraints::allows(NodeKind kind) const
{
    if (kind == NodeKind::rate0 || kind == NodeKind::rate1 || !is_leaf(kind))
        return true;
    return (enabled & kind_bit(kind)) != 0;
}

TreeConstraints TreeConstraints::with(NodeKind kind) const
{
    TreeConstraints c = *this;
    c.enabled |= kind_bit(kind);
    return c;
}

TreeConstraints TreeConstraints::without(NodeKind kind) const
{
    TreeConstraints c = *this;
    c.enabled &= ~kind_bit(kind);
    return c;
}

TreeConstraints TreeConstraints::original()
{
    TreeConstraints c;
    c.rep_max = 16;
    c.enabled = kind_bit(NodeKind::rep) | kind_bit(NodeKind::spc) | kind_bit(NodeKind::repspc) |
                kind_bit(NodeKind::zero_spc) | kind_bit(NodeKind::ml01);
    return c;
}

TreeConstraints TreeConstraints::extended()
{
    TreeConstraints c = original();
    c.rep_max = 32;
    c.enabled |= kind_bit(NodeKind::rep1) | kind_bit(NodeKind::zero_repspc) |
                 kind_bit(NodeKind::zero_01);
    return c;
}

NodeKind classify_segment(std::span<const Bit> mask_segment, const TreeConstraints &constraints)
{
    if (!is_power_of_two(mask_segment.size()))
        throw std::invalid_argument("segment length must be a power of two");
    detail::MaskView view(mask_segment);
    return detail::classify(view, 0, static_cast<std::uint32_t>(mask_segment.size()), constraints);
}

namespace {

std::int32_t build_node(std::vector<TreeNode> &nodes, const detail::MaskView &view,
                        std::uint32_t off, std::uint32_t len, const TreeConstraints &c)
{
    const auto index = static_cast<std::int32_t>(nodes.size());
    nodes.push_back(TreeNode{detail::classify(view, off, len, c), off, len, -1, -1});
    if (nodes.back().kind != NodeKind::rate_r)
        return index;
    const std::int32_t l = build_node(nodes, view, off, len / 2, c);
    const std::int32_t r = build_node(nodes, view, off + len / 2, len / 2, c);
    TreeNode &self = nodes[static_cast<std::size_t>(index)];
    self.left = l;
    self.right = r;
    self.kind = detail::internal_kind(nodes[static_cast<std::size_t>(l)].kind,
                                      nodes[static_cast<std::size_t>(r)].kind);
    return index;
}

} // namespace

DecoderTree build_tree(const PolarCode &code, const TreeConstraints &constraints)
{
    DecoderTree tree;
    tree.n_bits_ = code.n_bits();
    tree.k_info_ = code.k_info();
    tree.constraints_ = constraints;
    detail::MaskView view(code.info_mask());
    build_node(tree.nodes_, view, 0, static_cast<std::uint32_t>(code.n_bits()), constraints);
    return tree;
}

std::vector<TreeNode> DecoderTree::leaves() const
{
    std::vector<TreeNode> out;
    for (const TreeNode &n : nodes_)
        if (n.leaf())
            out.push_back(n);
    return out;
}

} // namespace fastssc
