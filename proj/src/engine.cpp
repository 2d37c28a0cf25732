/*------------------------------------------------------------------------
Fast-SSC program execution

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
#include "fastssc/engine.hpp"

#include "fastssc/node_decoders.hpp"
#include "fastssc/sc_reference.hpp"

#include <algorithm>
#include <stdexcept>

namespace fastssc {

Workspace::Workspace(std::size_t n_bits) : beta_(n_bits, 0)
{
    for (std::size_t len = n_bits; len >= 1; len /= 2)
        alpha_.emplace_back(len);
}

void execute(const Program &program, std::span<const Llr> llr, Workspace &ws,
             const LlrArithmetic &arith, std::span<Bit> codeword)
{
    const std::size_t n = program.n_bits;
    if (llr.size() != n || ws.n_bits() != n || codeword.size() != n)
        throw CodeError("program, LLR, workspace and codeword lengths disagree");

    std::copy(llr.begin(), llr.end(), ws.alpha(0).begin());
    std::span<Bit> beta = ws.beta();
    std::fill(beta.begin(), beta.end(), Bit{0});

    for (const Instruction &ins : program.instructions) {
        const std::size_t nv = ins.nv, h = nv / 2;
        std::span<Llr> a = ws.alpha(ins.stage);
        switch (ins.op) {
        case Opcode::f: {
            std::span<Llr> c = ws.alpha(ins.stage + 1);
            for (std::size_t i = 0; i < h; ++i)
                c[i] = f_op(a[i], a[i + h]);
            break;
        }
        case Opcode::g: {
            std::span<Llr> c = ws.alpha(ins.stage + 1);
            const Bit *bl = beta.data() + ins.offset;
            for (std::size_t i = 0; i < h; ++i)
                c[i] = g_op(a[i], a[i + h], bl[i], arith);
            break;
        }
        case Opcode::g_0r: {
            std::span<Llr> c = ws.alpha(ins.stage + 1);
            for (std::size_t i = 0; i < h; ++i)
                c[i] = arith.add(a[i + h], a[i]);
            break;
        }
        case Opcode::combine: {
            Bit *b = beta.data() + ins.offset;
            for (std::size_t i = 0; i < h; ++i)
                b[i] ^= b[i + h];
            break;
        }
        case Opcode::combine_0r: {
            Bit *b = beta.data() + ins.offset;
            std::copy(b + h, b + nv, b);
            break;
        }
        default: {
            std::span<const Llr> in = a.first(nv);
            std::span<Bit> out = beta.subspan(ins.offset, nv);
            switch (ins.op) {
            case Opcode::rep: decode_rep(in, out, arith); break;
            case Opcode::spc: decode_spc(in, out); break;
            case Opcode::repspc: decode_repspc(in, out, arith); break;
            case Opcode::rep1: decode_rep1(in, out, arith); break;
            case Opcode::ml01: decode_ml01(in, out, arith); break;
            case Opcode::zero_01: decode_zero_01(in, out, arith); break;
            case Opcode::zero_repspc: decode_zero_repspc(in, out, arith); break;
            case Opcode::zero_spc: decode_zero_spc(in, out, arith); break;
            case Opcode::rate1_sign: decode_rate1(in, out, arith); break;
            default: throw std::logic_error("unhandled opcode");
            }
        }
        }
    }
    std::copy(beta.begin(), beta.end(), codeword.begin());
}

BitVec execute(const Program &program, std::span<const Llr> llr, Workspace &ws,
               const LlrArithmetic &arith)
{
    BitVec out(program.n_bits);
    execute(program, llr, ws, arith, out);
    return out;
}

namespace {

void walk(const DecoderTree &tree, const TreeNode &node, std::span<const Llr> alpha,
          std::span<Bit> beta, const LlrArithmetic &arith)
{
    switch (node.kind) {
    case NodeKind::rate0: std::fill(beta.begin(), beta.end(), Bit{0}); return;
    case NodeKind::rate1: decode_rate1(alpha, beta, arith); return;
    case NodeKind::rep: decode_rep(alpha, beta, arith); return;
    case NodeKind::spc: decode_spc(alpha, beta); return;
    case NodeKind::repspc: decode_repspc(alpha, beta, arith); return;
    case NodeKind::rep1: decode_rep1(alpha, beta, arith); return;
    case NodeKind::zero_spc: decode_zero_spc(alpha, beta, arith); return;
    case NodeKind::zero_repspc: decode_zero_repspc(alpha, beta, arith); return;
    case NodeKind::ml01: decode_ml01(alpha, beta, arith); return;
    case NodeKind::zero_01: decode_zero_01(alpha, beta, arith); return;
    default: break;
    }
    const std::size_t h = alpha.size() / 2;
    std::vector<Llr> child(h);
    const TreeNode &left = tree.node(node.left);
    const TreeNode &right = tree.node(node.right);
    if (left.kind != NodeKind::rate0) {
        for (std::size_t i = 0; i < h; ++i)
            child[i] = f_op(alpha[i], alpha[i + h]);
        walk(tree, left, child, beta.first(h), arith);
    } else {
        std::fill(beta.begin(), beta.begin() + static_cast<std::ptrdiff_t>(h), Bit{0});
    }
    for (std::size_t i = 0; i < h; ++i)
        child[i] = g_op(alpha[i], alpha[i + h], beta[i], arith);
    walk(tree, right, child, beta.subspan(h), arith);
    for (std::size_t i = 0; i < h; ++i)
        beta[i] ^= beta[i + h];
}

} // namespace

BitVec decode_tree(const DecoderTree &tree, std::span<const Llr> llr, const LlrArithmetic &arith)
{
    if (llr.size() != tree.n_bits())
        throw CodeError("LLR vector length does not match the tree");
    BitVec beta(tree.n_bits());
    walk(tree, tree.root(), llr, beta, arith);
    return beta;
}

FastSscDecoder::FastSscDecoder(std::shared_ptr<const Program> program, LlrArithmetic arith)
    : program_(std::move(program)), arith_(arith), ws_(program_->n_bits)
{
}

void FastSscDecoder::decode(std::span<const Llr> llr, std::span<Bit> codeword)
{
    execute(*program_, llr, ws_, arith_, codeword);
}

ScReferenceDecoder::ScReferenceDecoder(PolarCode code, LlrArithmetic arith)
    : code_(std::move(code)), arith_(arith)
{
}

void ScReferenceDecoder::decode(std::span<const Llr> llr, std::span<Bit> codeword)
{
    const BitVec beta = sc_decode_reference(code_, llr, arith_);
    std::copy(beta.begin(), beta.end(), codeword.begin());
}

DecoderFactory fastssc_factory(std::shared_ptr<const Program> program, const LlrArithmetic &arith)
{
    return [program, arith]() -> std::unique_ptr<FrameDecoder> {
        return std::make_unique<FastSscDecoder>(program, arith);
    };
}

DecoderFactory fastssc_factory(const PolarCode &code, const TreeConstraints &constraints,
                               const LlrArithmetic &arith)
{
    return fastssc_factory(std::make_shared<const Program>(compile(build_tree(code, constraints))),
                           arith);
}

DecoderFactory sc_reference_factory(const PolarCode &code, const LlrArithmetic &arith)
{
    return [code, arith]() -> std::unique_ptr<FrameDecoder> {
        return std::make_unique<ScReferenceDecoder>(code, arith);
    };
}

} // namespace fastssc
