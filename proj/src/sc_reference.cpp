/*------------------------------------------------------------------------
Reference successive-cancellation decoder

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
#include "fastssc/sc_reference.hpp"

#include <vector>

namespace fastssc {

namespace {

struct ScContext {
    const BitVec &mask;
    const LlrArithmetic &arith;
};

void sc_node(const ScContext &ctx, std::size_t off, std::span<const Llr> alpha, std::span<Bit> beta,
             Llr *scratch)
{
    const std::size_t n = alpha.size();
    if (n == 1) {
        beta[0] = ctx.mask[off] ? hard_decision(alpha[0]) : Bit{0};
        return;
    }
    const std::size_t h = n / 2;
    std::span<Llr> child(scratch, h);
    for (std::size_t i = 0; i < h; ++i)
        child[i] = f_op(alpha[i], alpha[i + h]);
    sc_node(ctx, off, child, beta.first(h), scratch + h);
    for (std::size_t i = 0; i < h; ++i)
        child[i] = g_op(alpha[i], alpha[i + h], beta[i], ctx.arith);
    sc_node(ctx, off + h, child, beta.subspan(h), scratch + h);
    for (std::size_t i = 0; i < h; ++i)
        beta[i] ^= beta[h + i];
}

} // namespace

BitVec sc_decode_reference(const PolarCode &code, std::span<const Llr> llr,
                           const LlrArithmetic &arith)
{
    if (llr.size() != code.n_bits())
        throw CodeError("LLR vector length " + std::to_string(llr.size()) +
                        " does not match N = " + std::to_string(code.n_bits()));
    BitVec beta(code.n_bits());
    std::vector<Llr> scratch(code.n_bits());
    ScContext ctx{code.info_mask(), arith};
    sc_node(ctx, 0, llr, beta, scratch.data());
    return beta;
}

} // namespace fastssc
