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
#pragma once

#include "fastssc/llr.hpp"

#include <span>

namespace fastssc {

// Every decoder reads the node's input LLRs and writes the node's bit
// estimate vector (the beta of the node, not message bits). Where a choice
// between equally likely codewords exists, ML decoders return the
// lexicographically smallest codeword (index 0 most significant).

/// Threshold on the sum of the inputs, accumulated as a pairwise adder tree
/// (element i with i + n/2, halving), saturating after every addition in
/// fixed-point mode.
void decode_rep(std::span<const Llr> in, std::span<Bit> out, const LlrArithmetic &arith);

/// Wagner decoding: hard decisions, and on odd parity the least reliable
/// position is flipped. Among equally unreliable positions the first one
/// with a hard decision of 1 is flipped, else the last one.
void decode_spc(std::span<const Llr> in, std::span<Bit> out);

/// Hard decisions. Zero inputs are resolved exactly as bit-serial SC would
/// resolve them, so the result always matches SC decoding of a rate-1 code.
void decode_rate1(std::span<const Llr> in, std::span<Bit> out, const LlrArithmetic &arith);

/// Exhaustive ML over {0000, 0101, 1010, 1111}. The correlation metric is
/// evaluated on the pairwise sums (in[i] + in[i+2]) of the adder stage.
void decode_ml01(std::span<const Llr> in, std::span<Bit> out, const LlrArithmetic &arith);

/// Nv = 8: F, Rep(4), G, SPC(4), Combine.
void decode_repspc(std::span<const Llr> in, std::span<Bit> out, const LlrArithmetic &arith);

/// Nv = 8: F, Rep(4), G, rate-1 decision, Combine. The lower half is the
/// upper half, negated when the repetition bit is 1.
void decode_rep1(std::span<const Llr> in, std::span<Bit> out, const LlrArithmetic &arith);

/// Rate-0 left half: G_0R, the inner decoder on the right half, Combine_0R.
void decode_zero_spc(std::span<const Llr> in, std::span<Bit> out, const LlrArithmetic &arith);
void decode_zero_01(std::span<const Llr> in, std::span<Bit> out, const LlrArithmetic &arith);
void decode_zero_repspc(std::span<const Llr> in, std::span<Bit> out, const LlrArithmetic &arith);

/// Allocating conveniences, floating-point unless told otherwise.
BitVec decode_rep(std::span<const Llr> in, const LlrArithmetic &arith = {});
BitVec decode_spc(std::span<const Llr> in);
BitVec decode_rate1(std::span<const Llr> in, const LlrArithmetic &arith = {});
BitVec decode_ml01(std::span<const Llr> in, const LlrArithmetic &arith = {});
BitVec decode_repspc(std::span<const Llr> in, const LlrArithmetic &arith = {});
BitVec decode_rep1(std::span<const Llr> in, const LlrArithmetic &arith = {});
BitVec decode_zero_spc(std::span<const Llr> in, const LlrArithmetic &arith = {});
BitVec decode_zero_01(std::span<const Llr> in, const LlrArithmetic &arith = {});
BitVec decode_zero_repspc(std::span<const Llr> in, const LlrArithmetic &arith = {});

} // namespace fastssc
