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
#pragma once

#include "fastssc/llr.hpp"
#include "fastssc/program.hpp"
#include "fastssc/tree.hpp"

#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace fastssc {

/// Alpha memory per tree stage (stage s holds N / 2^s LLRs) and the beta
/// memory, which holds bit estimates at their absolute codeword positions.
/// One workspace per in-flight frame.
class Workspace {
public:
    explicit Workspace(std::size_t n_bits);

    std::size_t n_bits() const { return beta_.size(); }
    std::span<Llr> alpha(std::size_t stage) { return alpha_[stage]; }
    std::span<Bit> beta() { return beta_; }

private:
    std::vector<std::vector<Llr>> alpha_;
    BitVec beta_;
};

/// Runs a compiled program; writes the codeword estimate into `codeword`.
void execute(const Program &program, std::span<const Llr> llr, Workspace &ws,
             const LlrArithmetic &arith, std::span<Bit> codeword);
BitVec execute(const Program &program, std::span<const Llr> llr, Workspace &ws,
               const LlrArithmetic &arith = {});

/// Decodes by walking the tree recursively; the reference for execute().
BitVec decode_tree(const DecoderTree &tree, std::span<const Llr> llr,
                   const LlrArithmetic &arith = {});

/// Per-frame decoder with its own state; not shareable between threads.
class FrameDecoder {
public:
    virtual ~FrameDecoder() = default;
    virtual std::size_t n_bits() const = 0;
    virtual void decode(std::span<const Llr> llr, std::span<Bit> codeword) = 0;
};

using DecoderFactory = std::function<std::unique_ptr<FrameDecoder>()>;

class FastSscDecoder final : public FrameDecoder {
public:
    FastSscDecoder(std::shared_ptr<const Program> program, LlrArithmetic arith);
    std::size_t n_bits() const override { return program_->n_bits; }
    void decode(std::span<const Llr> llr, std::span<Bit> codeword) override;

private:
    std::shared_ptr<const Program> program_;
    LlrArithmetic arith_;
    Workspace ws_;
};

class ScReferenceDecoder final : public FrameDecoder {
public:
    ScReferenceDecoder(PolarCode code, LlrArithmetic arith);
    std::size_t n_bits() const override { return code_.n_bits(); }
    void decode(std::span<const Llr> llr, std::span<Bit> codeword) override;

private:
    PolarCode code_;
    LlrArithmetic arith_;
};

DecoderFactory fastssc_factory(const PolarCode &code, const TreeConstraints &constraints,
                               const LlrArithmetic &arith);
DecoderFactory fastssc_factory(std::shared_ptr<const Program> program, const LlrArithmetic &arith);
DecoderFactory sc_reference_factory(const PolarCode &code, const LlrArithmetic &arith);

} // namespace fastssc
