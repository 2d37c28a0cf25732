/*------------------------------------------------------------------------
BPSK over AWGN Monte-Carlo frame-error simulation

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

#include "fastssc/engine.hpp"
#include "fastssc/llr.hpp"
#include "fastssc/polar_code.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace fastssc {

struct ChannelParams {
    double ebn0_db = 0.0;
    double rate = 0.5;

    /// 1 / (2 R 10^(Eb/N0 / 10))
    double sigma2() const;
    void validate() const;
};

/// Generator for one frame, keyed by (seed, frame index) so that the
/// stimulus of a frame does not depend on which worker draws it.
using FrameRng = std::mt19937_64;
FrameRng frame_rng(std::uint64_t seed, std::uint64_t frame);

/// BPSK (bit b -> 1 - 2b), Gaussian noise of variance sigma2, LLR = 2y/sigma2,
/// then quantized to the channel format when `arith` is fixed point.
void channel_llr(std::span<const Bit> codeword, const ChannelParams &params, FrameRng &rng,
                 const LlrArithmetic &arith, std::span<Llr> llr);
std::vector<Llr> channel_llr(std::span<const Bit> codeword, const ChannelParams &params,
                             FrameRng &rng, const LlrArithmetic &arith = {});

struct SimOptions {
    std::uint64_t min_errors = 100;
    std::uint64_t max_frames = 100'000'000;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    /// Frames between stopping checks; results depend on it, not on threads.
    std::uint64_t batch_frames = 1024;
    /// Channel LLR format.
    LlrArithmetic arith;
};

struct SimResult {
    double ebn0_db = 0.0;
    std::uint64_t frames = 0;
    std::uint64_t frame_errors = 0;
    std::uint64_t bit_errors = 0;
    std::uint64_t k_info = 0;
    std::uint64_t seed = 0;
    double elapsed_s = 0.0;
    /// Stopped on max_frames before reaching min_errors.
    bool censored = false;

    double fer() const;
    /// Over information positions only.
    double ber() const;
};

/// Random messages are encoded systematically, sent through the channel and
/// decoded; a frame error is any mismatch in the codeword estimate.
SimResult run_fer(const PolarCode &code, const DecoderFactory &decoder, const ChannelParams &params,
                  const SimOptions &options);

std::vector<SimResult> fer_curve(const PolarCode &code, const DecoderFactory &decoder,
                                 std::span<const double> ebn0_db_list, const SimOptions &options);

/// Columns: ebn0_db,frames,frame_errors,bit_errors,fer,ber,censored
std::string results_to_csv(std::span<const SimResult> results);

/// Eb/N0 at which log10(FER) crosses log10(target), interpolating linearly
/// between neighbouring points (extrapolating from the nearest pair when the
/// target lies outside the simulated range). Points with zero errors are
/// skipped. Returns NaN with fewer than two usable points.
double snr_at_fer(std::span<const SimResult> curve, double target_fer);

} // namespace fastssc
