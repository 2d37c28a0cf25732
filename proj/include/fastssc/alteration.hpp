/*------------------------------------------------------------------------
Altered code construction: swap proposals, latency-driven search and Pareto pruning

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

#include "fastssc/construction.hpp"
#include "fastssc/latency.hpp"
#include "fastssc/simulation.hpp"
#include "fastssc/tree.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fastssc {

/// A proposed exchange: frozen positions that become information bits and
/// information positions that become frozen.
struct SwapCandidate {
    std::vector<std::uint32_t> to_info;
    std::vector<std::uint32_t> to_frozen;
    /// "1" .. "7" for the tree-pattern criteria, "window" or "user".
    std::string criterion;
};

struct AlterationConfig {
    /// Near-threshold positions taken from each side of the reliability order.
    unsigned window_h = 16;
    unsigned max_swaps = 5;
    /// Lowest-latency combinations kept for FER evaluation.
    std::size_t list_size = 2048;
    /// Combinations carried from one swap count to the next when a level is
    /// too large to enumerate exhaustively.
    std::size_t beam_width = 512;
    std::uint64_t exhaustive_limit = 2'000'000;
    /// Frozen positions proposed by the pattern criteria are dropped unless
    /// they rank among this many most reliable frozen positions.
    unsigned frozen_rank_limit = 64;
    bool use_criteria = true;
    std::vector<std::uint32_t> user_to_info;
    std::vector<std::uint32_t> user_to_frozen;

    double eval_snr_db = 2.5;
    std::uint64_t fer_errors = 50;
    std::uint64_t fer_frames = 200'000;
    /// Candidates simulated per distinct latency value.
    std::size_t fer_per_latency = 2;
    /// Budget for re-simulating the surviving entries; 0 skips it.
    std::uint64_t final_fer_errors = 100;
    std::uint64_t final_fer_frames = 1'000'000;
    std::uint64_t seed = 1;
    unsigned threads = 1;

    TreeConstraints constraints = TreeConstraints::original();
    CostModel cost;

    void validate() const;
};

struct CandidateLists {
    /// Frozen positions that may become information bits, most reliable first.
    std::vector<std::uint32_t> frozen_side;
    /// Information positions that may become frozen, least reliable first.
    std::vector<std::uint32_t> info_side;
    std::vector<SwapCandidate> proposals;
};

/// Pattern detectors over the aligned segments of the mask (criteria 1-7),
/// the reliability window and the user lists.
CandidateLists propose_candidates(const PolarCode &code, const ReliabilityProfile &profile,
                                  const AlterationConfig &cfg);

struct ParetoEntry {
    PolarCode code;
    std::uint64_t latency_cc = 0;
    double fer = 0.0;
    std::uint64_t frames = 0;
    std::uint64_t frame_errors = 0;
    /// The FER budget ran out before the requested error count.
    bool low_confidence = false;
    SwapCandidate swaps;

    std::size_t swap_count() const { return swaps.to_info.size(); }
};

/// FER of a candidate code at the evaluation point.
using FerEstimator = std::function<SimResult(const PolarCode &, std::uint64_t min_errors,
                                             std::uint64_t max_frames)>;

/// Float Fast-SSC decoding at cfg.eval_snr_db with cfg.seed for every code,
/// so candidates see the same noise realisations.
FerEstimator default_fer_estimator(const AlterationConfig &cfg);

struct AlterationResult {
    /// Ascending latency, strictly decreasing FER.
    std::vector<ParetoEntry> front;
    ParetoEntry unaltered;
    CandidateLists candidates;
    std::uint64_t latency_evaluations = 0;
    std::uint64_t fer_evaluations = 0;
};

AlterationResult search(const PolarCode &code, const ReliabilityProfile &profile,
                        const AlterationConfig &cfg, const FerEstimator &fer = {});

/// Lowest-latency entry whose FER is at most `max_fer_ratio` times that of
/// the unaltered code; the unaltered code itself when none qualifies.
const ParetoEntry &select_entry(const AlterationResult &result, double max_fer_ratio);

/// [{"frozen_mask", "latency_cc", "fer", "low_confidence", "swaps": {"to_info", "to_frozen"}}]
std::string front_to_json(const std::vector<ParetoEntry> &front);

} // namespace fastssc
