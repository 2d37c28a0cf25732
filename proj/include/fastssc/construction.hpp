/*------------------------------------------------------------------------
Reliability-based code construction (Gaussian approximation)

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
#include <vector>

namespace fastssc {

/// Per-bit reliability scores (higher is more reliable) for one design SNR.
struct ReliabilityProfile {
    std::vector<double> per_bit;
    double design_snr_db = 0.0;

    std::size_t size() const { return per_bit.size(); }
    /// Bit indices from least to most reliable; equal scores put the lower
    /// index first.
    std::vector<std::uint32_t> ascending_order() const;
};

namespace ga {
/// ln(phi(x)) for the two-piece Chung approximation of the Gaussian
/// density-evolution function phi.
double log_phi(double mean);
/// Inverse of log_phi on (-inf, 0].
double inverse_log_phi(double log_value);
/// Mean LLR of the degraded ("minus") child of a channel with mean `mean`.
double minus_mean(double mean);
} // namespace ga

/// Mean LLR of every bit channel over BPSK/AWGN at Eb/N0 = design_snr_db,
/// where `rate` converts Eb/N0 to Es/N0.
ReliabilityProfile compute_reliabilities(std::size_t n_bits, double design_snr_db, double rate);

/// Marks the k highest-scoring positions as information bits; ties go to
/// the higher index.
PolarCode build_frozen_set(const ReliabilityProfile &profile, std::size_t k);

PolarCode construct_code(std::size_t n_bits, std::size_t k, double design_snr_db);

} // namespace fastssc
