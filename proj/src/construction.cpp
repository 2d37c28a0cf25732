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
#include "fastssc/construction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fastssc {

namespace ga {

namespace {
constexpr double pivot = 0.867861;
constexpr double a2 = 0.0564, a1 = -0.48560;
constexpr double alpha = -0.4527, beta = 0.0218, gamma = 0.86;
const double log_phi_at_pivot = a2 * pivot * pivot + a1 * pivot;
} // namespace

double log_phi(double mean)
{
    if (mean <= 0)
        return 0.0;
    if (mean < pivot)
        return a2 * mean * mean + a1 * mean;
    return alpha * std::pow(mean, gamma) + beta;
}

double inverse_log_phi(double log_value)
{
    if (log_value >= 0)
        return 0.0;
    if (log_value > log_phi_at_pivot) {
        // smaller root of a2 x^2 + a1 x - y = 0, written without cancellation
        const double disc = a1 * a1 + 4 * a2 * log_value;
        return -2 * log_value / (-a1 + std::sqrt(disc));
    }
    return std::pow((log_value - beta) / alpha, 1.0 / gamma);
}

double minus_mean(double mean)
{
    // 1 - (1 - phi)^2 = phi (2 - phi), kept in the log domain
    const double lp = log_phi(mean);
    return inverse_log_phi(lp + std::log1p(-std::expm1(lp)));
}

} // namespace ga

std::vector<std::uint32_t> ReliabilityProfile::ascending_order() const
{
    std::vector<std::uint32_t> idx(per_bit.size());
    std::iota(idx.begin(), idx.end(), 0u);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return per_bit[a] < per_bit[b]; });
    return idx;
}

ReliabilityProfile compute_reliabilities(std::size_t n_bits, double design_snr_db, double rate)
{
    if (!is_power_of_two(n_bits) || n_bits > PolarCode::max_length)
        throw CodeError("construction length " + std::to_string(n_bits) + " is not a power of two");
    if (!std::isfinite(design_snr_db))
        throw CodeError("design SNR must be finite");
    if (!(rate > 0 && rate < 1))
        throw CodeError("rate must lie in (0, 1)");

    ReliabilityProfile p;
    p.design_snr_db = design_snr_db;
    p.per_bit.assign(n_bits, 0.0);
    // BPSK over AWGN: channel LLR mean 2/sigma^2 = 4 R Eb/N0
    p.per_bit[0] = 4.0 * rate * std::pow(10.0, design_snr_db / 10.0);
    for (std::size_t len = n_bits; len >= 2; len /= 2) {
        for (std::size_t off = 0; off < n_bits; off += len) {
            const double m = p.per_bit[off];
            p.per_bit[off] = ga::minus_mean(m);
            p.per_bit[off + len / 2] = 2.0 * m;
        }
    }
    return p;
}

PolarCode build_frozen_set(const ReliabilityProfile &profile, std::size_t k)
{
    const std::size_t n = profile.size();
    if (k == 0 || k >= n)
        throw CodeError("k = " + std::to_string(k) + " must lie in (0, " + std::to_string(n) + ")");
    const auto order = profile.ascending_order();
    BitVec mask(n, 0);
    for (std::size_t i = n - k; i < n; ++i)
        mask[order[i]] = 1;
    return PolarCode(std::move(mask));
}

PolarCode construct_code(std::size_t n_bits, std::size_t k, double design_snr_db)
{
    const double rate = static_cast<double>(k) / static_cast<double>(n_bits);
    return build_frozen_set(compute_reliabilities(n_bits, design_snr_db, rate), k);
}

} // namespace fastssc
