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
#include "fastssc/simulation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <thread>

namespace fastssc {

double ChannelParams::sigma2() const
{
    return 1.0 / (2.0 * rate * std::pow(10.0, ebn0_db / 10.0));
}

void ChannelParams::validate() const
{
    if (!std::isfinite(ebn0_db) || !(rate > 0 && rate <= 1))
        throw std::invalid_argument("channel parameters need a finite Eb/N0 and a rate in (0, 1]");
    if (!(sigma2() > 0))
        throw std::invalid_argument("channel noise variance underflows; lower Eb/N0");
}

namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

} // namespace

FrameRng frame_rng(std::uint64_t seed, std::uint64_t frame)
{
    return FrameRng(splitmix64(splitmix64(seed) ^ frame));
}

void channel_llr(std::span<const Bit> codeword, const ChannelParams &params, FrameRng &rng,
                 const LlrArithmetic &arith, std::span<Llr> llr)
{
    if (llr.size() != codeword.size())
        throw std::invalid_argument("channel_llr: buffer length mismatch");
    const double s2 = params.sigma2();
    const double sigma = std::sqrt(s2);
    std::normal_distribution<double> noise(0.0, 1.0);
    for (std::size_t i = 0; i < codeword.size(); ++i) {
        const double y = (codeword[i] ? -1.0 : 1.0) + sigma * noise(rng);
        llr[i] = arith.from_channel(2.0 * y / s2);
    }
}

std::vector<Llr> channel_llr(std::span<const Bit> codeword, const ChannelParams &params,
                             FrameRng &rng, const LlrArithmetic &arith)
{
    std::vector<Llr> out(codeword.size());
    channel_llr(codeword, params, rng, arith, out);
    return out;
}

double SimResult::fer() const
{
    return frames ? static_cast<double>(frame_errors) / static_cast<double>(frames) : 0.0;
}

double SimResult::ber() const
{
    const double bits = static_cast<double>(frames) * static_cast<double>(k_info);
    return bits > 0 ? static_cast<double>(bit_errors) / bits : 0.0;
}

namespace {

struct Counts {
    std::uint64_t frame_errors = 0;
    std::uint64_t bit_errors = 0;
};

class FrameWorker {
public:
    FrameWorker(const PolarCode &code, const DecoderFactory &factory, const ChannelParams &params,
                const SimOptions &opt)
        : code_(&code), params_(params), opt_(&opt), decoder_(factory()), message_(code.k_info()),
          codeword_(code.n_bits()), estimate_(code.n_bits()), llr_(code.n_bits())
    {
        if (decoder_->n_bits() != code.n_bits())
            throw std::invalid_argument("decoder does not match the code length");
    }

    Counts run(std::uint64_t first, std::uint64_t last)
    {
        Counts c;
        for (std::uint64_t f = first; f < last; ++f) {
            FrameRng rng = frame_rng(opt_->seed, f);
            std::uint64_t word = 0;
            for (std::size_t i = 0; i < message_.size(); ++i) {
                if (i % 64 == 0)
                    word = rng();
                message_[i] = static_cast<Bit>((word >> (i % 64)) & 1u);
            }
            encode_systematic_into(*code_, message_, codeword_);
            channel_llr(codeword_, params_, rng, opt_->arith, llr_);
            decoder_->decode(llr_, estimate_);
            bool frame_error = false;
            for (std::size_t i = 0; i < codeword_.size(); ++i) {
                if (codeword_[i] != estimate_[i]) {
                    frame_error = true;
                    c.bit_errors += code_->is_info(i);
                }
            }
            c.frame_errors += frame_error;
        }
        return c;
    }

private:
    const PolarCode *code_;
    ChannelParams params_;
    const SimOptions *opt_;
    std::unique_ptr<FrameDecoder> decoder_;
    BitVec message_, codeword_, estimate_;
    std::vector<Llr> llr_;
};

} // namespace

SimResult run_fer(const PolarCode &code, const DecoderFactory &decoder, const ChannelParams &params,
                  const SimOptions &options)
{
    params.validate();
    if (options.batch_frames == 0 || options.max_frames == 0)
        throw std::invalid_argument("batch size and max_frames must be positive");
    const auto start = std::chrono::steady_clock::now();
    const unsigned threads = std::max(1u, options.threads);

    std::vector<FrameWorker> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        workers.emplace_back(code, decoder, params, options);

    SimResult r;
    r.ebn0_db = params.ebn0_db;
    r.k_info = code.k_info();
    r.seed = options.seed;
    while (r.frames < options.max_frames && r.frame_errors < options.min_errors) {
        const std::uint64_t batch = std::min(options.batch_frames, options.max_frames - r.frames);
        std::vector<Counts> partial(threads);
        const std::uint64_t per = (batch + threads - 1) / threads;
        auto chunk = [&](unsigned t) {
            const std::uint64_t a = r.frames + std::min<std::uint64_t>(batch, t * per);
            const std::uint64_t b = r.frames + std::min<std::uint64_t>(batch, (t + 1) * per);
            partial[t] = workers[t].run(a, b);
        };
        if (threads == 1) {
            chunk(0);
        } else {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < threads; ++t)
                pool.emplace_back(chunk, t);
        }
        for (const Counts &c : partial) {
            r.frame_errors += c.frame_errors;
            r.bit_errors += c.bit_errors;
        }
        r.frames += batch;
    }
    r.censored = r.frame_errors < options.min_errors;
    r.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<SimResult> fer_curve(const PolarCode &code, const DecoderFactory &decoder,
                                 std::span<const double> ebn0_db_list, const SimOptions &options)
{
    std::vector<SimResult> out;
    out.reserve(ebn0_db_list.size());
    for (double snr : ebn0_db_list)
        out.push_back(run_fer(code, decoder, ChannelParams{snr, code.rate()}, options));
    return out;
}

std::string results_to_csv(std::span<const SimResult> results)
{
    std::string s = "ebn0_db,frames,frame_errors,bit_errors,fer,ber,censored\n";
    char line[256];
    for (const SimResult &r : results) {
        std::snprintf(line, sizeof line, "%.4f,%llu,%llu,%llu,%.6e,%.6e,%d\n", r.ebn0_db,
                      static_cast<unsigned long long>(r.frames),
                      static_cast<unsigned long long>(r.frame_errors),
                      static_cast<unsigned long long>(r.bit_errors), r.fer(), r.ber(),
                      r.censored ? 1 : 0);
        s += line;
    }
    return s;
}

double snr_at_fer(std::span<const SimResult> curve, double target_fer)
{
    std::vector<std::pair<double, double>> pts;
    for (const SimResult &r : curve)
        if (r.frame_errors > 0)
            pts.emplace_back(r.ebn0_db, std::log10(r.fer()));
    std::sort(pts.begin(), pts.end());
    if (pts.size() < 2)
        return std::numeric_limits<double>::quiet_NaN();
    const double target = std::log10(target_fer);
    // FER falls with SNR: pick the first pair bracketing the target, else the
    // nearest end pair.
    std::size_t seg = pts.front().second < target ? 0 : pts.size() - 2;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if ((pts[i].second - target) * (pts[i + 1].second - target) <= 0) {
            seg = i;
            break;
        }
    }
    const auto [x0, y0] = pts[seg];
    const auto [x1, y1] = pts[seg + 1];
    if (y1 == y0)
        return std::numeric_limits<double>::quiet_NaN();
    return x0 + (target - y0) * (x1 - x0) / (y1 - y0);
}

} // namespace fastssc
