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
#include "fastssc/alteration.hpp"

#include "fastssc/engine.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace fastssc {

void AlterationConfig::validate() const
{
    if (max_swaps == 0 || max_swaps > 8)
        throw std::invalid_argument("max_swaps must lie in [1, 8]");
    if (list_size == 0 || beam_width == 0 || fer_per_latency == 0)
        throw std::invalid_argument("list_size, beam_width and fer_per_latency must be positive");
    if (fer_errors == 0 || fer_frames == 0)
        throw std::invalid_argument("the FER budget must be positive");
    if (!std::isfinite(eval_snr_db))
        throw std::invalid_argument("eval_snr_db must be finite");
    cost.validate();
}

namespace {

class Segments {
public:
    explicit Segments(const BitVec &mask) : mask_(mask), prefix_(mask.size() + 1, 0)
    {
        for (std::size_t i = 0; i < mask.size(); ++i)
            prefix_[i + 1] = prefix_[i] + mask[i];
    }
    std::uint32_t count(std::uint32_t off, std::uint32_t len) const
    {
        return prefix_[off + len] - prefix_[off];
    }
    bool matches(std::uint32_t off, std::string_view pat) const
    {
        std::uint32_t i = off;
        for (char c : pat) {
            if (c == ' ')
                continue;
            if (mask_[i++] != static_cast<Bit>(c - '0'))
                return false;
        }
        return true;
    }
    bool is_spc(std::uint32_t off, std::uint32_t len) const
    {
        return len >= 2 && !mask_[off] && count(off, len) == len - 1;
    }

private:
    const BitVec &mask_;
    std::vector<std::uint32_t> prefix_;
};

std::vector<SwapCandidate> detect_criteria(const PolarCode &code)
{
    const BitVec &m = code.info_mask();
    const auto n = static_cast<std::uint32_t>(m.size());
    const Segments seg(m);
    std::vector<SwapCandidate> out;
    auto add = [&](std::string id, std::vector<std::uint32_t> to_info,
                   std::vector<std::uint32_t> to_frozen) {
        out.push_back({std::move(to_info), std::move(to_frozen), std::move(id)});
    };

    for (std::uint32_t off = 0; off + 8 <= n; off += 8) {
        if (seg.matches(off, "0011 1111"))
            add("1", {off + 1}, {});
        if (seg.matches(off, "0001 0111"))
            add("2", {off + 1, off + 2, off + 4}, {});
        if (seg.matches(off, "0000 0011"))
            add("4", {}, {off + 6});
    }
    for (std::uint32_t len = 8; len <= n; len *= 2)
        for (std::uint32_t off = 0; off < n; off += len)
            if (seg.count(off, len / 2) > 0 && seg.is_spc(off + len / 2, len / 2))
                add("3", {off + len / 2}, {});
    for (std::uint32_t off = 0; off + 4 <= n; off += 4)
        if (seg.matches(off, "0001"))
            add("5", {}, {off + 3});
    for (std::uint32_t off = 0; off + 16 <= n; off += 16) {
        if (seg.matches(off, "0000 0001 0001 0111"))
            add("6", {}, {off + 7});
        if (seg.matches(off, "0000 0001 0001 1111"))
            add("7", {}, {off + 7, off + 12});
    }
    return out;
}

} // namespace

CandidateLists propose_candidates(const PolarCode &code, const ReliabilityProfile &profile,
                                  const AlterationConfig &cfg)
{
    const std::size_t n = code.n_bits();
    if (profile.size() != n)
        throw CodeError("reliability profile length does not match the code");

    const auto order = profile.ascending_order();
    std::vector<std::uint32_t> frozen_desc, info_asc;
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (!code.is_info(*it))
            frozen_desc.push_back(*it);
    for (std::uint32_t i : order)
        if (code.is_info(i))
            info_asc.push_back(i);
    std::vector<std::uint32_t> frozen_rank(n, UINT32_MAX);
    for (std::uint32_t r = 0; r < frozen_desc.size(); ++r)
        frozen_rank[frozen_desc[r]] = r;

    CandidateLists out;
    std::set<std::uint32_t> fs, is;
    auto take = [&](SwapCandidate c) {
        std::erase_if(c.to_info, [&](std::uint32_t i) { return frozen_rank[i] >= cfg.frozen_rank_limit; });
        if (c.to_info.empty() && c.to_frozen.empty())
            return;
        fs.insert(c.to_info.begin(), c.to_info.end());
        is.insert(c.to_frozen.begin(), c.to_frozen.end());
        out.proposals.push_back(std::move(c));
    };
    if (cfg.use_criteria)
        for (SwapCandidate &c : detect_criteria(code))
            take(std::move(c));

    SwapCandidate window{{}, {}, "window"};
    for (std::size_t r = 0; r < cfg.window_h && r < frozen_desc.size(); ++r)
        window.to_info.push_back(frozen_desc[r]);
    for (std::size_t r = 0; r < cfg.window_h && r < info_asc.size(); ++r)
        window.to_frozen.push_back(info_asc[r]);
    if (!window.to_info.empty() || !window.to_frozen.empty()) {
        fs.insert(window.to_info.begin(), window.to_info.end());
        is.insert(window.to_frozen.begin(), window.to_frozen.end());
        out.proposals.push_back(std::move(window));
    }

    if (!cfg.user_to_info.empty() || !cfg.user_to_frozen.empty()) {
        for (std::uint32_t i : cfg.user_to_info)
            if (i >= n || code.is_info(i))
                throw CodeError("user position " + std::to_string(i) + " is not a frozen bit");
        for (std::uint32_t i : cfg.user_to_frozen)
            if (i >= n || !code.is_info(i))
                throw CodeError("user position " + std::to_string(i) +
                                " is not an information bit");
        fs.insert(cfg.user_to_info.begin(), cfg.user_to_info.end());
        is.insert(cfg.user_to_frozen.begin(), cfg.user_to_frozen.end());
        out.proposals.push_back({cfg.user_to_info, cfg.user_to_frozen, "user"});
    }

    out.frozen_side.assign(fs.begin(), fs.end());
    out.info_side.assign(is.begin(), is.end());
    const auto &rel = profile.per_bit;
    std::stable_sort(out.frozen_side.begin(), out.frozen_side.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return rel[a] > rel[b]; });
    std::stable_sort(out.info_side.begin(), out.info_side.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return rel[a] < rel[b]; });
    return out;
}

FerEstimator default_fer_estimator(const AlterationConfig &cfg)
{
    return [cfg](const PolarCode &code, std::uint64_t min_errors, std::uint64_t max_frames) {
        SimOptions opt;
        opt.min_errors = min_errors;
        opt.max_frames = max_frames;
        opt.seed = cfg.seed;
        opt.threads = cfg.threads;
        return run_fer(code, fastssc_factory(code, cfg.constraints, LlrArithmetic::floating()),
                       ChannelParams{cfg.eval_snr_db, code.rate()}, opt);
    };
}

namespace {

constexpr std::size_t max_group = 8;

/// Indices into the frozen-side and info-side lists, each sorted ascending.
struct Combo {
    std::array<std::uint16_t, max_group> f{};
    std::array<std::uint16_t, max_group> i{};
    std::uint8_t size = 0;
    std::uint64_t latency = 0;
    /// Union-bound estimate of the FER change; lower is safer.
    double risk = 0.0;

    std::uint64_t key_hash() const
    {
        std::uint64_t h = size;
        for (std::size_t k = 0; k < size; ++k)
            h = (h * 0x100000001b3ull) ^ (f[k] + 1) ^ (std::uint64_t{i[k] + 1u} << 20);
        return h;
    }
    bool same(const Combo &o) const
    {
        return size == o.size && std::equal(f.begin(), f.begin() + size, o.f.begin()) &&
               std::equal(i.begin(), i.begin() + size, o.i.begin());
    }
};

bool better(const Combo &a, const Combo &b)
{
    if (a.latency != b.latency)
        return a.latency < b.latency;
    return a.risk < b.risk;
}

/// Keeps the `cap` best combinations seen so far.
class BestList {
public:
    explicit BestList(std::size_t cap) : cap_(cap) {}
    bool full() const { return heap_.size() >= cap_; }
    /// Worst latency still admitted.
    std::uint64_t bound() const { return full() ? heap_.top().latency : UINT64_MAX; }
    void offer(const Combo &c)
    {
        if (!full()) {
            heap_.push(c);
        } else if (better(c, heap_.top())) {
            heap_.pop();
            heap_.push(c);
        }
    }
    std::vector<Combo> sorted() const
    {
        auto copy = heap_;
        std::vector<Combo> out;
        while (!copy.empty()) {
            out.push_back(copy.top());
            copy.pop();
        }
        std::reverse(out.begin(), out.end());
        return out;
    }

private:
    struct Worse {
        bool operator()(const Combo &a, const Combo &b) const { return better(a, b); }
    };
    std::size_t cap_;
    std::priority_queue<Combo, std::vector<Combo>, Worse> heap_;
};

double binomial(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0.0;
    double r = 1.0;
    for (std::size_t j = 1; j <= k; ++j)
        r = r * static_cast<double>(n - k + j) / static_cast<double>(j);
    return r;
}

/// Visits every k-subset of [0, n) as an ascending index vector.
template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn &&fn)
{
    if (k > n)
        return;
    std::vector<std::uint16_t> idx(k);
    for (std::size_t j = 0; j < k; ++j)
        idx[j] = static_cast<std::uint16_t>(j);
    while (true) {
        fn(idx);
        std::size_t j = k;
        while (j > 0 && idx[j - 1] == n - k + j - 1)
            --j;
        if (j == 0)
            return;
        ++idx[j - 1];
        for (std::size_t t = j; t < k; ++t)
            idx[t] = static_cast<std::uint16_t>(idx[t - 1] + 1);
    }
}

class ComboSearch {
public:
    ComboSearch(const PolarCode &code, const ReliabilityProfile &profile, const CandidateLists &lists,
                const AlterationConfig &cfg)
        : cfg_(cfg), eval_(code, cfg.constraints, cfg.cost), fs_(lists.frozen_side),
          is_(lists.info_side)
    {
        // probability that a bit channel with mean LLR m decides wrongly
        auto pe = [&](std::uint32_t b) { return 0.5 * std::erfc(std::sqrt(profile.per_bit[b]) / 2); };
        for (std::uint32_t b : fs_)
            risk_f_.push_back(pe(b));
        for (std::uint32_t b : is_)
            risk_i_.push_back(pe(b));
    }

    std::uint64_t base() const { return eval_.base_cycles(); }
    std::uint64_t evaluations() const { return evaluations_; }

    std::vector<Combo> run()
    {
        BestList pool(cfg_.list_size);
        std::vector<Combo> beam;
        const std::size_t levels = std::min<std::size_t>(
            {static_cast<std::size_t>(cfg_.max_swaps), fs_.size(), is_.size()});
        for (std::size_t s = 1; s <= levels; ++s) {
            BestList level(std::max(cfg_.beam_width, cfg_.list_size));
            const double total = binomial(fs_.size(), s) * binomial(is_.size(), s);
            if (total <= static_cast<double>(cfg_.exhaustive_limit))
                exhaustive(s, level);
            else
                extend(beam, level);
            std::vector<Combo> found = level.sorted();
            for (const Combo &c : found)
                pool.offer(c);
            beam.assign(found.begin(),
                        found.begin() + static_cast<std::ptrdiff_t>(std::min(found.size(), cfg_.beam_width)));
        }
        return pool.sorted();
    }

private:
    void evaluate(Combo &c)
    {
        std::array<std::uint32_t, 2 * max_group> flips{};
        c.risk = 0.0;
        for (std::size_t k = 0; k < c.size; ++k) {
            flips[2 * k] = fs_[c.f[k]];
            flips[2 * k + 1] = is_[c.i[k]];
            c.risk += risk_f_[c.f[k]] - risk_i_[c.i[k]];
        }
        c.latency = eval_.cycles_with_flips(std::span(flips.data(), 2 * c.size));
        ++evaluations_;
    }

    void exhaustive(std::size_t s, BestList &level)
    {
        Combo c;
        c.size = static_cast<std::uint8_t>(s);
        for_each_subset(fs_.size(), s, [&](const std::vector<std::uint16_t> &fi) {
            std::copy(fi.begin(), fi.end(), c.f.begin());
            for_each_subset(is_.size(), s, [&](const std::vector<std::uint16_t> &ii) {
                std::copy(ii.begin(), ii.end(), c.i.begin());
                evaluate(c);
                level.offer(c);
            });
        });
    }

    void extend(const std::vector<Combo> &beam, BestList &level)
    {
        struct Hash {
            std::size_t operator()(const Combo &c) const { return c.key_hash(); }
        };
        struct Eq {
            bool operator()(const Combo &a, const Combo &b) const { return a.same(b); }
        };
        std::unordered_set<Combo, Hash, Eq> seen;
        for (const Combo &b : beam) {
            for (std::uint16_t nf = 0; nf < fs_.size(); ++nf) {
                if (std::find(b.f.begin(), b.f.begin() + b.size, nf) != b.f.begin() + b.size)
                    continue;
                for (std::uint16_t ni = 0; ni < is_.size(); ++ni) {
                    if (std::find(b.i.begin(), b.i.begin() + b.size, ni) != b.i.begin() + b.size)
                        continue;
                    Combo c = b;
                    c.f[c.size] = nf;
                    c.i[c.size] = ni;
                    ++c.size;
                    std::sort(c.f.begin(), c.f.begin() + c.size);
                    std::sort(c.i.begin(), c.i.begin() + c.size);
                    if (!seen.insert(c).second)
                        continue;
                    evaluate(c);
                    level.offer(c);
                }
            }
        }
    }

    const AlterationConfig &cfg_;
    LatencyEvaluator eval_;
    std::vector<std::uint32_t> fs_, is_;
    std::vector<double> risk_f_, risk_i_;
    std::uint64_t evaluations_ = 0;
};

ParetoEntry make_entry(const PolarCode &base, SwapCandidate swaps, std::uint64_t latency)
{
    BitVec mask = base.info_mask();
    for (std::uint32_t b : swaps.to_info)
        mask[b] = 1;
    for (std::uint32_t b : swaps.to_frozen)
        mask[b] = 0;
    std::sort(swaps.to_info.begin(), swaps.to_info.end());
    std::sort(swaps.to_frozen.begin(), swaps.to_frozen.end());
    ParetoEntry e;
    e.code = PolarCode(std::move(mask));
    e.latency_cc = latency;
    e.swaps = std::move(swaps);
    return e;
}

void apply_fer(ParetoEntry &e, const SimResult &r, std::uint64_t wanted_errors)
{
    e.fer = r.fer();
    e.frames = r.frames;
    e.frame_errors = r.frame_errors;
    e.low_confidence = r.frame_errors < wanted_errors;
}

std::vector<ParetoEntry> pareto(std::vector<ParetoEntry> entries)
{
    std::stable_sort(entries.begin(), entries.end(), [](const ParetoEntry &a, const ParetoEntry &b) {
        if (a.latency_cc != b.latency_cc)
            return a.latency_cc < b.latency_cc;
        return a.fer < b.fer;
    });
    std::vector<ParetoEntry> front;
    for (ParetoEntry &e : entries)
        if (front.empty() || e.fer < front.back().fer)
            front.push_back(std::move(e));
    return front;
}

} // namespace

AlterationResult search(const PolarCode &code, const ReliabilityProfile &profile,
                        const AlterationConfig &cfg, const FerEstimator &fer)
{
    cfg.validate();
    const FerEstimator estimate = fer ? fer : default_fer_estimator(cfg);

    AlterationResult result;
    result.candidates = propose_candidates(code, profile, cfg);
    const auto &fs = result.candidates.frozen_side;
    const auto &is = result.candidates.info_side;
    if (fs.size() >= 0xffff || is.size() >= 0xffff)
        throw std::invalid_argument("candidate lists are too long");

    ComboSearch combos(code, profile, result.candidates, cfg);
    std::vector<Combo> pool;
    if (!fs.empty() && !is.empty())
        pool = combos.run();
    result.latency_evaluations = combos.evaluations();

    result.unaltered = make_entry(code, {{}, {}, "unaltered"}, combos.base());
    apply_fer(result.unaltered, estimate(code, cfg.fer_errors, cfg.fer_frames), cfg.fer_errors);
    ++result.fer_evaluations;

    // one simulated winner per latency value strictly below the unaltered code
    std::map<std::uint64_t, std::vector<const Combo *>> by_latency;
    for (const Combo &c : pool)
        if (c.latency < combos.base())
            by_latency[c.latency].push_back(&c);

    std::vector<ParetoEntry> entries{result.unaltered};
    for (auto &[lat, group] : by_latency) {
        std::stable_sort(group.begin(), group.end(),
                         [](const Combo *a, const Combo *b) { return a->risk < b->risk; });
        std::optional<ParetoEntry> best;
        for (std::size_t g = 0; g < group.size() && g < cfg.fer_per_latency; ++g) {
            const Combo &c = *group[g];
            SwapCandidate sw{{}, {}, "search"};
            for (std::size_t k = 0; k < c.size; ++k) {
                sw.to_info.push_back(fs[c.f[k]]);
                sw.to_frozen.push_back(is[c.i[k]]);
            }
            ParetoEntry e = make_entry(code, std::move(sw), lat);
            apply_fer(e, estimate(e.code, cfg.fer_errors, cfg.fer_frames), cfg.fer_errors);
            ++result.fer_evaluations;
            if (!best || e.fer < best->fer)
                best = std::move(e);
        }
        entries.push_back(std::move(*best));
    }

    std::vector<ParetoEntry> front = pareto(std::move(entries));
    if (cfg.final_fer_errors > 0) {
        for (ParetoEntry &e : front) {
            apply_fer(e, estimate(e.code, cfg.final_fer_errors, cfg.final_fer_frames),
                      cfg.final_fer_errors);
            ++result.fer_evaluations;
            if (e.swaps.to_info.empty())
                result.unaltered = e;
        }
        if (std::none_of(front.begin(), front.end(),
                         [](const ParetoEntry &e) { return e.swaps.to_info.empty(); })) {
            apply_fer(result.unaltered,
                      estimate(code, cfg.final_fer_errors, cfg.final_fer_frames),
                      cfg.final_fer_errors);
            ++result.fer_evaluations;
        }
        front = pareto(std::move(front));
    }
    result.front = std::move(front);
    return result;
}

const ParetoEntry &select_entry(const AlterationResult &result, double max_fer_ratio)
{
    const double limit = max_fer_ratio * result.unaltered.fer;
    for (const ParetoEntry &e : result.front)
        if (e.fer <= limit)
            return e;
    return result.unaltered;
}

std::string front_to_json(const std::vector<ParetoEntry> &front)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const ParetoEntry &e : front) {
        nlohmann::ordered_json j;
        j["frozen_mask"] = bits_to_hex(e.code.info_mask());
        j["latency_cc"] = e.latency_cc;
        j["fer"] = e.fer;
        j["frames"] = e.frames;
        j["frame_errors"] = e.frame_errors;
        j["low_confidence"] = e.low_confidence;
        j["swaps"] = {{"to_info", e.swaps.to_info}, {"to_frozen", e.swaps.to_frozen}};
        arr.push_back(j);
    }
    return arr.dump(2);
}

} // namespace fastssc
