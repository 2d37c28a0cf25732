#include "fastssc/alteration.hpp"
#include "fastssc/program.hpp"

#include <doctest.h>

#include <algorithm>
#include <json.hpp>

using namespace fastssc;

namespace {

bool has(const std::vector<std::uint32_t> &v, std::uint32_t x)
{
    return std::find(v.begin(), v.end(), x) != v.end();
}

const SwapCandidate *find_criterion(const CandidateLists &l, const std::string &id)
{
    for (const auto &p : l.proposals)
        if (p.criterion == id)
            return &p;
    return nullptr;
}

AlterationConfig criteria_only()
{
    AlterationConfig cfg;
    cfg.window_h = 0;
    return cfg;
}

// FER grows with the distance from the base mask, so the unaltered code is
// always the most reliable entry.
FerEstimator distance_fer(const PolarCode &base)
{
    return [base](const PolarCode &c, std::uint64_t, std::uint64_t) {
        SimResult r;
        r.frames = 10000;
        r.frame_errors = 100;
        for (std::size_t i = 0; i < c.n_bits(); ++i)
            r.frame_errors += 10 * (c.info_mask()[i] != base.info_mask()[i]);
        return r;
    };
}

} // namespace

TEST_CASE("repetition leaf holding the weakest information bit")
{
    PolarCode code(bits_from_string("0001 0001 0001 1111"));
    auto profile = compute_reliabilities(16, 2.5, 0.5);
    auto lists = propose_candidates(code, profile, criteria_only());
    const auto *c5 = find_criterion(lists, "5");
    REQUIRE(c5);
    CHECK(c5->to_frozen == std::vector<std::uint32_t>{3});
    REQUIRE_FALSE(lists.info_side.empty());
    CHECK(lists.info_side.front() == 3);
    CHECK(has(lists.info_side, 7));
}

TEST_CASE("pattern detectors")
{
    auto profile = compute_reliabilities(16, 2.5, 0.5);
    auto lists_for = [&](const char *mask) {
        return propose_candidates(PolarCode(bits_from_string(mask)), profile, criteria_only());
    };

    auto l1 = lists_for("0000 0000 0011 1111");
    REQUIRE(find_criterion(l1, "1"));
    CHECK(find_criterion(l1, "1")->to_info == std::vector<std::uint32_t>{9});

    auto l2 = lists_for("0000 0000 0001 0111");
    REQUIRE(find_criterion(l2, "2"));
    CHECK(find_criterion(l2, "2")->to_info == std::vector<std::uint32_t>{9, 10, 12});
    REQUIRE(find_criterion(l2, "6") == nullptr);

    auto l4 = lists_for("0000 0011 0111 1111");
    REQUIRE(find_criterion(l4, "4"));
    CHECK(find_criterion(l4, "4")->to_frozen == std::vector<std::uint32_t>{6});
    // SPC right half under a non-trivial left half
    REQUIRE(find_criterion(l4, "3"));
    CHECK(find_criterion(l4, "3")->to_info == std::vector<std::uint32_t>{8});

    auto l6 = lists_for("0000 0001 0001 0111");
    REQUIRE(find_criterion(l6, "6"));
    CHECK(find_criterion(l6, "6")->to_frozen == std::vector<std::uint32_t>{7});

    auto l7 = lists_for("0000 0001 0001 1111");
    REQUIRE(find_criterion(l7, "7"));
    CHECK(find_criterion(l7, "7")->to_frozen == std::vector<std::uint32_t>{7, 12});
}

TEST_CASE("window and user lists")
{
    PolarCode code = construct_code(8, 3, 2.5);
    auto profile = compute_reliabilities(8, 2.5, 3.0 / 8);
    AlterationConfig cfg;
    cfg.use_criteria = false;
    cfg.window_h = 1;
    auto l = propose_candidates(code, profile, cfg);
    CHECK(l.frozen_side == std::vector<std::uint32_t>{3});
    CHECK(l.info_side == std::vector<std::uint32_t>{5});

    cfg.user_to_info = {4};
    cfg.user_to_frozen = {6};
    l = propose_candidates(code, profile, cfg);
    CHECK(l.frozen_side == std::vector<std::uint32_t>{3, 4});
    CHECK(has(l.info_side, 6));

    cfg.user_to_info = {5};
    CHECK_THROWS_AS(propose_candidates(code, profile, cfg), CodeError);
    cfg.user_to_info = {};
    cfg.user_to_frozen = {0};
    CHECK_THROWS_AS(propose_candidates(code, profile, cfg), CodeError);
}

TEST_CASE("empty candidate lists leave only the unaltered code")
{
    PolarCode code = construct_code(64, 32, 2.5);
    auto profile = compute_reliabilities(64, 2.5, 0.5);
    AlterationConfig cfg;
    cfg.use_criteria = false;
    cfg.window_h = 0;
    auto r = search(code, profile, cfg, distance_fer(code));
    REQUIRE(r.front.size() == 1);
    CHECK(r.front[0].code == code);
    CHECK(r.front[0].swap_count() == 0);
    CHECK(r.unaltered.latency_cc == tree_cycles(code, cfg.constraints, cfg.cost));
}

TEST_CASE("search front properties")
{
    PolarCode code = construct_code(256, 128, 2.5);
    auto profile = compute_reliabilities(256, 2.5, 0.5);
    for (auto constraints : {TreeConstraints::original(), TreeConstraints::extended()}) {
        AlterationConfig cfg;
        cfg.max_swaps = 3;
        cfg.window_h = 8;
        cfg.constraints = constraints;
        auto r = search(code, profile, cfg, distance_fer(code));
        REQUIRE_FALSE(r.front.empty());
        CHECK(r.front.back().code == code);
        CHECK(r.latency_evaluations > 0);
        for (std::size_t i = 0; i < r.front.size(); ++i) {
            const auto &e = r.front[i];
            CHECK(e.code.k_info() == code.k_info());
            CHECK(e.swap_count() <= cfg.max_swaps);
            CHECK(e.swaps.to_info.size() == e.swaps.to_frozen.size());
            CHECK(e.latency_cc == latency(compile(build_tree(e.code, constraints)), cfg.cost).cycles);
            if (i > 0) {
                CHECK(e.latency_cc > r.front[i - 1].latency_cc);
                CHECK(e.fer < r.front[i - 1].fer);
            }
        }
        CHECK(r.front.front().latency_cc < r.unaltered.latency_cc);
        CHECK(&select_entry(r, 1.0) == &r.front.back());
        CHECK(select_entry(r, 100.0).latency_cc == r.front.front().latency_cc);

        auto j = nlohmann::json::parse(front_to_json(r.front));
        REQUIRE(j.size() == r.front.size());
        CHECK(j[0]["latency_cc"] == r.front[0].latency_cc);
        CHECK(bits_from_hex(j[0]["frozen_mask"].get<std::string>(), 256) ==
              r.front[0].code.info_mask());
    }
}

TEST_CASE("default estimator runs real simulations")
{
    PolarCode code = construct_code(64, 32, 2.5);
    auto profile = compute_reliabilities(64, 2.5, 0.5);
    AlterationConfig cfg;
    cfg.max_swaps = 2;
    cfg.window_h = 4;
    cfg.fer_errors = 20;
    cfg.fer_frames = 20000;
    cfg.final_fer_errors = 0;
    auto a = search(code, profile, cfg);
    auto b = search(code, profile, cfg);
    REQUIRE(a.front.size() == b.front.size());
    for (std::size_t i = 0; i < a.front.size(); ++i) {
        CHECK(a.front[i].code == b.front[i].code);
        CHECK(a.front[i].frame_errors == b.front[i].frame_errors);
    }
    CHECK(a.unaltered.frame_errors >= 20);
}

TEST_CASE("configuration limits")
{
    AlterationConfig cfg;
    cfg.max_swaps = 9;
    CHECK_THROWS(cfg.validate());
    cfg.max_swaps = 0;
    CHECK_THROWS(cfg.validate());
    cfg.max_swaps = 5;
    cfg.fer_errors = 0;
    CHECK_THROWS(cfg.validate());
}
