#include "fastssc/node_decoders.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace fastssc;
using test::grid_llrs;

namespace {

using Llrs = std::vector<Llr>;

Llrs f_half(const Llrs &a)
{
    const std::size_t h = a.size() / 2;
    Llrs out(h);
    for (std::size_t i = 0; i < h; ++i)
        out[i] = f_op(a[i], a[i + h]);
    return out;
}

Llrs g_half(const Llrs &a, const BitVec &beta, const LlrArithmetic &arith)
{
    const std::size_t h = a.size() / 2;
    Llrs out(h);
    for (std::size_t i = 0; i < h; ++i)
        out[i] = g_op(a[i], a[i + h], beta[i], arith);
    return out;
}

BitVec unfused_repspc(const Llrs &a, const LlrArithmetic &arith)
{
    BitVec l = decode_rep(f_half(a), arith);
    return combine(l, decode_spc(g_half(a, l, arith)));
}

BitVec unfused_rep1(const Llrs &a, const LlrArithmetic &arith)
{
    BitVec l = decode_rep(f_half(a), arith);
    return combine(l, decode_rate1(g_half(a, l, arith), arith));
}

template <class Inner>
BitVec unfused_zero(const Llrs &a, const LlrArithmetic &arith, Inner inner)
{
    BitVec r = inner(g_half(a, BitVec(a.size() / 2, 0), arith));
    return combine(BitVec(r.size(), 0), r);
}

const LlrArithmetic q651 = LlrArithmetic::parse("6.5.1");

} // namespace

TEST_CASE("repetition examples")
{
    CHECK(decode_rep(Llrs{0.5, -1.0, 2.0, -0.25}) == BitVec(4, 0));
    CHECK(decode_rep(Llrs{-0.5, -1.0, -2.0, -0.25}) == BitVec(4, 1));
    CHECK(decode_rep(Llrs{1.0, -1.0}) == BitVec(2, 0));
}

TEST_CASE("repetition is ML")
{
    std::mt19937_64 rng(1);
    for (std::size_t n : {2u, 4u, 8u, 16u, 32u})
        for (int t = 0; t < 2000; ++t) {
            Llrs a = grid_llrs(rng, n, 7.5, 0.5);
            CHECK(decode_rep(a) == test::ml_over({BitVec(n, 0), BitVec(n, 1)}, a));
        }
}

TEST_CASE("repetition saturates in the adder tree")
{
    // partial sums clip at the internal limit
    Llrs a{15.5, 15.5, -15.5, -15.0};
    CHECK(decode_rep(a) == BitVec(4, 0));
    CHECK(decode_rep(a, q651) == BitVec(4, 0));
    Llrs b{15.5, 1.0, -15.5, -0.5};
    CHECK(decode_rep(b, q651) == BitVec(4, 0));
}

TEST_CASE("spc examples")
{
    CHECK(decode_spc(Llrs{-1.0, 2.0, 3.0, 4.0}) == BitVec{0, 0, 0, 0});
    CHECK(decode_spc(Llrs{-1.0, -2.0, 3.0, 4.0}) == BitVec{1, 1, 0, 0});
    CHECK(decode_spc(Llrs{1.0, 2.0, 3.0, 4.0}) == BitVec(4, 0));
    // tie between a 1 and a 0 at minimum magnitude: flip the 1
    CHECK(decode_spc(Llrs{1.0, -1.0, 3.0, 4.0}) == BitVec{0, 0, 0, 0});
    // zeros decide 0; flipping the last zero keeps the word smallest
    CHECK(decode_spc(Llrs{0.0, -2.0, 0.0, 4.0}) == BitVec{0, 1, 1, 0});
}

TEST_CASE("spc equals Wagner brute force")
{
    std::mt19937_64 rng(2);
    for (std::size_t n : {4u, 8u, 16u}) {
        const int trials = n == 16 ? 300 : 3000;
        for (int t = 0; t < trials; ++t) {
            Llrs a = grid_llrs(rng, n, n == 4 ? 1.5 : 7.5, 0.5);
            BitVec got = decode_spc(a);
            CHECK(got == test::spc_brute_force(a));
        }
    }
}

TEST_CASE("ml01 examples and exhaustive grid")
{
    CHECK(decode_ml01(Llrs{3, -2, 1, -1}) == BitVec{0, 1, 0, 1});
    CHECK(decode_ml01(Llrs{1, 1, 1, 1}) == BitVec{0, 0, 0, 0});
    CHECK(decode_ml01(Llrs{-5, -5, -5, -5}) == BitVec{1, 1, 1, 1});

    const std::vector<BitVec> words{{0, 0, 0, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}, {1, 1, 1, 1}};
    const double grid[] = {-2, -1, -0.5, 0, 0.5, 1, 2};
    for (double a : grid)
        for (double b : grid)
            for (double c : grid)
                for (double d : grid) {
                    Llrs v{a, b, c, d};
                    CHECK(decode_ml01(v) == test::ml_over(words, v));
                    CHECK(decode_ml01(v, q651) == test::ml_over(words, v));
                }
}

TEST_CASE("rate-1 decisions")
{
    CHECK(decode_rate1(Llrs{1, -1, -0.5, 2}) == BitVec{0, 1, 1, 0});
    CHECK(decode_rate1(Llrs{-3}) == BitVec{1});
}

TEST_CASE("fused decoder examples")
{
    Llrs v{1, 1, 1, 1, -3, -3, -3, -3};
    CHECK(decode_repspc(v) == BitVec{0, 0, 0, 0, 1, 1, 1, 1});
    CHECK(decode_rep1(v) == BitVec{0, 0, 0, 0, 1, 1, 1, 1});
    CHECK(decode_repspc(Llrs(8, 4.0)) == BitVec(8, 0));
    CHECK(decode_rep1(Llrs(8, 4.0)) == BitVec(8, 0));

    CHECK(decode_zero_spc(Llrs{-1, 2, 3, 4, 5, 6, 7, 8}) == BitVec(8, 0));
    CHECK(decode_zero_spc(Llrs(32, 8.0)) == BitVec(32, 0));
    CHECK(decode_zero_01(Llrs{1, 1, 1, 1, 2, -3, 0.5, -0.5}) == BitVec{0, 1, 0, 1, 0, 1, 0, 1});

    CHECK_THROWS(decode_ml01(Llrs{1, 2}));
    CHECK_THROWS(decode_repspc(Llrs(16, 1.0)));
    CHECK_THROWS(decode_zero_repspc(Llrs(8, 1.0)));
}

TEST_CASE("fused decoders equal their unfused sequences")
{
    std::mt19937_64 rng(3);
    for (const auto &arith : {LlrArithmetic{}, q651}) {
        const double lim = arith.is_fixed() ? 15.5 : 7.5;
        for (int t = 0; t < 5000; ++t) {
            Llrs a8 = grid_llrs(rng, 8, lim, 0.5);
            Llrs a16 = grid_llrs(rng, 16, lim, 0.5);
            CHECK(decode_repspc(a8, arith) == unfused_repspc(a8, arith));
            CHECK(decode_rep1(a8, arith) == unfused_rep1(a8, arith));
            CHECK(decode_zero_01(a8, arith) ==
                  unfused_zero(a8, arith, [&](const Llrs &x) { return decode_ml01(x, arith); }));
            CHECK(decode_zero_spc(a16, arith) ==
                  unfused_zero(a16, arith, [](const Llrs &x) { return decode_spc(x); }));
            CHECK(decode_zero_repspc(a16, arith) ==
                  unfused_zero(a16, arith, [&](const Llrs &x) { return decode_repspc(x, arith); }));
        }
    }
}

TEST_CASE("spc output has even parity")
{
    std::mt19937_64 rng(4);
    for (int t = 0; t < 2000; ++t) {
        Llrs a = grid_llrs(rng, std::size_t{4} << (t % 6), 7.5, 0.5);
        BitVec b = decode_spc(a);
        int w = 0;
        for (Bit x : b)
            w += x;
        CHECK(w % 2 == 0);
    }
}
