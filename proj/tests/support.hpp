#pragma once

#include "fastssc/llr.hpp"
#include "fastssc/polar_code.hpp"

#include <random>
#include <vector>

namespace fastssc::test {

// Random multiples of `step` in [-lim, lim]; small grids make ties common.
inline std::vector<Llr> grid_llrs(std::mt19937_64 &rng, std::size_t n, double lim, double step)
{
    const int m = static_cast<int>(lim / step);
    std::uniform_int_distribution<int> d(-m, m);
    std::vector<Llr> v(n);
    for (auto &x : v)
        x = d(rng) * step;
    return v;
}

inline BitVec random_bits(std::mt19937_64 &rng, std::size_t n)
{
    BitVec b(n);
    for (auto &x : b)
        x = static_cast<Bit>(rng() & 1u);
    return b;
}

inline PolarCode random_code(std::mt19937_64 &rng, std::size_t n)
{
    std::bernoulli_distribution p(std::uniform_real_distribution<double>(0.1, 0.9)(rng));
    BitVec mask(n);
    for (auto &x : mask)
        x = p(rng) ? 1 : 0;
    return PolarCode(mask);
}

inline double correlation(const std::vector<Llr> &llr, const BitVec &x)
{
    double m = 0;
    for (std::size_t i = 0; i < llr.size(); ++i)
        m += x[i] ? -llr[i] : llr[i];
    return m;
}

// Exhaustive ML over a list of codewords, ties to the lexicographically
// smallest word.
inline BitVec ml_over(const std::vector<BitVec> &words, const std::vector<Llr> &llr)
{
    const BitVec *best = nullptr;
    double best_m = 0;
    for (const auto &w : words) {
        const double m = correlation(llr, w);
        if (!best || m > best_m || (m == best_m && w < *best)) {
            best = &w;
            best_m = m;
        }
    }
    return *best;
}

// Wagner brute force: every even-weight word of length n <= 16. The word
// is tracked as an integer with index 0 in the top bit so integer order is
// lexicographic order.
inline BitVec spc_brute_force(const std::vector<Llr> &llr)
{
    const unsigned n = static_cast<unsigned>(llr.size());
    const std::uint32_t count = 1u << (n - 1);
    auto bit_of = [n](unsigned i) { return 1u << (n - 1 - i); };
    std::uint32_t word = 0;
    double metric = 0;
    for (double v : llr)
        metric += v;
    std::uint32_t best = 0;
    double best_m = metric;
    for (std::uint32_t g = 1; g < count; ++g) {
        const unsigned j = static_cast<unsigned>(__builtin_ctz(g));
        for (unsigned i : {j, n - 1}) {
            metric += (word & bit_of(i)) ? 2 * llr[i] : -2 * llr[i];
            word ^= bit_of(i);
        }
        if (metric > best_m || (metric == best_m && word < best)) {
            best = word;
            best_m = metric;
        }
    }
    BitVec out(n);
    for (unsigned i = 0; i < n; ++i)
        out[i] = (best & bit_of(i)) ? 1 : 0;
    return out;
}

} // namespace fastssc::test
