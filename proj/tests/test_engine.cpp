#include "fastssc/construction.hpp"
#include "fastssc/engine.hpp"
#include "fastssc/program.hpp"
#include "fastssc/sc_reference.hpp"
#include "fastssc/simulation.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace fastssc;

namespace {

const TreeConstraints no_spc_family = TreeConstraints::extended()
                                          .without(NodeKind::spc)
                                          .without(NodeKind::repspc)
                                          .without(NodeKind::zero_spc)
                                          .without(NodeKind::zero_repspc)
                                          .without(NodeKind::ml01)
                                          .without(NodeKind::zero_01);

std::vector<Llr> noiseless(const BitVec &x, double mag = 8.0)
{
    std::vector<Llr> l(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        l[i] = x[i] ? -mag : mag;
    return l;
}

} // namespace

TEST_CASE("sc reference on a two-bit code")
{
    PolarCode code(bits_from_string("0001"));
    // N = 4 version of the (2,1) example: F forces the frozen bits, G sums
    CHECK(sc_decode_reference(code, std::vector<Llr>{1.0, -3.0, 1.0, -3.0}) == BitVec{1, 1, 1, 1});
    CHECK(sc_decode_reference(code, std::vector<Llr>{1.0, -0.5, 1.0, -0.5}) == BitVec{0, 0, 0, 0});
    CHECK_THROWS(sc_decode_reference(code, std::vector<Llr>{1.0}));
}

TEST_CASE("noiseless frames decode to the transmitted codeword")
{
    std::mt19937_64 rng(9);
    for (auto [n, k] : {std::pair{8, 3}, {64, 32}, {1024, 512}, {2048, 683}}) {
        PolarCode code = construct_code(n, k, 2.5);
        for (auto c : {TreeConstraints::original(), TreeConstraints::extended()}) {
            Program prog = compile(build_tree(code, c));
            Workspace ws(code.n_bits());
            int wrong = 0;
            for (int t = 0; t < 2000; ++t) {
                BitVec m = test::random_bits(rng, code.k_info());
                BitVec x = encode_systematic(code, m);
                wrong += extract_message(code, execute(prog, noiseless(x), ws)) != m;
                if (t < 20)
                    CHECK(sc_decode_reference(code, noiseless(x)) == x);
            }
            CHECK(wrong == 0);
        }
    }
}

TEST_CASE("(8,3) single-instruction program")
{
    PolarCode code = construct_code(8, 3, 2.5);
    Program prog = compile(build_tree(code));
    Workspace ws(8);
    std::vector<Llr> llr{-1, 2, 3, 4, 5, 6, 7, 8};
    CHECK(execute(prog, llr, ws) == BitVec(8, 0));
    CHECK_THROWS(execute(prog, std::vector<Llr>(16, 1.0), ws));
}

TEST_CASE("program execution matches the recursive tree walk")
{
    std::mt19937_64 rng(31);
    for (int t = 0; t < 150; ++t) {
        PolarCode code = test::random_code(rng, std::size_t{4} << (rng() % 7));
        for (auto c : {TreeConstraints::original(), TreeConstraints::extended()}) {
            auto tree = build_tree(code, c);
            Program prog = compile(tree);
            Workspace ws(code.n_bits());
            for (const auto &arith : {LlrArithmetic{}, LlrArithmetic::parse("6.5.1")}) {
                for (int f = 0; f < 10; ++f) {
                    auto llr = test::grid_llrs(rng, code.n_bits(), 7.5, 0.5);
                    CHECK(execute(prog, llr, ws, arith) == decode_tree(tree, llr, arith));
                }
            }
        }
    }
}

TEST_CASE("without parity-family nodes decoding equals SC")
{
    std::mt19937_64 rng(37);
    const auto q = LlrArithmetic::parse("6.5.1");
    int compared = 0;
    for (int t = 0; t < 100; ++t) {
        PolarCode code = test::random_code(rng, std::size_t{16} << (rng() % 5));
        Program prog = compile(build_tree(code, no_spc_family));
        Workspace ws(code.n_bits());
        for (int f = 0; f < 100; ++f) {
            auto llr = test::grid_llrs(rng, code.n_bits(), 7.5, 0.5);
            CHECK(execute(prog, llr, ws, q) == sc_decode_reference(code, llr, q));
            ++compared;
        }
    }
    CHECK(compared == 10000);
}

TEST_CASE("spc ties can differ from SC but both are ML words")
{
    PolarCode code = construct_code(8, 3, 2.5);
    std::vector<Llr> llr{1, -2, 0.5, 1, -1, 2, -3, 1};
    BitVec fast = execute(compile(build_tree(code)), llr, *std::make_unique<Workspace>(8));
    BitVec sc = sc_decode_reference(code, llr);
    CHECK(bits_to_string(fast) == "01100110");
    CHECK(bits_to_string(sc) == "10101010");
    CHECK(test::correlation(llr, fast) == test::correlation(llr, sc));
}

TEST_CASE("frame decoders")
{
    PolarCode code = construct_code(256, 128, 2.5);
    auto fast = fastssc_factory(code, TreeConstraints::original(), LlrArithmetic{})();
    auto sc = sc_reference_factory(code, LlrArithmetic{})();
    CHECK(fast->n_bits() == 256);
    std::mt19937_64 rng(41);
    BitVec x = encode_systematic(code, test::random_bits(rng, 128));
    BitVec a(256), b(256);
    fast->decode(noiseless(x, 2.0), a);
    sc->decode(noiseless(x, 2.0), b);
    CHECK(a == x);
    CHECK(b == x);
}
