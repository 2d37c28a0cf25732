/*------------------------------------------------------------------------
Linear instruction program compiled from a decoder tree

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

#include "fastssc/tree.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fastssc {

enum class Opcode : std::uint8_t {
    f,
    g,
    g_0r,
    combine,
    combine_0r,
    rep,
    spc,
    repspc,
    rep1,
    ml01,
    zero_01,
    zero_repspc,
    zero_spc,
    rate1_sign,
};

inline constexpr std::size_t opcode_count = 14;

std::string_view to_string(Opcode op);
std::optional<Opcode> opcode_from_string(std::string_view name);
bool is_leaf_opcode(Opcode op);

/// One processing-unit operation on the node covering [offset, offset + nv).
/// stage is the tree depth of that node, log2(N / nv). F/G/Combine have
/// nv >= 2; leaf operations may have nv == 1 (a lone rate-1 bit).
struct Instruction {
    Opcode op = Opcode::f;
    std::uint32_t nv = 0;
    std::uint32_t offset = 0;
    std::uint32_t stage = 0;

    friend bool operator==(const Instruction &, const Instruction &) = default;
};

struct Program {
    std::size_t n_bits = 0;
    std::size_t k_info = 0;
    std::vector<Instruction> instructions;

    friend bool operator==(const Program &, const Program &) = default;
};

/// Depth-first SC schedule: F, left, G, right, Combine; 0R nodes use
/// G_0R / Combine_0R and skip the left child; a rate-0 right child needs
/// only F and the left child.
Program compile(const DecoderTree &tree);

/// One instruction per line: "<OPCODE> nv=<int> off=<int>".
std::string program_to_text(const Program &program);
/// Parses and validates against the code the program is meant for.
Program program_from_text(std::string_view text, const PolarCode &code);

} // namespace fastssc
