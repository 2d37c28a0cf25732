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
#include "fastssc/program.hpp"

#include <array>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace fastssc {

namespace {

constexpr std::array<std::string_view, opcode_count> opcode_names = {
    "F",   "G",    "G_0R", "COMBINE", "COMBINE_0R", "REP",         "SPC",
    "REPSPC", "REP1", "ML01", "ZERO_01", "ZERO_REPSPC", "ZERO_SPC", "RATE1_SIGN",
};

Opcode leaf_opcode(NodeKind kind)
{
    switch (kind) {
    case NodeKind::rate1: return Opcode::rate1_sign;
    case NodeKind::rep: return Opcode::rep;
    case NodeKind::spc: return Opcode::spc;
    case NodeKind::repspc: return Opcode::repspc;
    case NodeKind::rep1: return Opcode::rep1;
    case NodeKind::zero_spc: return Opcode::zero_spc;
    case NodeKind::zero_repspc: return Opcode::zero_repspc;
    case NodeKind::ml01: return Opcode::ml01;
    case NodeKind::zero_01: return Opcode::zero_01;
    default: break;
    }
    throw std::logic_error("node kind has no leaf opcode");
}

class Emitter {
public:
    Emitter(const DecoderTree &tree, Program &out) : tree_(tree), out_(out) {}

    void node(const TreeNode &n)
    {
        if (n.leaf()) {
            if (n.kind != NodeKind::rate0)
                emit(leaf_opcode(n.kind), n);
            return;
        }
        const TreeNode &l = tree_.node(n.left);
        const TreeNode &r = tree_.node(n.right);
        if (n.kind == NodeKind::zero_r) {
            emit(Opcode::g_0r, n);
            node(r);
            emit(Opcode::combine_0r, n);
            return;
        }
        emit(Opcode::f, n);
        node(l);
        if (r.kind == NodeKind::rate0)
            return;
        emit(Opcode::g, n);
        node(r);
        emit(Opcode::combine, n);
    }

private:
    void emit(Opcode op, const TreeNode &n)
    {
        out_.instructions.push_back(
            Instruction{op, n.length, n.offset, log2_exact(tree_.n_bits() / n.length)});
    }

    const DecoderTree &tree_;
    Program &out_;
};

} // namespace

std::string_view to_string(Opcode op) { return opcode_names[static_cast<std::size_t>(op)]; }

std::optional<Opcode> opcode_from_string(std::string_view name)
{
    for (std::size_t i = 0; i < opcode_names.size(); ++i)
        if (opcode_names[i] == name)
            return static_cast<Opcode>(i);
    return std::nullopt;
}

bool is_leaf_opcode(Opcode op)
{
    switch (op) {
    case Opcode::f:
    case Opcode::g:
    case Opcode::g_0r:
    case Opcode::combine:
    case Opcode::combine_0r:
        return false;
    default:
        return true;
    }
}

Program compile(const DecoderTree &tree)
{
    Program p;
    p.n_bits = tree.n_bits();
    p.k_info = tree.k_info();
    Emitter(tree, p).node(tree.root());
    return p;
}

std::string program_to_text(const Program &program)
{
    std::string s;
    for (const Instruction &ins : program.instructions) {
        s += to_string(ins.op);
        s += " nv=" + std::to_string(ins.nv) + " off=" + std::to_string(ins.offset) + "\n";
    }
    return s;
}

namespace {

std::uint32_t parse_field(std::string_view token, std::string_view key, std::size_t line)
{
    if (token.substr(0, key.size()) != key)
        throw CodeError("program line " + std::to_string(line) + ": expected " + std::string(key));
    token.remove_prefix(key.size());
    std::uint32_t v = 0;
    auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || p != token.data() + token.size())
        throw CodeError("program line " + std::to_string(line) + ": bad number");
    return v;
}

std::uint32_t fixed_length(Opcode op)
{
    switch (op) {
    case Opcode::ml01: return 4;
    case Opcode::repspc:
    case Opcode::rep1:
    case Opcode::zero_01: return 8;
    case Opcode::zero_repspc: return 16;
    default: return 0;
    }
}

} // namespace

Program program_from_text(std::string_view text, const PolarCode &code)
{
    Program prog;
    prog.n_bits = code.n_bits();
    prog.k_info = code.k_info();
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string op, nv, off, extra;
        if (!(ls >> op))
            continue;
        if (!(ls >> nv >> off) || (ls >> extra))
            throw CodeError("program line " + std::to_string(line_no) + ": expected 3 fields");
        auto opcode = opcode_from_string(op);
        if (!opcode)
            throw CodeError("program line " + std::to_string(line_no) + ": unknown opcode " + op);
        Instruction ins;
        ins.op = *opcode;
        ins.nv = parse_field(nv, "nv=", line_no);
        ins.offset = parse_field(off, "off=", line_no);
        const bool nv_ok = is_power_of_two(ins.nv) && ins.nv <= prog.n_bits &&
                           (is_leaf_opcode(ins.op) || ins.nv >= 2);
        if (!nv_ok || ins.offset % ins.nv != 0 || ins.offset + ins.nv > prog.n_bits)
            throw CodeError("program line " + std::to_string(line_no) +
                            ": node does not fit the code length");
        if (const auto fixed = fixed_length(ins.op); fixed != 0 && ins.nv != fixed)
            throw CodeError("program line " + std::to_string(line_no) + ": " + op +
                            " requires nv=" + std::to_string(fixed));
        ins.stage = log2_exact(prog.n_bits / ins.nv);
        prog.instructions.push_back(ins);
    }
    return prog;
}

} // namespace fastssc
