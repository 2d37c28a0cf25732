/*------------------------------------------------------------------------
Polar code description, polar transform and encoders

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
#include "fastssc/polar_code.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace fastssc {

BitVec bits_from_string(std::string_view s)
{
    BitVec out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '0' || c == '1')
            out.push_back(static_cast<Bit>(c - '0'));
        else if (!std::isspace(static_cast<unsigned char>(c)) && c != '_')
            throw CodeError(std::string("invalid bit character '") + c + "'");
    }
    return out;
}

std::string bits_to_string(std::span<const Bit> bits)
{
    std::string s;
    s.reserve(bits.size());
    for (Bit b : bits)
        s.push_back(b ? '1' : '0');
    return s;
}

std::string bits_to_hex(std::span<const Bit> bits)
{
    static constexpr char digits[] = "0123456789abcdef";
    const std::size_t n_digits = (bits.size() + 3) / 4;
    std::string hex(n_digits, '0');
    for (std::size_t d = 0; d < n_digits; ++d) {
        unsigned v = 0;
        for (unsigned j = 0; j < 4; ++j) {
            std::size_t i = 4 * d + j;
            if (i < bits.size() && bits[i])
                v |= 1u << j;
        }
        hex[n_digits - 1 - d] = digits[v];
    }
    return hex;
}

BitVec bits_from_hex(std::string_view hex, std::size_t n_bits)
{
    if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X'))
        hex.remove_prefix(2);
    const std::size_t n_digits = (n_bits + 3) / 4;
    if (hex.size() != n_digits)
        throw CodeError("hex string has " + std::to_string(hex.size()) + " digits, expected " +
                        std::to_string(n_digits));
    BitVec bits(n_bits, 0);
    for (std::size_t d = 0; d < n_digits; ++d) {
        char c = static_cast<char>(std::tolower(static_cast<unsigned char>(hex[n_digits - 1 - d])));
        unsigned v;
        if (c >= '0' && c <= '9')
            v = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f')
            v = static_cast<unsigned>(c - 'a' + 10);
        else
            throw CodeError(std::string("invalid hex digit '") + c + "'");
        for (unsigned j = 0; j < 4; ++j) {
            std::size_t i = 4 * d + j;
            if ((v >> j) & 1u) {
                if (i >= n_bits)
                    throw CodeError("hex string sets bits beyond the code length");
                bits[i] = 1;
            }
        }
    }
    return bits;
}

PolarCode::PolarCode(BitVec info_mask) : mask_(std::move(info_mask))
{
    if (!is_power_of_two(mask_.size()) || mask_.size() < min_length || mask_.size() > max_length)
        throw CodeError("code length " + std::to_string(mask_.size()) +
                        " is not a power of two in [4, 2^20]");
    for (Bit b : mask_) {
        if (b > 1)
            throw CodeError("mask values must be 0 or 1");
        k_ += b;
    }
}

std::vector<std::uint32_t> PolarCode::info_positions() const
{
    std::vector<std::uint32_t> out;
    out.reserve(k_);
    for (std::uint32_t i = 0; i < mask_.size(); ++i)
        if (mask_[i])
            out.push_back(i);
    return out;
}

std::vector<std::uint32_t> PolarCode::frozen_positions() const
{
    std::vector<std::uint32_t> out;
    out.reserve(mask_.size() - k_);
    for (std::uint32_t i = 0; i < mask_.size(); ++i)
        if (!mask_[i])
            out.push_back(i);
    return out;
}

void polar_transform_inplace(std::span<Bit> x)
{
    const std::size_t n = x.size();
    if (!is_power_of_two(n))
        throw CodeError("polar transform length " + std::to_string(n) + " is not a power of two");
    for (std::size_t h = 1; h < n; h *= 2)
        for (std::size_t i = 0; i < n; i += 2 * h)
            for (std::size_t j = i; j < i + h; ++j)
                x[j] ^= x[j + h];
}

BitVec polar_transform(std::span<const Bit> u)
{
    BitVec x(u.begin(), u.end());
    polar_transform_inplace(x);
    return x;
}

namespace {

void check_message(const PolarCode &code, std::span<const Bit> message)
{
    if (message.size() != code.k_info())
        throw CodeError("message length " + std::to_string(message.size()) + " does not match k = " +
                        std::to_string(code.k_info()));
}

void scatter_message(const PolarCode &code, std::span<const Bit> message, std::span<Bit> out)
{
    const BitVec &mask = code.info_mask();
    std::size_t m = 0;
    for (std::size_t i = 0; i < mask.size(); ++i)
        out[i] = mask[i] ? message[m++] : Bit{0};
}

} // namespace

void encode_systematic_into(const PolarCode &code, std::span<const Bit> message,
                            std::span<Bit> codeword)
{
    check_message(code, message);
    if (codeword.size() != code.n_bits())
        throw CodeError("codeword buffer length mismatch");
    const BitVec &mask = code.info_mask();
    scatter_message(code, message, codeword);
    polar_transform_inplace(codeword);
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (!mask[i])
            codeword[i] = 0;
    polar_transform_inplace(codeword);

    std::size_t m = 0;
    for (std::size_t i = 0; i < mask.size(); ++i) {
        if (mask[i] && codeword[i] != message[m++])
            throw CodeError("frozen set does not support systematic encoding (position " +
                            std::to_string(i) + ")");
    }
}

BitVec encode_systematic(const PolarCode &code, std::span<const Bit> message)
{
    BitVec x(code.n_bits());
    encode_systematic_into(code, message, x);
    return x;
}

BitVec encode_nonsystematic(const PolarCode &code, std::span<const Bit> message)
{
    check_message(code, message);
    BitVec x(code.n_bits());
    scatter_message(code, message, x);
    polar_transform_inplace(x);
    return x;
}

BitVec extract_message(const PolarCode &code, std::span<const Bit> codeword)
{
    if (codeword.size() != code.n_bits())
        throw CodeError("codeword length mismatch");
    BitVec m;
    m.reserve(code.k_info());
    for (std::size_t i = 0; i < codeword.size(); ++i)
        if (code.is_info(i))
            m.push_back(codeword[i]);
    return m;
}

std::string code_to_json(const PolarCode &code)
{
    nlohmann::ordered_json j;
    j["n"] = code.n_bits();
    j["k"] = code.k_info();
    j["frozen_mask"] = bits_to_hex(code.info_mask());
    return j.dump();
}

PolarCode code_from_json(std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw CodeError(std::string("malformed code description: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("frozen_mask"))
        throw CodeError("code description needs fields n, k and frozen_mask");
    if (!j["n"].is_number_unsigned() || !j["k"].is_number_unsigned() ||
        !j["frozen_mask"].is_string())
        throw CodeError("code description has fields of the wrong type");
    const auto n = j["n"].get<std::size_t>();
    const auto k = j["k"].get<std::size_t>();
    if (!is_power_of_two(n) || n < PolarCode::min_length || n > PolarCode::max_length)
        throw CodeError("code length " + std::to_string(n) + " is not a power of two in [4, 2^20]");
    PolarCode code(bits_from_hex(j["frozen_mask"].get<std::string>(), n));
    if (code.k_info() != k)
        throw CodeError("frozen_mask has " + std::to_string(code.k_info()) +
                        " information bits but k = " + std::to_string(k));
    return code;
}

PolarCode load_code(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw CodeError("cannot open code file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return code_from_json(ss.str());
}

void save_code(const PolarCode &code, const std::string &path)
{
    std::ofstream out(path);
    if (!out)
        throw CodeError("cannot write code file '" + path + "'");
    out << code_to_json(code) << '\n';
}

} // namespace fastssc
