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
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fastssc {

using Bit = std::uint8_t;
/// Ordered binary values; every element is 0 or 1.
using BitVec = std::vector<Bit>;

/// Thrown for any malformed code, message, or file content.
class CodeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

constexpr bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

constexpr unsigned log2_exact(std::size_t n)
{
    unsigned l = 0;
    while ((std::size_t{1} << l) < n)
        ++l;
    return l;
}

/// Parse "0001 0111"-style strings; whitespace is ignored, index 0 first.
BitVec bits_from_string(std::string_view s);
std::string bits_to_string(std::span<const Bit> bits);

/// Hex encoding with the most significant digit holding bit N-1.
/// The string has ceil(N/4) digits.
std::string bits_to_hex(std::span<const Bit> bits);
BitVec bits_from_hex(std::string_view hex, std::size_t n_bits);

/// An (N, k) polar code: info_mask[i] == 1 marks an information position,
/// 0 a frozen position (frozen bits are always 0).
class PolarCode {
public:
    static constexpr std::size_t min_length = 4;
    static constexpr std::size_t max_length = std::size_t{1} << 20;

    PolarCode() = default;
    explicit PolarCode(BitVec info_mask);

    std::size_t n_bits() const { return mask_.size(); }
    std::size_t k_info() const { return k_; }
    unsigned log2_n() const { return log2_exact(mask_.size()); }
    double rate() const { return static_cast<double>(k_) / static_cast<double>(mask_.size()); }

    const BitVec &info_mask() const { return mask_; }
    bool is_info(std::size_t i) const { return mask_[i] != 0; }

    std::vector<std::uint32_t> info_positions() const;
    std::vector<std::uint32_t> frozen_positions() const;

    friend bool operator==(const PolarCode &, const PolarCode &) = default;

private:
    BitVec mask_;
    std::size_t k_ = 0;
};

/// x = u * F_N over GF(2), natural bit order, F_N = [[1,0],[1,1]]^{(x)n}.
BitVec polar_transform(std::span<const Bit> u);
void polar_transform_inplace(std::span<Bit> x);

/// Systematic encoding: the message appears verbatim at the information
/// positions. Throws CodeError if the frozen set does not admit it.
BitVec encode_systematic(const PolarCode &code, std::span<const Bit> message);
/// Allocation-free variant; `codeword` must have length N.
void encode_systematic_into(const PolarCode &code, std::span<const Bit> message,
                            std::span<Bit> codeword);

BitVec encode_nonsystematic(const PolarCode &code, std::span<const Bit> message);

/// Message bits read back from the information positions of a codeword.
BitVec extract_message(const PolarCode &code, std::span<const Bit> codeword);

/// {"n": N, "k": k, "frozen_mask": "<hex>"} with MSB = bit N-1.
std::string code_to_json(const PolarCode &code);
PolarCode code_from_json(std::string_view text);
PolarCode load_code(const std::string &path);
void save_code(const PolarCode &code, const std::string &path);

} // namespace fastssc
