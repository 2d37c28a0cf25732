/*------------------------------------------------------------------------
Reference successive-cancellation decoder

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

#include "fastssc/llr.hpp"

#include <span>

namespace fastssc {

/// Bit-by-bit min-sum SC decoding over the full, unpruned tree. Returns the
/// codeword estimate. Used as the correctness oracle for the fast decoder.
BitVec sc_decode_reference(const PolarCode &code, std::span<const Llr> llr,
                           const LlrArithmetic &arith = LlrArithmetic::floating());

} // namespace fastssc
