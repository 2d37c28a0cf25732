/*------------------------------------------------------------------------
Command-line front end

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

#include <ostream>

namespace fastssc {

/// Entry point of the `fastssc` tool. Verbs: construct, alter, compile,
/// latency, decode, simulate, report. Failures print {"error": "..."} on
/// `err` and return a nonzero status.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace fastssc
