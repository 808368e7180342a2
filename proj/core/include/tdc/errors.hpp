// Copyright 2026 The tdcolor authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace tdc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input document; message names the offending line.
struct ParseError : Error {
    using Error::Error;
};

// An operation was invoked outside its stated domain.
struct PreconditionError : Error {
    using Error::Error;
};

// Exhaustive enumeration refused; message names the bound.
struct BudgetExceededError : Error {
    using Error::Error;
};

// A replayed proof step could not be completed. Carries the branch trace.
struct ProcedureFailure : Error {
    ProcedureFailure(const std::string& msg, std::string trace_text)
        : Error(msg), trace(std::move(trace_text)) {}
    std::string trace;
};

// The recursive colorer met an instance no reduction covers. Carries the
// instance so it can be reproduced.
struct TheoremFalsified : Error {
    TheoremFalsified(const std::string& msg, std::string graph_text)
        : Error(msg), graph(std::move(graph_text)) {}
    std::string graph;
};

// A runtime self-check (conservation, profile sufficiency, ...) failed.
struct InternalCheckFailure : Error {
    using Error::Error;
};

}  // namespace tdc
