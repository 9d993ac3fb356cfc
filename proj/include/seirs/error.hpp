/*
 Copyright 2026 The seirs-control Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace seirs {

enum class ErrorCode {
    InvalidParams,
    NonFiniteState,
    OutOfRange,
    NoEndemicEquilibrium,
    UnknownParameter,
    DegenerateValue,
    ParseError,
    GapError,
    NegativeCount,
    LengthMismatch,
    ZeroNorm,
    InvalidSpec,
    GridMismatch,
    ZeroInitial,
    ZeroAverted,
    NewtonDivergence,
    ConfigError,
    IoError,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::NonFiniteState: return "NonFiniteState";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::NoEndemicEquilibrium: return "NoEndemicEquilibrium";
        case ErrorCode::UnknownParameter: return "UnknownParameter";
        case ErrorCode::DegenerateValue: return "DegenerateValue";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::GapError: return "GapError";
        case ErrorCode::NegativeCount: return "NegativeCount";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::ZeroNorm: return "ZeroNorm";
        case ErrorCode::InvalidSpec: return "InvalidSpec";
        case ErrorCode::GridMismatch: return "GridMismatch";
        case ErrorCode::ZeroInitial: return "ZeroInitial";
        case ErrorCode::ZeroAverted: return "ZeroAverted";
        case ErrorCode::NewtonDivergence: return "NewtonDivergence";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

/// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace seirs
