// Copyright 2026 The scatmet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "scatmet/error.h"

namespace scatmet {

const char *to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::OddModeCount:
            return "OddModeCount";
        case ErrorKind::UnsupportedSize:
            return "UnsupportedSize";
        case ErrorKind::DomainError:
            return "DomainError";
        case ErrorKind::TooLarge:
            return "TooLarge";
        case ErrorKind::NotOrthogonal:
            return "NotOrthogonal";
        case ErrorKind::LimitPoint:
            return "LimitPoint";
        case ErrorKind::NumericalError:
            return "NumericalError";
        case ErrorKind::AcceptanceTooLow:
            return "AcceptanceTooLow";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {
}

void fail(ErrorKind kind, const std::string &message) {
    throw Error(kind, message);
}

}  // namespace scatmet
