// Copyright 2026 The aqsim Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace aqs {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionTooLarge : Error {
    using Error::Error;
};
struct InvalidSite : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct IndexOutOfRange : Error {
    using Error::Error;
};
struct InvalidSpec : Error {
    using Error::Error;
};
struct NonUnitaryGate : Error {
    using Error::Error;
};
struct NonConvergence : Error {
    using Error::Error;
};
struct OutOfDomain : Error {
    using Error::Error;
};
struct StepFailure : Error {
    using Error::Error;
};
struct DiagonalizationFailure : Error {
    using Error::Error;
};
struct GridTooCoarse : Error {
    using Error::Error;
};

}  // namespace aqs
