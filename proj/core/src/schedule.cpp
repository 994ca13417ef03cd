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

#include "aqs/schedule.hpp"

#include <cmath>
#include <numbers>

namespace aqs {

double evaluate_schedule(const Schedule &s, double t) {
    if (t < 0.0) {
        throw OutOfDomain("schedule evaluated at negative time");
    }
    switch (s.kind) {
        case ScheduleKind::exp_decay:
            if (s.rate <= 0.0) {
                throw OutOfDomain("exp_decay needs a positive rate");
            }
            return std::exp(-s.rate * t);
        case ScheduleKind::inv_log:
            return 1.0 / std::log(t + std::numbers::e);
        case ScheduleKind::arctan_finite: {
            if (s.horizon <= 0.0) {
                throw OutOfDomain("arctan_finite needs a positive horizon");
            }
            if (t > s.horizon) {
                throw OutOfDomain("finite schedule evaluated past its horizon");
            }
            double scale = std::abs(std::atan(-s.horizon / 2.0));
            return 1.0 - 0.5 * (std::atan(t - s.horizon / 2.0) / scale + 1.0);
        }
    }
    throw OutOfDomain("unknown schedule kind");
}

}  // namespace aqs
