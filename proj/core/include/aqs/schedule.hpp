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

#include "aqs/errors.hpp"

namespace aqs {

/// Mixing weight family Gamma(t). exp_decay and inv_log are open-ended
/// (Gamma > 0 for all t); arctan_finite reaches exactly 0 at t = tau.
enum class ScheduleKind {
    exp_decay,      // exp(-a t)
    inv_log,        // 1 / log(t + e)
    arctan_finite,  // 1 - (arctan(t - tau/2)/|arctan(-tau/2)| + 1)/2
};

struct Schedule {
    ScheduleKind kind = ScheduleKind::exp_decay;
    double rate = 1.0;     // a, for exp_decay
    double horizon = 0.0;  // tau, for arctan_finite

    bool finite() const { return kind == ScheduleKind::arctan_finite; }
};

/// Gamma(t) in [0, 1]. Throws OutOfDomain for t < 0 or, for the finite
/// schedule, t > tau.
double evaluate_schedule(const Schedule &s, double t);

}  // namespace aqs
