// Copyright 2026 The impulsewave Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <functional>
#include <string>

#include "impulsewave/cli.hpp"

namespace impulsewave::cli::detail {

/// The analytic curve named cfg.curve as a function of lag or frequency.
std::function<double(double)> analytic_curve(const RunConfig& cfg);

std::string format_number(double v);

}  // namespace impulsewave::cli::detail
