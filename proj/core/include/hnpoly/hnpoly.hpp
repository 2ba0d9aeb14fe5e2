// Copyright 2026 The hnpoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HNPOLY_HNPOLY_HPP_
#define HNPOLY_HNPOLY_HPP_

#include "hnpoly/error.hpp"
#include "hnpoly/hn_data.hpp"
#include "hnpoly/normal.hpp"
#include "hnpoly/polygon.hpp"
#include "hnpoly/probability.hpp"
#include "hnpoly/rational.hpp"
#include "hnpoly/slope_grid.hpp"
#include "hnpoly/tensor.hpp"

#endif  // HNPOLY_HNPOLY_HPP_
