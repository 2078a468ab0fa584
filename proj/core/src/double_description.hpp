// Copyright 2026 The qbell Authors
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

#include <cstddef>
#include <vector>

#include "qbell/rational.hpp"

namespace qbell::detail {

struct ConeGenerators {
  std::vector<IntegerVector> rays;       // primitive, pointed part
  std::vector<IntegerVector> lineality;  // basis of the lineality space
};

// Generators of {z in R^dim : row . z >= 0 for every row}, rows inserted in
// the given order.
ConeGenerators double_description(std::size_t dim, const std::vector<IntegerVector>& rows);

}  // namespace qbell::detail
