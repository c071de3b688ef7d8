// Copyright 2026 The uur Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <vector>

namespace uur {

struct SubsetMaximum {
    double sum = 0.0;
    /// Lexicographically first maximizing subset, ascending indices.
    std::vector<int> subset;
    std::size_t subsets_examined = 0;
};

/// Enumerates every n-element subset of `terms` in lexicographic order and
/// returns the one with the largest sum (sums accumulated in index order).
/// Independent of the sorted-prefix shortcut in hierarchical bounds.
SubsetMaximum brute_force_subset_max(std::span<const double> terms, int n);

} // namespace uur
