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

#include "uur/subset_oracle.hpp"

#include <numeric>

#include "uur/error.hpp"

namespace uur {

SubsetMaximum brute_force_subset_max(std::span<const double> terms, int n) {
    const int size = static_cast<int>(terms.size());
    if (n < 1 || n > size) {
        throw Error(ErrorCode::InvalidArgument, "subset size out of range");
    }
    std::vector<int> current(static_cast<std::size_t>(n));
    std::iota(current.begin(), current.end(), 0);

    SubsetMaximum best;
    bool first = true;
    while (true) {
        double sum = 0.0;
        for (int k : current) {
            sum += terms[static_cast<std::size_t>(k)];
        }
        ++best.subsets_examined;
        if (first || sum > best.sum) {
            best.sum = sum;
            best.subset = current;
            first = false;
        }
        // next combination in lexicographic order
        int i = n - 1;
        while (i >= 0 && current[static_cast<std::size_t>(i)] == size - n + i) {
            --i;
        }
        if (i < 0) {
            break;
        }
        ++current[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) {
            current[static_cast<std::size_t>(j)] = current[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return best;
}

} // namespace uur
