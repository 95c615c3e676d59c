// Copyright 2026 scmatch Contributors
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

#ifndef SCMATCH_MWPM_HPP
#define SCMATCH_MWPM_HPP

#include <cstdint>
#include <vector>

namespace scmatch {

/// Dense symmetric weight matrix over n nodes.
class SymMatrix {
  public:
    explicit SymMatrix(int n) : n_(n), w_(static_cast<size_t>(n) * n, 0.0) {}

    int size() const { return n_; }
    double at(int i, int j) const { return w_[static_cast<size_t>(i) * n_ + j]; }
    void set(int i, int j, double w) {
        w_[static_cast<size_t>(i) * n_ + j] = w;
        w_[static_cast<size_t>(j) * n_ + i] = w;
    }

  private:
    int n_;
    std::vector<double> w_;
};

/// Exact minimum-weight perfect matching over a complete graph with finite
/// symmetric weights, via the blossom algorithm. Returns mate[i] = partner of
/// node i. Throws on odd node counts. Exactness (not approximation) is the
/// contract; see the brute-force oracle tests.
std::vector<int32_t> mwpm(const SymMatrix& weights);

/// Total weight of a mate array under a weight matrix.
double matching_weight(const SymMatrix& weights, const std::vector<int32_t>& mates);

/// Exhaustive minimum over all (n-1)!! pairings. Test oracle; rejects more
/// than 12 nodes or odd counts.
std::vector<int32_t> brute_force_mwpm(const SymMatrix& weights);

}  // namespace scmatch

#endif
