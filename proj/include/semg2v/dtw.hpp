// Copyright (c) 2026 semg2v authors
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
//
// Dynamic-time-warping alignment between silent-EMG frames and vocal frames,
// and the reduction of an alignment path to per-input-frame durations.

#ifndef SEMG2V_DTW_HPP_
#define SEMG2V_DTW_HPP_

#include <Eigen/Dense>
#include <utility>
#include <vector>

namespace semg2v::dtw {

// Monotonic alignment path over an N x M grid, 0-based, from (0,0) to
// (N-1, M-1); every step increments i, j or both by one.
struct AlignmentPath {
  std::vector<std::pair<int, int>> pairs;
  double total_cost = 0.0;
};

// Classic DTW under Euclidean frame distance, steps {(1,0),(0,1),(1,1)}.
// Ties during backtracking prefer diagonal, then (i, j-1), then (i-1, j).
AlignmentPath dtw_basic(const Eigen::MatrixXd& source,
                        const Eigen::MatrixXd& target);

// Model-refined cost: ||source[i]-target[j]|| +
// lambda_align * ||predicted_mel[i]-target_mel[j]||. With lambda_align == 0
// this reduces to dtw_basic exactly.
AlignmentPath dtw_refined(const Eigen::MatrixXd& source,
                          const Eigen::MatrixXd& target,
                          const Eigen::MatrixXd& predicted_mel,
                          const Eigen::MatrixXd& target_mel,
                          double lambda_align);

// Durations d[i] = #{j : A[j] == i} where A[j] is the largest i paired with
// output frame j. sum(d) == M by construction.
std::vector<int> path_to_durations(const AlignmentPath& path, int source_len,
                                   int target_len);

}  // namespace semg2v::dtw

#endif  // SEMG2V_DTW_HPP_
