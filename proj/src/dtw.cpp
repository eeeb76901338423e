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

#include "semg2v/dtw.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "semg2v/common.hpp"

namespace semg2v::dtw {
namespace {

using CostFn = std::function<double(int, int)>;

AlignmentPath solve(int n, int m, const CostFn& cost) {
  check_arg(n >= 1 && m >= 1, "DTW requires non-empty sequences");
  Eigen::MatrixXd acc(n, m);
  acc(0, 0) = cost(0, 0);
  for (int j = 1; j < m; ++j) acc(0, j) = acc(0, j - 1) + cost(0, j);
  for (int i = 1; i < n; ++i) {
    acc(i, 0) = acc(i - 1, 0) + cost(i, 0);
    for (int j = 1; j < m; ++j) {
      const double best =
          std::min({acc(i - 1, j - 1), acc(i, j - 1), acc(i - 1, j)});
      acc(i, j) = best + cost(i, j);
    }
  }

  AlignmentPath path;
  path.total_cost = acc(n - 1, m - 1);
  int i = n - 1, j = m - 1;
  path.pairs.emplace_back(i, j);
  while (i > 0 || j > 0) {
    if (i == 0) {
      --j;
    } else if (j == 0) {
      --i;
    } else {
      // Tie order: diagonal, then (i, j-1), then (i-1, j).
      const double diag = acc(i - 1, j - 1);
      const double horiz = acc(i, j - 1);
      const double vert = acc(i - 1, j);
      const double best = std::min({diag, horiz, vert});
      if (diag == best) {
        --i;
        --j;
      } else if (horiz == best) {
        --j;
      } else {
        --i;
      }
    }
    path.pairs.emplace_back(i, j);
  }
  std::reverse(path.pairs.begin(), path.pairs.end());
  return path;
}

}  // namespace

AlignmentPath dtw_basic(const Eigen::MatrixXd& source,
                        const Eigen::MatrixXd& target) {
  check_arg(source.cols() == target.cols(),
            "DTW feature widths do not match");
  return solve(static_cast<int>(source.rows()),
               static_cast<int>(target.rows()), [&](int i, int j) {
                 return (source.row(i) - target.row(j)).norm();
               });
}

AlignmentPath dtw_refined(const Eigen::MatrixXd& source,
                          const Eigen::MatrixXd& target,
                          const Eigen::MatrixXd& predicted_mel,
                          const Eigen::MatrixXd& target_mel,
                          double lambda_align) {
  check_arg(source.cols() == target.cols(),
            "DTW feature widths do not match");
  check_arg(predicted_mel.rows() == source.rows(),
            "predicted mel must have one frame per source frame");
  check_arg(target_mel.rows() == target.rows(),
            "target mel must have one frame per target frame");
  check_arg(predicted_mel.cols() == target_mel.cols(),
            "mel widths do not match");
  check_arg(lambda_align >= 0.0, "lambda_align must be non-negative");
  return solve(static_cast<int>(source.rows()),
               static_cast<int>(target.rows()), [&](int i, int j) {
                 double c = (source.row(i) - target.row(j)).norm();
                 if (lambda_align > 0.0)
                   c += lambda_align *
                        (predicted_mel.row(i) - target_mel.row(j)).norm();
                 return c;
               });
}

std::vector<int> path_to_durations(const AlignmentPath& path, int source_len,
                                   int target_len) {
  check_arg(!path.pairs.empty(), "empty alignment path");
  check_arg(path.pairs.front() == std::make_pair(0, 0),
            "path must start at (0,0)");
  check_arg(path.pairs.back() ==
                std::make_pair(source_len - 1, target_len - 1),
            "path must end at (N-1,M-1)");

  // A[j] = largest source index paired with output frame j.
  std::vector<int> assign(static_cast<std::size_t>(target_len), -1);
  int prev_i = -1, prev_j = -1;
  for (const auto& [i, j] : path.pairs) {
    check_arg(i >= 0 && i < source_len && j >= 0 && j < target_len,
              "path index out of range");
    const bool valid_step = (prev_i < 0) || ((i - prev_i == 0 || i - prev_i == 1) &&
                                             (j - prev_j == 0 || j - prev_j == 1) &&
                                             (i != prev_i || j != prev_j));
    check_arg(valid_step, "path steps must increment i and/or j by one");
    assign[static_cast<std::size_t>(j)] =
        std::max(assign[static_cast<std::size_t>(j)], i);
    prev_i = i;
    prev_j = j;
  }

  std::vector<int> durations(static_cast<std::size_t>(source_len), 0);
  for (int j = 0; j < target_len; ++j) {
    const int i = assign[static_cast<std::size_t>(j)];
    check_arg(i >= 0, "output frame not covered by path");
    ++durations[static_cast<std::size_t>(i)];
  }
  return durations;
}

}  // namespace semg2v::dtw
