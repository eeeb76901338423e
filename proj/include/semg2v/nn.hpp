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
// Minimal reverse-mode automatic differentiation over dense 64-bit matrices
// (a T x D frame sequence is one matrix; scalars are 1 x 1), with the layer
// primitives the sequence model needs. Every op validates finiteness of its
// output.
//
// Sequence ops take a `valid` row count: rows at and beyond `valid` are
// treated as padding, producing exact zeros forward and receiving no
// gradient. Running a padded sequence therefore matches the unpadded run
// bit for bit on the valid rows.

#ifndef SEMG2V_NN_HPP_
#define SEMG2V_NN_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

namespace semg2v::nn {

struct Node;
using Var = std::shared_ptr<Node>;

struct Node {
  Eigen::MatrixXd value;
  Eigen::MatrixXd grad;  // empty until backward touches this node
  bool requires_grad = false;
  std::int64_t order = 0;  // creation order; backward runs in reverse
  std::vector<Var> parents;
  std::function<void(Node&)> backprop;

  Eigen::Index rows() const { return value.rows(); }
  Eigen::Index cols() const { return value.cols(); }
};

// Leaf without gradient (targets, positional tables, masks).
Var constant(Eigen::MatrixXd value);
// Leaf with gradient (parameters; inputs under a gradient check).
Var leaf(Eigen::MatrixXd value);

// Backpropagates from a 1x1 scalar root. Accumulates into pre-allocated
// gradients (parameters) and allocates zeroed gradients elsewhere.
void backward(const Var& root);

// ---- elementwise / linear algebra ----------------------------------------------

Var add(const Var& a, const Var& b);
Var sub(const Var& a, const Var& b);
Var mul(const Var& a, const Var& b);  // elementwise
Var scale(const Var& a, double s);
Var matmul(const Var& a, const Var& b);
Var matmul_nt(const Var& a, const Var& b);  // a * b^T
Var relu(const Var& a);
Var tanh_op(const Var& a);
Var slice_cols(const Var& a, Eigen::Index start, Eigen::Index count);
Var concat_cols(const std::vector<Var>& parts);

// ---- sequence ops (padding-aware) ------------------------------------------------

// x * w + bias broadcast over rows; rows >= valid are zero.
Var linear(const Var& x, const Var& w, const Var& bias, Eigen::Index valid);

// Row-wise softmax over the first valid_cols entries of the first valid_rows
// rows; everything else is zero.
Var softmax_rows(const Var& x, Eigen::Index valid_rows,
                 Eigen::Index valid_cols);

// Per-row normalization (epsilon 1e-12) followed by the affine gain/bias
// (both 1 x D); rows >= valid are zero.
Var layer_norm(const Var& x, const Var& gain, const Var& bias,
               Eigen::Index valid);

// Same-length 1-D convolution over the row (time) axis with odd kernel size;
// w is (kernel * in_channels) x out_channels, tap-major. Rows outside
// [0, valid) read as zero and are emitted as zero.
Var conv1d(const Var& x, const Var& w, const Var& bias, int kernel,
           Eigen::Index valid);

// Inverted dropout on the first valid rows; identity when train == false.
Var dropout(const Var& x, double p, bool train, std::mt19937_64& rng,
            Eigen::Index valid);

// Repeats row i of x counts[i] times (counts[i] == 0 drops the row), using
// the first valid_in rows; output is padded with zero rows up to out_rows
// (use -1 for exactly sum(counts)). The expansion of Eq-style duration
// regulation.
Var repeat_rows(const Var& x, const std::vector<int>& counts,
                Eigen::Index valid_in, Eigen::Index out_rows = -1);

// ---- losses -----------------------------------------------------------------------

// Sum of |a| over the first valid rows (1x1).
Var sum_abs(const Var& a, Eigen::Index valid);
// Sum of a^2 over the first valid rows (1x1).
Var sum_sq(const Var& a, Eigen::Index valid);
// Sum over the first valid rows of -log softmax(logits)[id]; ids[t] < 0
// skips the row. (1x1)
Var ce_sum(const Var& logits, const std::vector<int>& ids,
           Eigen::Index valid);

// Mean-reduced conveniences over full inputs.
Var mae(const Var& a, const Var& b);
Var mse(const Var& a, const Var& b);
Var cross_entropy(const Var& logits, const std::vector<int>& ids);

// Sinusoidal positional table (T x dim).
Eigen::MatrixXd positional_encoding(Eigen::Index length, Eigen::Index dim);

// ---- parameters / optimizer -------------------------------------------------------

enum class Init { kZeros, kOnes, kXavierUniform };

class ParamStore {
 public:
  struct Entry {
    std::string name;
    Var var;
    Eigen::MatrixXd m;  // Adam first moment
    Eigen::MatrixXd v;  // Adam second moment
  };

  Var create(const std::string& name, Eigen::Index rows, Eigen::Index cols,
             Init init, std::mt19937_64& rng);
  Var get(const std::string& name) const;
  bool has(const std::string& name) const { return by_name_.count(name) > 0; }

  const std::vector<Entry>& entries() const { return entries_; }
  std::int64_t step() const { return step_; }

  // Allocates zeroed gradients for every parameter. Call before forward.
  void zero_grads();

  double grad_norm() const;
  // Scales all gradients so the global norm is at most max_norm.
  void clip_grads(double max_norm);

  // Bias-corrected Adam; clears gradients afterwards. Throws if any
  // parameter is missing its gradient buffer.
  void adam_step(double lr, double beta1 = 0.9, double beta2 = 0.98,
                 double eps = 1e-9);

  void save(const std::string& path, const std::unordered_map<std::string, std::string>& meta) const;
  void load(const std::string& path);

  // Snapshot/restore of values only (model selection).
  std::vector<Eigen::MatrixXd> snapshot_values() const;
  void restore_values(const std::vector<Eigen::MatrixXd>& values);

 private:
  std::vector<Entry> entries_;
  std::unordered_map<std::string, std::size_t> by_name_;
  std::int64_t step_ = 0;
};

}  // namespace semg2v::nn

#endif  // SEMG2V_NN_HPP_
