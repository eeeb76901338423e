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

#include "semg2v/nn.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "semg2v/common.hpp"
#include "semg2v/io.hpp"

namespace semg2v::nn {
namespace {

thread_local std::int64_t g_order = 0;

void ensure_grad(Node& n) {
  if (n.grad.rows() != n.value.rows() || n.grad.cols() != n.value.cols())
    n.grad = Eigen::MatrixXd::Zero(n.value.rows(), n.value.cols());
}

Var make(Eigen::MatrixXd value, std::vector<Var> parents,
         std::function<void(Node&)> backprop) {
  auto n = std::make_shared<Node>();
  n->value = std::move(value);
  check_state(n->value.allFinite(), "op produced non-finite values");
  n->order = ++g_order;
  for (const Var& p : parents)
    if (p->requires_grad) {
      n->requires_grad = true;
      break;
    }
  if (n->requires_grad) {
    n->parents = std::move(parents);
    n->backprop = std::move(backprop);
  }
  return n;
}

void check_same_shape(const Var& a, const Var& b, const char* op) {
  check_arg(a->rows() == b->rows() && a->cols() == b->cols(),
            std::string(op) + ": shape mismatch");
}

Eigen::Index checked_valid(const Var& x, Eigen::Index valid, const char* op) {
  check_arg(valid >= 0 && valid <= x->rows(),
            std::string(op) + ": valid row count out of range");
  return valid;
}

}  // namespace

Var constant(Eigen::MatrixXd value) {
  auto n = std::make_shared<Node>();
  n->value = std::move(value);
  check_state(n->value.allFinite(), "constant holds non-finite values");
  n->order = ++g_order;
  return n;
}

Var leaf(Eigen::MatrixXd value) {
  Var n = constant(std::move(value));
  n->requires_grad = true;
  return n;
}

void backward(const Var& root) {
  check_arg(root->value.size() == 1, "backward requires a 1x1 scalar root");
  if (!root->requires_grad) return;

  std::vector<Node*> nodes;
  std::unordered_set<Node*> seen;
  std::vector<Node*> stack{root.get()};
  while (!stack.empty()) {
    Node* n = stack.back();
    stack.pop_back();
    if (!n->requires_grad || seen.count(n) > 0) continue;
    seen.insert(n);
    nodes.push_back(n);
    for (const Var& p : n->parents) stack.push_back(p.get());
  }
  for (Node* n : nodes) ensure_grad(*n);
  root->grad(0, 0) += 1.0;

  std::sort(nodes.begin(), nodes.end(),
            [](const Node* a, const Node* b) { return a->order > b->order; });
  for (Node* n : nodes)
    if (n->backprop) n->backprop(*n);
}

// ---- elementwise / linear algebra ----------------------------------------------

Var add(const Var& a, const Var& b) {
  check_same_shape(a, b, "add");
  return make(a->value + b->value, {a, b}, [a, b](Node& self) {
    if (a->requires_grad) a->grad += self.grad;
    if (b->requires_grad) b->grad += self.grad;
  });
}

Var sub(const Var& a, const Var& b) {
  check_same_shape(a, b, "sub");
  return make(a->value - b->value, {a, b}, [a, b](Node& self) {
    if (a->requires_grad) a->grad += self.grad;
    if (b->requires_grad) b->grad -= self.grad;
  });
}

Var mul(const Var& a, const Var& b) {
  check_same_shape(a, b, "mul");
  return make(a->value.cwiseProduct(b->value), {a, b}, [a, b](Node& self) {
    if (a->requires_grad) a->grad += self.grad.cwiseProduct(b->value);
    if (b->requires_grad) b->grad += self.grad.cwiseProduct(a->value);
  });
}

Var scale(const Var& a, double s) {
  return make(a->value * s, {a}, [a, s](Node& self) {
    if (a->requires_grad) a->grad += self.grad * s;
  });
}

Var matmul(const Var& a, const Var& b) {
  check_arg(a->cols() == b->rows(), "matmul: inner dimensions differ");
  return make(a->value * b->value, {a, b}, [a, b](Node& self) {
    if (a->requires_grad) a->grad += self.grad * b->value.transpose();
    if (b->requires_grad) b->grad += a->value.transpose() * self.grad;
  });
}

Var matmul_nt(const Var& a, const Var& b) {
  check_arg(a->cols() == b->cols(), "matmul_nt: inner dimensions differ");
  return make(a->value * b->value.transpose(), {a, b}, [a, b](Node& self) {
    if (a->requires_grad) a->grad += self.grad * b->value;
    if (b->requires_grad) b->grad += self.grad.transpose() * a->value;
  });
}

Var relu(const Var& a) {
  return make(a->value.cwiseMax(0.0), {a}, [a](Node& self) {
    if (!a->requires_grad) return;
    a->grad += self.grad.cwiseProduct(
        (a->value.array() > 0.0).cast<double>().matrix());
  });
}

Var tanh_op(const Var& a) {
  return make(a->value.array().tanh().matrix(), {a}, [a](Node& self) {
    if (!a->requires_grad) return;
    a->grad += self.grad.cwiseProduct(
        (1.0 - self.value.array().square()).matrix());
  });
}

Var slice_cols(const Var& a, Eigen::Index start, Eigen::Index count) {
  check_arg(start >= 0 && count >= 0 && start + count <= a->cols(),
            "slice_cols: range out of bounds");
  return make(a->value.middleCols(start, count), {a},
              [a, start, count](Node& self) {
                if (a->requires_grad)
                  a->grad.middleCols(start, count) += self.grad;
              });
}

Var concat_cols(const std::vector<Var>& parts) {
  check_arg(!parts.empty(), "concat_cols: nothing to concatenate");
  Eigen::Index cols = 0;
  for (const Var& p : parts) {
    check_arg(p->rows() == parts[0]->rows(), "concat_cols: row mismatch");
    cols += p->cols();
  }
  Eigen::MatrixXd value(parts[0]->rows(), cols);
  Eigen::Index at = 0;
  for (const Var& p : parts) {
    value.middleCols(at, p->cols()) = p->value;
    at += p->cols();
  }
  return make(std::move(value), {parts.begin(), parts.end()},
              [parts](Node& self) {
                Eigen::Index at = 0;
                for (const Var& p : parts) {
                  if (p->requires_grad)
                    p->grad += self.grad.middleCols(at, p->cols());
                  at += p->cols();
                }
              });
}

// ---- sequence ops ---------------------------------------------------------------

Var linear(const Var& x, const Var& w, const Var& bias, Eigen::Index valid) {
  check_arg(x->cols() == w->rows(), "linear: input width != weight rows");
  check_arg(bias->rows() == 1 && bias->cols() == w->cols(),
            "linear: bias must be 1 x out_width");
  const Eigen::Index L = checked_valid(x, valid, "linear");
  Eigen::MatrixXd value = Eigen::MatrixXd::Zero(x->rows(), w->cols());
  value.topRows(L) = x->value.topRows(L) * w->value;
  value.topRows(L).rowwise() += bias->value.row(0);
  return make(std::move(value), {x, w, bias}, [x, w, bias, L](Node& self) {
    const auto g = self.grad.topRows(L);
    if (x->requires_grad)
      x->grad.topRows(L) += g * w->value.transpose();
    if (w->requires_grad)
      w->grad += x->value.topRows(L).transpose() * g;
    if (bias->requires_grad) bias->grad.row(0) += g.colwise().sum();
  });
}

Var softmax_rows(const Var& x, Eigen::Index valid_rows,
                 Eigen::Index valid_cols) {
  const Eigen::Index Lr = checked_valid(x, valid_rows, "softmax_rows");
  check_arg(valid_cols >= 1 && valid_cols <= x->cols(),
            "softmax_rows: valid column count out of range");
  const Eigen::Index Lc = valid_cols;
  Eigen::MatrixXd value = Eigen::MatrixXd::Zero(x->rows(), x->cols());
  for (Eigen::Index r = 0; r < Lr; ++r) {
    const auto row = x->value.row(r).head(Lc);
    const double mx = row.maxCoeff();
    Eigen::RowVectorXd e = (row.array() - mx).exp();
    value.row(r).head(Lc) = e / e.sum();
  }
  return make(std::move(value), {x}, [x, Lr, Lc](Node& self) {
    if (!x->requires_grad) return;
    for (Eigen::Index r = 0; r < Lr; ++r) {
      const auto y = self.value.row(r).head(Lc);
      const auto g = self.grad.row(r).head(Lc);
      const double dot = y.cwiseProduct(g).sum();
      x->grad.row(r).head(Lc) +=
          y.cwiseProduct(g - Eigen::RowVectorXd::Constant(Lc, dot));
    }
  });
}

Var layer_norm(const Var& x, const Var& gain, const Var& bias,
               Eigen::Index valid) {
  check_arg(gain->rows() == 1 && gain->cols() == x->cols() &&
                bias->rows() == 1 && bias->cols() == x->cols(),
            "layer_norm: gain/bias must be 1 x width");
  const Eigen::Index L = checked_valid(x, valid, "layer_norm");
  const Eigen::Index D = x->cols();
  constexpr double kEps = 1e-12;

  auto normalized = std::make_shared<Eigen::MatrixXd>(L, D);
  auto inv_std = std::make_shared<Eigen::VectorXd>(L);
  Eigen::MatrixXd value = Eigen::MatrixXd::Zero(x->rows(), D);
  for (Eigen::Index r = 0; r < L; ++r) {
    const double mean = x->value.row(r).mean();
    const double var =
        (x->value.row(r).array() - mean).square().sum() / D;
    const double is = 1.0 / std::sqrt(var + kEps);
    (*inv_std)[r] = is;
    normalized->row(r) = (x->value.row(r).array() - mean) * is;
    value.row(r) = normalized->row(r).cwiseProduct(gain->value.row(0)) +
                   bias->value.row(0);
  }
  return make(std::move(value), {x, gain, bias},
              [x, gain, bias, normalized, inv_std, L, D](Node& self) {
                for (Eigen::Index r = 0; r < L; ++r) {
                  const auto g = self.grad.row(r);
                  const auto xh = normalized->row(r);
                  if (gain->requires_grad)
                    gain->grad.row(0) += g.cwiseProduct(xh);
                  if (bias->requires_grad) bias->grad.row(0) += g;
                  if (x->requires_grad) {
                    const Eigen::RowVectorXd dxh =
                        g.cwiseProduct(gain->value.row(0));
                    const double m1 = dxh.mean();
                    const double m2 = dxh.cwiseProduct(xh).mean();
                    x->grad.row(r) +=
                        ((dxh.array() - m1) - xh.array() * m2).matrix() *
                        (*inv_std)[r];
                  }
                }
              });
}

Var conv1d(const Var& x, const Var& w, const Var& bias, int kernel,
           Eigen::Index valid) {
  check_arg(kernel >= 1 && kernel % 2 == 1, "conv1d: kernel must be odd");
  const Eigen::Index cin = x->cols();
  check_arg(w->rows() == kernel * cin,
            "conv1d: weight rows must be kernel * in_channels");
  const Eigen::Index cout = w->cols();
  check_arg(bias->rows() == 1 && bias->cols() == cout,
            "conv1d: bias must be 1 x out_channels");
  const Eigen::Index L = checked_valid(x, valid, "conv1d");
  const int pad = kernel / 2;

  Eigen::MatrixXd value = Eigen::MatrixXd::Zero(x->rows(), cout);
  for (int j = 0; j < kernel; ++j) {
    const Eigen::Index offset = j - pad;
    const Eigen::Index t0 = std::max<Eigen::Index>(0, -offset);
    const Eigen::Index t1 = std::min<Eigen::Index>(L, L - offset);
    if (t1 <= t0) continue;
    value.middleRows(t0, t1 - t0) +=
        x->value.middleRows(t0 + offset, t1 - t0) *
        w->value.middleRows(j * cin, cin);
  }
  value.topRows(L).rowwise() += bias->value.row(0);

  return make(std::move(value), {x, w, bias},
              [x, w, bias, kernel, cin, pad, L](Node& self) {
                for (int j = 0; j < kernel; ++j) {
                  const Eigen::Index offset = j - pad;
                  const Eigen::Index t0 = std::max<Eigen::Index>(0, -offset);
                  const Eigen::Index t1 = std::min<Eigen::Index>(L, L - offset);
                  if (t1 <= t0) continue;
                  const auto g = self.grad.middleRows(t0, t1 - t0);
                  if (x->requires_grad)
                    x->grad.middleRows(t0 + offset, t1 - t0) +=
                        g * w->value.middleRows(j * cin, cin).transpose();
                  if (w->requires_grad)
                    w->grad.middleRows(j * cin, cin) +=
                        x->value.middleRows(t0 + offset, t1 - t0).transpose() *
                        g;
                }
                if (bias->requires_grad)
                  bias->grad.row(0) += self.grad.topRows(L).colwise().sum();
              });
}

Var dropout(const Var& x, double p, bool train, std::mt19937_64& rng,
            Eigen::Index valid) {
  check_arg(p >= 0.0 && p < 1.0, "dropout: p must be in [0, 1)");
  if (!train || p == 0.0) return x;
  const Eigen::Index L = checked_valid(x, valid, "dropout");
  const double keep = 1.0 - p;
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  Eigen::MatrixXd mask = Eigen::MatrixXd::Zero(x->rows(), x->cols());
  for (Eigen::Index r = 0; r < L; ++r)
    for (Eigen::Index c = 0; c < x->cols(); ++c)
      mask(r, c) = uniform(rng) < keep ? 1.0 / keep : 0.0;
  auto shared_mask = std::make_shared<Eigen::MatrixXd>(std::move(mask));
  return make(x->value.cwiseProduct(*shared_mask), {x},
              [x, shared_mask](Node& self) {
                if (x->requires_grad)
                  x->grad += self.grad.cwiseProduct(*shared_mask);
              });
}

Var repeat_rows(const Var& x, const std::vector<int>& counts,
                Eigen::Index valid_in, Eigen::Index out_rows) {
  const Eigen::Index L = checked_valid(x, valid_in, "repeat_rows");
  check_arg(static_cast<Eigen::Index>(counts.size()) >= L,
            "repeat_rows: counts shorter than valid input");
  auto index = std::make_shared<std::vector<Eigen::Index>>();
  for (Eigen::Index i = 0; i < L; ++i) {
    check_arg(counts[static_cast<std::size_t>(i)] >= 0,
              "repeat_rows: negative count");
    for (int k = 0; k < counts[static_cast<std::size_t>(i)]; ++k)
      index->push_back(i);
  }
  const Eigen::Index total = static_cast<Eigen::Index>(index->size());
  check_arg(total >= 1, "repeat_rows: all durations are zero");
  if (out_rows < 0) out_rows = total;
  check_arg(out_rows >= total, "repeat_rows: output rows below sum(counts)");

  Eigen::MatrixXd value = Eigen::MatrixXd::Zero(out_rows, x->cols());
  for (Eigen::Index j = 0; j < total; ++j)
    value.row(j) = x->value.row((*index)[static_cast<std::size_t>(j)]);
  return make(std::move(value), {x}, [x, index](Node& self) {
    if (!x->requires_grad) return;
    for (Eigen::Index j = 0;
         j < static_cast<Eigen::Index>(index->size()); ++j)
      x->grad.row((*index)[static_cast<std::size_t>(j)]) += self.grad.row(j);
  });
}

// ---- losses -------------------------------------------------------------------------

Var sum_abs(const Var& a, Eigen::Index valid) {
  const Eigen::Index L = checked_valid(a, valid, "sum_abs");
  Eigen::MatrixXd value(1, 1);
  value(0, 0) = a->value.topRows(L).cwiseAbs().sum();
  return make(std::move(value), {a}, [a, L](Node& self) {
    if (!a->requires_grad) return;
    const double g = self.grad(0, 0);
    a->grad.topRows(L) +=
        g * a->value.topRows(L).array().sign().matrix();
  });
}

Var sum_sq(const Var& a, Eigen::Index valid) {
  const Eigen::Index L = checked_valid(a, valid, "sum_sq");
  Eigen::MatrixXd value(1, 1);
  value(0, 0) = a->value.topRows(L).squaredNorm();
  return make(std::move(value), {a}, [a, L](Node& self) {
    if (a->requires_grad)
      a->grad.topRows(L) += 2.0 * self.grad(0, 0) * a->value.topRows(L);
  });
}

Var ce_sum(const Var& logits, const std::vector<int>& ids,
           Eigen::Index valid) {
  const Eigen::Index L = checked_valid(logits, valid, "ce_sum");
  check_arg(static_cast<Eigen::Index>(ids.size()) >= L,
            "ce_sum: ids shorter than valid rows");
  const Eigen::Index C = logits->cols();

  auto probs = std::make_shared<Eigen::MatrixXd>(L, C);
  double total = 0.0;
  for (Eigen::Index t = 0; t < L; ++t) {
    const int id = ids[static_cast<std::size_t>(t)];
    const auto row = logits->value.row(t);
    const double mx = row.maxCoeff();
    Eigen::RowVectorXd e = (row.array() - mx).exp();
    probs->row(t) = e / e.sum();
    if (id < 0) continue;  // masked frame
    check_arg(id < C, "ce_sum: class id out of range");
    total -= std::log(std::max((*probs)(t, id), 1e-300));
  }
  Eigen::MatrixXd value(1, 1);
  value(0, 0) = total;
  return make(std::move(value), {logits}, [logits, probs, ids, L](Node& self) {
    if (!logits->requires_grad) return;
    const double g = self.grad(0, 0);
    for (Eigen::Index t = 0; t < L; ++t) {
      const int id = ids[static_cast<std::size_t>(t)];
      if (id < 0) continue;
      logits->grad.row(t) += g * probs->row(t);
      logits->grad(t, id) -= g;
    }
  });
}

Var mae(const Var& a, const Var& b) {
  check_same_shape(a, b, "mae");
  return scale(sum_abs(sub(a, b), a->rows()),
               1.0 / static_cast<double>(a->rows() * a->cols()));
}

Var mse(const Var& a, const Var& b) {
  check_same_shape(a, b, "mse");
  return scale(sum_sq(sub(a, b), a->rows()),
               1.0 / static_cast<double>(a->rows() * a->cols()));
}

Var cross_entropy(const Var& logits, const std::vector<int>& ids) {
  check_arg(static_cast<Eigen::Index>(ids.size()) == logits->rows(),
            "cross_entropy: one id per frame required");
  for (int id : ids) check_arg(id >= 0, "cross_entropy: id out of range");
  return scale(ce_sum(logits, ids, logits->rows()),
               1.0 / static_cast<double>(logits->rows()));
}

Eigen::MatrixXd positional_encoding(Eigen::Index length, Eigen::Index dim) {
  Eigen::MatrixXd pe(length, dim);
  for (Eigen::Index t = 0; t < length; ++t)
    for (Eigen::Index d = 0; d < dim; ++d) {
      const double angle =
          t / std::pow(10000.0, 2.0 * (d / 2) / static_cast<double>(dim));
      pe(t, d) = (d % 2 == 0) ? std::sin(angle) : std::cos(angle);
    }
  return pe;
}

// ---- ParamStore ----------------------------------------------------------------------

Var ParamStore::create(const std::string& name, Eigen::Index rows,
                       Eigen::Index cols, Init init, std::mt19937_64& rng) {
  check_arg(by_name_.count(name) == 0, "duplicate parameter name: " + name);
  Eigen::MatrixXd value(rows, cols);
  switch (init) {
    case Init::kZeros:
      value.setZero();
      break;
    case Init::kOnes:
      value.setOnes();
      break;
    case Init::kXavierUniform: {
      const double limit = std::sqrt(6.0 / static_cast<double>(rows + cols));
      std::uniform_real_distribution<double> uniform(-limit, limit);
      for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c) value(r, c) = uniform(rng);
      break;
    }
  }
  Entry entry;
  entry.name = name;
  entry.var = leaf(std::move(value));
  entry.m = Eigen::MatrixXd::Zero(rows, cols);
  entry.v = Eigen::MatrixXd::Zero(rows, cols);
  by_name_[name] = entries_.size();
  entries_.push_back(std::move(entry));
  return entries_.back().var;
}

Var ParamStore::get(const std::string& name) const {
  const auto it = by_name_.find(name);
  check_arg(it != by_name_.end(), "unknown parameter: " + name);
  return entries_[it->second].var;
}

void ParamStore::zero_grads() {
  for (Entry& e : entries_)
    e.var->grad = Eigen::MatrixXd::Zero(e.var->rows(), e.var->cols());
}

double ParamStore::grad_norm() const {
  double sq = 0.0;
  for (const Entry& e : entries_)
    if (e.var->grad.size() > 0) sq += e.var->grad.squaredNorm();
  return std::sqrt(sq);
}

void ParamStore::clip_grads(double max_norm) {
  check_arg(max_norm > 0.0, "clip_grads: max_norm must be positive");
  const double norm = grad_norm();
  if (norm <= max_norm) return;
  const double s = max_norm / norm;
  for (Entry& e : entries_)
    if (e.var->grad.size() > 0) e.var->grad *= s;
}

void ParamStore::adam_step(double lr, double beta1, double beta2, double eps) {
  ++step_;
  const double bc1 = 1.0 - std::pow(beta1, static_cast<double>(step_));
  const double bc2 = 1.0 - std::pow(beta2, static_cast<double>(step_));
  for (Entry& e : entries_) {
    check_state(e.var->grad.rows() == e.var->rows() &&
                    e.var->grad.cols() == e.var->cols(),
                "adam_step: missing gradient for " + e.name);
    const Eigen::MatrixXd& g = e.var->grad;
    e.m = beta1 * e.m + (1.0 - beta1) * g;
    e.v = beta2 * e.v + (1.0 - beta2) * g.cwiseProduct(g);
    const Eigen::MatrixXd m_hat = e.m / bc1;
    const Eigen::MatrixXd v_hat = e.v / bc2;
    e.var->value -=
        lr * m_hat.cwiseQuotient(v_hat.cwiseSqrt().array().matrix() +
                                 Eigen::MatrixXd::Constant(
                                     v_hat.rows(), v_hat.cols(), eps));
    check_state(e.var->value.allFinite(),
                "adam_step: non-finite parameter " + e.name);
    e.var->grad.setZero();
  }
}

void ParamStore::save(
    const std::string& path,
    const std::unordered_map<std::string, std::string>& meta) const {
  std::vector<io::NamedMatrix> tensors;
  tensors.reserve(entries_.size() * 3);
  for (const Entry& e : entries_) {
    tensors.emplace_back(e.name, e.var->value);
    tensors.emplace_back(e.name + ".adam_m", e.m);
    tensors.emplace_back(e.name + ".adam_v", e.v);
  }
  io::Json j;
  j["step"] = step_;
  for (const auto& [k, v] : meta) j[k] = v;
  io::write_tensor_archive(path, tensors, j);
}

void ParamStore::load(const std::string& path) {
  io::Json meta;
  const auto tensors = io::read_tensor_archive(path, &meta);
  std::unordered_map<std::string, const Eigen::MatrixXd*> by_name;
  for (const auto& [name, m] : tensors) by_name[name] = &m;
  for (Entry& e : entries_) {
    const auto it = by_name.find(e.name);
    check_state(it != by_name.end(), "checkpoint missing tensor: " + e.name);
    check_state(it->second->rows() == e.var->rows() &&
                    it->second->cols() == e.var->cols(),
                "checkpoint shape mismatch for " + e.name);
    e.var->value = *it->second;
    if (const auto m_it = by_name.find(e.name + ".adam_m");
        m_it != by_name.end())
      e.m = *m_it->second;
    if (const auto v_it = by_name.find(e.name + ".adam_v");
        v_it != by_name.end())
      e.v = *v_it->second;
  }
  step_ = meta.value("step", std::int64_t{0});
}

std::vector<Eigen::MatrixXd> ParamStore::snapshot_values() const {
  std::vector<Eigen::MatrixXd> values;
  values.reserve(entries_.size());
  for (const Entry& e : entries_) values.push_back(e.var->value);
  return values;
}

void ParamStore::restore_values(const std::vector<Eigen::MatrixXd>& values) {
  check_arg(values.size() == entries_.size(),
            "restore_values: snapshot size mismatch");
  for (std::size_t i = 0; i < values.size(); ++i)
    entries_[i].var->value = values[i];
}

}  // namespace semg2v::nn
