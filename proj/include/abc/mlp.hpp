#pragma once

#include <cstdint>
#include <vector>

#include "abc/types.hpp"

namespace abc {

// Training hyper-parameters for the small regression network: two sigmoid
// hidden layers (128, 16 by default) trained by Adam with its default
// setting. Training goes full-batch below full_batch_limit rows, minibatch
// otherwise, with early stopping on a validation split.
struct MlpSpec {
  std::vector<int> hidden_sizes{128, 16};
  double adam_step = 1e-3;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_eps = 1e-8;
  int max_epochs = 500;
  int patience = 20;
  int batch_size = 256;
  int full_batch_limit = 1024;
};

// Fully-connected network, sigmoid hidden activations, linear output.
// Loss is the mean over rows of the squared L2 error.
class Mlp {
 public:
  Mlp() = default;
  Mlp(int in_dim, const std::vector<int>& hidden_sizes, int out_dim);

  void init_weights(uint64_t seed);

  int in_dim() const { return in_dim_; }
  int out_dim() const { return out_dim_; }
  bool empty() const { return weights_.empty(); }

  Matrix predict(const Matrix& x) const;
  double loss(const Matrix& x, const Matrix& y) const;

  // Backprop; returns the loss. Gradient layout matches weights()/biases().
  double loss_and_gradient(const Matrix& x, const Matrix& y,
                           std::vector<Matrix>& grad_w,
                           std::vector<Vector>& grad_b) const;

  Vector parameters() const;
  void set_parameters(const Vector& flat);
  int parameter_count() const;

  const std::vector<Matrix>& weights() const { return weights_; }
  const std::vector<Vector>& biases() const { return biases_; }
  std::vector<Matrix>& weights() { return weights_; }
  std::vector<Vector>& biases() { return biases_; }

 private:
  int in_dim_ = 0;
  int out_dim_ = 0;
  std::vector<Matrix> weights_;  // layer l: out x in
  std::vector<Vector> biases_;
};

struct MlpTrainLog {
  double initial_train_loss = 0.0;
  double best_val_loss = 0.0;
  double train_loss_at_best = 0.0;
  int epochs_run = 0;
  // Losses recorded each time the validation loss improved.
  std::vector<double> val_improvements;
  std::vector<double> train_at_improvements;
};

// Trains in place with Adam and early stopping (weights restored to the
// best validation checkpoint). Throws if the loss becomes non-finite.
MlpTrainLog train_mlp(Mlp& net, const Matrix& x_train, const Matrix& y_train,
                      const Matrix& x_val, const Matrix& y_val, const MlpSpec& spec,
                      uint64_t seed);

}  // namespace abc
