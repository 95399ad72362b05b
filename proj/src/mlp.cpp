#include "abc/mlp.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "abc/random.hpp"

namespace abc {

namespace {

Matrix sigmoid(const Matrix& z) {
  return (1.0 / (1.0 + (-z.array()).exp())).matrix();
}

}  // namespace

Mlp::Mlp(int in_dim, const std::vector<int>& hidden_sizes, int out_dim)
    : in_dim_(in_dim), out_dim_(out_dim) {
  if (in_dim < 1 || out_dim < 1 || hidden_sizes.empty()) {
    throw std::invalid_argument("Mlp: invalid layer sizes");
  }
  std::vector<int> dims;
  dims.push_back(in_dim);
  dims.insert(dims.end(), hidden_sizes.begin(), hidden_sizes.end());
  dims.push_back(out_dim);
  for (size_t l = 0; l + 1 < dims.size(); ++l) {
    weights_.emplace_back(Matrix::Zero(dims[l + 1], dims[l]));
    biases_.emplace_back(Vector::Zero(dims[l + 1]));
  }
}

void Mlp::init_weights(uint64_t seed) {
  RandomStream rng(seed);
  for (auto& w : weights_) {
    const double bound = std::sqrt(6.0 / static_cast<double>(w.rows() + w.cols()));
    for (int i = 0; i < w.rows(); ++i) {
      for (int j = 0; j < w.cols(); ++j) {
        w(i, j) = rng.next_uniform(-bound, bound);
      }
    }
  }
  for (auto& b : biases_) b.setZero();
}

Matrix Mlp::predict(const Matrix& x) const {
  Matrix a = x;
  for (size_t l = 0; l < weights_.size(); ++l) {
    Matrix z = a * weights_[l].transpose();
    z.rowwise() += biases_[l].transpose();
    a = (l + 1 < weights_.size()) ? sigmoid(z) : std::move(z);
  }
  return a;
}

double Mlp::loss(const Matrix& x, const Matrix& y) const {
  return (predict(x) - y).squaredNorm() / static_cast<double>(x.rows());
}

double Mlp::loss_and_gradient(const Matrix& x, const Matrix& y,
                              std::vector<Matrix>& grad_w,
                              std::vector<Vector>& grad_b) const {
  const size_t layers = weights_.size();
  grad_w.resize(layers);
  grad_b.resize(layers);

  std::vector<Matrix> activations(layers + 1);
  activations[0] = x;
  for (size_t l = 0; l < layers; ++l) {
    Matrix z = activations[l] * weights_[l].transpose();
    z.rowwise() += biases_[l].transpose();
    activations[l + 1] = (l + 1 < layers) ? sigmoid(z) : std::move(z);
  }

  const double n = static_cast<double>(x.rows());
  const Matrix err = activations[layers] - y;
  const double loss = err.squaredNorm() / n;

  Matrix delta = (2.0 / n) * err;
  for (size_t l = layers; l-- > 0;) {
    grad_w[l] = delta.transpose() * activations[l];
    grad_b[l] = delta.colwise().sum().transpose();
    if (l > 0) {
      const Matrix& a = activations[l];
      delta = (delta * weights_[l]).cwiseProduct(
          a.cwiseProduct(Matrix::Ones(a.rows(), a.cols()) - a));
    }
  }
  return loss;
}

Vector Mlp::parameters() const {
  Vector flat(parameter_count());
  int pos = 0;
  for (size_t l = 0; l < weights_.size(); ++l) {
    const auto& w = weights_[l];
    flat.segment(pos, w.size()) = Eigen::Map<const Vector>(w.data(), w.size());
    pos += static_cast<int>(w.size());
    flat.segment(pos, biases_[l].size()) = biases_[l];
    pos += static_cast<int>(biases_[l].size());
  }
  return flat;
}

void Mlp::set_parameters(const Vector& flat) {
  if (flat.size() != parameter_count()) {
    throw std::invalid_argument("Mlp::set_parameters: size mismatch");
  }
  int pos = 0;
  for (size_t l = 0; l < weights_.size(); ++l) {
    auto& w = weights_[l];
    Eigen::Map<Vector>(w.data(), w.size()) = flat.segment(pos, w.size());
    pos += static_cast<int>(w.size());
    biases_[l] = flat.segment(pos, biases_[l].size());
    pos += static_cast<int>(biases_[l].size());
  }
}

int Mlp::parameter_count() const {
  int count = 0;
  for (size_t l = 0; l < weights_.size(); ++l) {
    count += static_cast<int>(weights_[l].size() + biases_[l].size());
  }
  return count;
}

MlpTrainLog train_mlp(Mlp& net, const Matrix& x_train, const Matrix& y_train,
                      const Matrix& x_val, const Matrix& y_val, const MlpSpec& spec,
                      uint64_t seed) {
  const int n = static_cast<int>(x_train.rows());
  if (n < 1 || x_val.rows() < 1) {
    throw std::invalid_argument("train_mlp: empty train or validation split");
  }
  net.init_weights(derive_seed(seed, {hash_tag("mlp_init")}));
  RandomStream shuffle_rng(derive_seed(seed, {hash_tag("mlp_shuffle")}));

  const bool full_batch = n <= spec.full_batch_limit;
  const size_t layers = net.weights().size();
  std::vector<Matrix> m_w(layers), v_w(layers), grad_w;
  std::vector<Vector> m_b(layers), v_b(layers), grad_b;
  for (size_t l = 0; l < layers; ++l) {
    m_w[l] = Matrix::Zero(net.weights()[l].rows(), net.weights()[l].cols());
    v_w[l] = m_w[l];
    m_b[l] = Vector::Zero(net.biases()[l].size());
    v_b[l] = m_b[l];
  }

  MlpTrainLog log;
  log.initial_train_loss = net.loss(x_train, y_train);
  log.best_val_loss = net.loss(x_val, y_val);
  log.train_loss_at_best = log.initial_train_loss;
  Vector best_params = net.parameters();

  auto mutable_weights = [&]() -> std::vector<Matrix>& {
    return const_cast<std::vector<Matrix>&>(net.weights());
  };
  auto mutable_biases = [&]() -> std::vector<Vector>& {
    return const_cast<std::vector<Vector>&>(net.biases());
  };

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);

  long long step = 0;
  int stale_epochs = 0;
  for (int epoch = 0; epoch < spec.max_epochs; ++epoch) {
    log.epochs_run = epoch + 1;
    if (!full_batch) {
      for (int i = n - 1; i > 0; --i) {
        const int j = static_cast<int>(shuffle_rng.next_u64() % (i + 1));
        std::swap(order[static_cast<size_t>(i)], order[static_cast<size_t>(j)]);
      }
    }
    const int batch = full_batch ? n : spec.batch_size;
    for (int start = 0; start < n; start += batch) {
      const int count = std::min(batch, n - start);
      Matrix xb(count, x_train.cols()), yb(count, y_train.cols());
      if (full_batch) {
        xb = x_train;
        yb = y_train;
      } else {
        for (int i = 0; i < count; ++i) {
          xb.row(i) = x_train.row(order[static_cast<size_t>(start + i)]);
          yb.row(i) = y_train.row(order[static_cast<size_t>(start + i)]);
        }
      }
      const double batch_loss = net.loss_and_gradient(xb, yb, grad_w, grad_b);
      if (!std::isfinite(batch_loss)) {
        throw std::runtime_error("train_mlp: non-finite training loss (learning diverged)");
      }
      ++step;
      const double corr1 = 1.0 - std::pow(spec.adam_beta1, static_cast<double>(step));
      const double corr2 = 1.0 - std::pow(spec.adam_beta2, static_cast<double>(step));
      for (size_t l = 0; l < layers; ++l) {
        m_w[l] = spec.adam_beta1 * m_w[l] + (1.0 - spec.adam_beta1) * grad_w[l];
        v_w[l] = spec.adam_beta2 * v_w[l].array().matrix() +
                 (1.0 - spec.adam_beta2) * grad_w[l].array().square().matrix();
        m_b[l] = spec.adam_beta1 * m_b[l] + (1.0 - spec.adam_beta1) * grad_b[l];
        v_b[l] = spec.adam_beta2 * v_b[l].array().matrix() +
                 (1.0 - spec.adam_beta2) * grad_b[l].array().square().matrix();
        mutable_weights()[l].array() -=
            spec.adam_step * (m_w[l].array() / corr1) /
            ((v_w[l].array() / corr2).sqrt() + spec.adam_eps);
        mutable_biases()[l].array() -=
            spec.adam_step * (m_b[l].array() / corr1) /
            ((v_b[l].array() / corr2).sqrt() + spec.adam_eps);
      }
    }
    const double val_loss = net.loss(x_val, y_val);
    if (!std::isfinite(val_loss)) {
      throw std::runtime_error("train_mlp: non-finite validation loss (learning diverged)");
    }
    if (val_loss < log.best_val_loss) {
      log.best_val_loss = val_loss;
      log.train_loss_at_best = net.loss(x_train, y_train);
      log.val_improvements.push_back(val_loss);
      log.train_at_improvements.push_back(log.train_loss_at_best);
      best_params = net.parameters();
      stale_epochs = 0;
    } else {
      if (++stale_epochs >= spec.patience) break;
    }
  }
  net.set_parameters(best_params);
  return log;
}

}  // namespace abc
