#pragma once

// Single-hidden-layer perceptron: rectifier hidden units, softmax output,
// mini-batch gradient descent with momentum. Weight init and batch order are
// drawn from the training seed, so identical seeds give identical models.

#include <Eigen/Dense>
#include <vector>

#include "stylo/classifiers/common.hpp"
#include "stylo/rng.hpp"

namespace stylo {

struct MlpModel {
  Standardizer standardizer;
  Eigen::MatrixXd w1;  // hidden x dim
  Eigen::VectorXd b1;
  Eigen::MatrixXd w2;  // classes x hidden
  Eigen::VectorXd b2;
  std::size_t n_classes = 0;

  std::vector<double> confidence(const std::vector<double>& x) const {
    const auto xs = standardizer.apply(x);
    Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(xs.data(),
                                                          static_cast<long>(xs.size()));
    Eigen::VectorXd h = (w1 * v + b1).cwiseMax(0.0);
    Eigen::VectorXd z = w2 * h + b2;
    std::vector<double> out(z.data(), z.data() + z.size());
    return softmax(std::move(out));
  }
};

inline MlpModel train_mlp(const Matrix& X, const std::vector<int>& y,
                          std::size_t n_classes, const Hyper& hyper,
                          std::uint64_t seed) {
  detail::check_training_inputs(X, y, n_classes);
  const auto hidden = static_cast<long>(hyper_or(hyper, "hidden", 100));
  const int epochs = static_cast<int>(hyper_or(hyper, "epochs", 200));
  const auto batch_size = static_cast<std::size_t>(hyper_or(hyper, "batch", 32));
  const double lr = hyper_or(hyper, "lr", 0.05);
  const double momentum = hyper_or(hyper, "momentum", 0.9);
  const double lambda = hyper_or(hyper, "lambda", 1e-4);

  const std::size_t n = X.size();
  const auto d = static_cast<long>(X[0].size());
  const auto c_out = static_cast<long>(n_classes);

  MlpModel model;
  model.n_classes = n_classes;
  model.standardizer.fit(X);
  const Matrix Xs_rows = model.standardizer.apply(X);
  Eigen::MatrixXd Xs(d, static_cast<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    Xs.col(static_cast<long>(i)) =
        Eigen::Map<const Eigen::VectorXd>(Xs_rows[i].data(), d);

  Rng rng(derive_seed(seed, "mlp-init"));
  auto he = [&rng](Eigen::MatrixXd& m, double fan_in) {
    const double s = std::sqrt(2.0 / fan_in);
    for (long i = 0; i < m.rows(); ++i)
      for (long j = 0; j < m.cols(); ++j) m(i, j) = s * rng.normal();
  };
  model.w1.resize(hidden, d);
  model.w2.resize(c_out, hidden);
  he(model.w1, static_cast<double>(d));
  he(model.w2, static_cast<double>(hidden));
  model.b1 = Eigen::VectorXd::Zero(hidden);
  model.b2 = Eigen::VectorXd::Zero(c_out);

  Eigen::MatrixXd vw1 = Eigen::MatrixXd::Zero(hidden, d);
  Eigen::VectorXd vb1 = Eigen::VectorXd::Zero(hidden);
  Eigen::MatrixXd vw2 = Eigen::MatrixXd::Zero(c_out, hidden);
  Eigen::VectorXd vb2 = Eigen::VectorXd::Zero(c_out);

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;

  for (int epoch = 0; epoch < epochs; ++epoch) {
    rng.shuffle(order);
    for (std::size_t start = 0; start < n; start += batch_size) {
      const std::size_t end = std::min(start + batch_size, n);
      const auto bs = static_cast<long>(end - start);

      Eigen::MatrixXd xb(d, bs);
      for (long k = 0; k < bs; ++k)
        xb.col(k) = Xs.col(static_cast<long>(order[start + static_cast<std::size_t>(k)]));

      Eigen::MatrixXd h = ((model.w1 * xb).colwise() + model.b1).cwiseMax(0.0);
      Eigen::MatrixXd z = (model.w2 * h).colwise() + model.b2;

      // softmax + cross-entropy delta
      for (long k = 0; k < bs; ++k) {
        Eigen::VectorXd col = z.col(k);
        const double m = col.maxCoeff();
        col = (col.array() - m).exp();
        col /= col.sum();
        col(static_cast<long>(y[order[start + static_cast<std::size_t>(k)]])) -= 1.0;
        z.col(k) = col / static_cast<double>(bs);
      }

      Eigen::MatrixXd gw2 = z * h.transpose() + lambda * model.w2;
      Eigen::VectorXd gb2 = z.rowwise().sum();
      Eigen::MatrixXd dh = (model.w2.transpose() * z).cwiseProduct(
          (h.array() > 0.0).cast<double>().matrix());
      Eigen::MatrixXd gw1 = dh * xb.transpose() + lambda * model.w1;
      Eigen::VectorXd gb1 = dh.rowwise().sum();

      vw2 = momentum * vw2 - lr * gw2;
      vb2 = momentum * vb2 - lr * gb2;
      vw1 = momentum * vw1 - lr * gw1;
      vb1 = momentum * vb1 - lr * gb1;
      model.w2 += vw2;
      model.b2 += vb2;
      model.w1 += vw1;
      model.b1 += vb1;
    }
  }
  return model;
}

namespace detail {

inline nlohmann::json eigen_to_json(const Eigen::MatrixXd& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (long i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (long j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Eigen::MatrixXd eigen_from_json(const nlohmann::json& j) {
  const long rows = static_cast<long>(j.size());
  const long cols = rows == 0 ? 0 : static_cast<long>(j.at(0).size());
  Eigen::MatrixXd m(rows, cols);
  for (long i = 0; i < rows; ++i)
    for (long k = 0; k < cols; ++k)
      m(i, k) = j.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(k)).get<double>();
  return m;
}

}  // namespace detail

inline void to_json(nlohmann::json& j, const MlpModel& m) {
  j = nlohmann::json{{"standardizer", m.standardizer},
                     {"w1", detail::eigen_to_json(m.w1)},
                     {"b1", detail::eigen_to_json(m.b1)},
                     {"w2", detail::eigen_to_json(m.w2)},
                     {"b2", detail::eigen_to_json(m.b2)},
                     {"n_classes", m.n_classes}};
}

inline void from_json(const nlohmann::json& j, MlpModel& m) {
  j.at("standardizer").get_to(m.standardizer);
  m.w1 = detail::eigen_from_json(j.at("w1"));
  m.b1 = detail::eigen_from_json(j.at("b1"));
  m.w2 = detail::eigen_from_json(j.at("w2"));
  m.b2 = detail::eigen_from_json(j.at("b2"));
  j.at("n_classes").get_to(m.n_classes);
}

}  // namespace stylo
