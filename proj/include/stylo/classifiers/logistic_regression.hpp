#pragma once

// Multinomial logistic regression with L2 regularization, trained by
// full-batch gradient descent with a fixed iteration budget. Zero init on
// standardized features keeps training deterministic.

#include <vector>

#include "stylo/classifiers/common.hpp"

namespace stylo {

struct LogisticRegressionModel {
  Standardizer standardizer;
  Matrix weights;  // n_classes x (dim + 1), bias last
  std::size_t n_classes = 0;

  std::vector<double> confidence(const std::vector<double>& x) const {
    const auto xs = standardizer.apply(x);
    std::vector<double> z(n_classes, 0.0);
    for (std::size_t c = 0; c < n_classes; ++c) {
      const auto& w = weights[c];
      double dot = w.back();
      for (std::size_t j = 0; j < xs.size(); ++j) dot += w[j] * xs[j];
      z[c] = dot;
    }
    return softmax(std::move(z));
  }
};

inline LogisticRegressionModel train_logistic_regression(const Matrix& X,
                                                         const std::vector<int>& y,
                                                         std::size_t n_classes,
                                                         const Hyper& hyper) {
  detail::check_training_inputs(X, y, n_classes);
  const double lr = hyper_or(hyper, "lr", 0.5);
  const int epochs = static_cast<int>(hyper_or(hyper, "epochs", 400));
  const double lambda = hyper_or(hyper, "lambda", 1e-4);
  const std::size_t n = X.size();
  const std::size_t d = X[0].size();

  LogisticRegressionModel model;
  model.n_classes = n_classes;
  model.standardizer.fit(X);
  const Matrix Xs = model.standardizer.apply(X);
  model.weights.assign(n_classes, std::vector<double>(d + 1, 0.0));

  Matrix grad(n_classes, std::vector<double>(d + 1, 0.0));
  std::vector<double> z(n_classes);
  for (int t = 0; t < epochs; ++t) {
    for (std::size_t c = 0; c < n_classes; ++c)
      for (std::size_t j = 0; j <= d; ++j) grad[c][j] = lambda * model.weights[c][j];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < n_classes; ++c) {
        const auto& w = model.weights[c];
        double dot = w.back();
        for (std::size_t j = 0; j < d; ++j) dot += w[j] * Xs[i][j];
        z[c] = dot;
      }
      const auto p = softmax(z);
      for (std::size_t c = 0; c < n_classes; ++c) {
        const double err =
            (p[c] - (y[i] == static_cast<int>(c) ? 1.0 : 0.0)) / static_cast<double>(n);
        for (std::size_t j = 0; j < d; ++j) grad[c][j] += err * Xs[i][j];
        grad[c][d] += err;
      }
    }
    for (std::size_t c = 0; c < n_classes; ++c)
      for (std::size_t j = 0; j <= d; ++j) model.weights[c][j] -= lr * grad[c][j];
  }
  return model;
}

inline void to_json(nlohmann::json& j, const LogisticRegressionModel& m) {
  j = nlohmann::json{{"standardizer", m.standardizer},
                     {"weights", m.weights},
                     {"n_classes", m.n_classes}};
}

inline void from_json(const nlohmann::json& j, LogisticRegressionModel& m) {
  j.at("standardizer").get_to(m.standardizer);
  j.at("weights").get_to(m.weights);
  j.at("n_classes").get_to(m.n_classes);
}

}  // namespace stylo
