#pragma once

// One-vs-rest linear SVM: L2-regularized hinge loss minimized by full-batch
// subgradient descent with the 1/(lambda*t) step schedule, on standardized
// features with an appended bias. Fully deterministic (zero init, fixed
// iteration budget). Confidence is a softmax over the per-class decision
// values.

#include <vector>

#include "stylo/classifiers/common.hpp"

namespace stylo {

struct LinearSvmModel {
  Standardizer standardizer;
  Matrix weights;  // n_classes x (dim + 1), bias last
  std::size_t n_classes = 0;

  std::vector<double> decision_values(const std::vector<double>& x) const {
    const auto xs = standardizer.apply(x);
    std::vector<double> d(n_classes, 0.0);
    for (std::size_t c = 0; c < n_classes; ++c) {
      const auto& w = weights[c];
      double dot = w.back();
      for (std::size_t j = 0; j < xs.size(); ++j) dot += w[j] * xs[j];
      d[c] = dot;
    }
    return d;
  }

  std::vector<double> confidence(const std::vector<double>& x) const {
    return softmax(decision_values(x));
  }
};

inline LinearSvmModel train_linear_svm(const Matrix& X, const std::vector<int>& y,
                                       std::size_t n_classes, const Hyper& hyper) {
  detail::check_training_inputs(X, y, n_classes);
  const double lambda = hyper_or(hyper, "lambda", 1e-2);
  const int epochs = static_cast<int>(hyper_or(hyper, "epochs", 400));
  const std::size_t n = X.size();
  const std::size_t d = X[0].size();

  LinearSvmModel model;
  model.n_classes = n_classes;
  model.standardizer.fit(X);
  const Matrix Xs = model.standardizer.apply(X);

  model.weights.assign(n_classes, std::vector<double>(d + 1, 0.0));
  std::vector<double> grad(d + 1);
  for (std::size_t c = 0; c < n_classes; ++c) {
    auto& w = model.weights[c];
    for (int t = 1; t <= epochs; ++t) {
      const double eta = 1.0 / (lambda * static_cast<double>(t));
      for (std::size_t j = 0; j <= d; ++j) grad[j] = lambda * w[j];
      for (std::size_t i = 0; i < n; ++i) {
        const double label = (y[i] == static_cast<int>(c)) ? 1.0 : -1.0;
        double dot = w[d];
        for (std::size_t j = 0; j < d; ++j) dot += w[j] * Xs[i][j];
        if (label * dot < 1.0) {
          const double f = label / static_cast<double>(n);
          for (std::size_t j = 0; j < d; ++j) grad[j] -= f * Xs[i][j];
          grad[d] -= f;
        }
      }
      for (std::size_t j = 0; j <= d; ++j) w[j] -= eta * grad[j];
    }
  }
  return model;
}

inline void to_json(nlohmann::json& j, const LinearSvmModel& m) {
  j = nlohmann::json{{"standardizer", m.standardizer},
                     {"weights", m.weights},
                     {"n_classes", m.n_classes}};
}

inline void from_json(const nlohmann::json& j, LinearSvmModel& m) {
  j.at("standardizer").get_to(m.standardizer);
  j.at("weights").get_to(m.weights);
  j.at("n_classes").get_to(m.n_classes);
}

}  // namespace stylo
