#pragma once

// Gaussian naive Bayes with a per-feature variance floor of 1e-9. Posterior
// is computed in log space and never produces NaN/Inf on finite inputs.

#include <cmath>
#include <vector>

#include "stylo/classifiers/common.hpp"

namespace stylo {

struct NaiveBayesModel {
  Matrix means;      // n_classes x dim
  Matrix variances;  // n_classes x dim, floored
  std::vector<double> log_priors;
  std::size_t n_classes = 0;

  std::vector<double> confidence(const std::vector<double>& x) const {
    std::vector<double> logp(n_classes, 0.0);
    for (std::size_t c = 0; c < n_classes; ++c) {
      double lp = log_priors[c];
      for (std::size_t j = 0; j < x.size(); ++j) {
        const double var = variances[c][j];
        const double diff = x[j] - means[c][j];
        lp += -0.5 * std::log(2.0 * M_PI * var) - diff * diff / (2.0 * var);
      }
      logp[c] = lp;
    }
    return softmax(std::move(logp));
  }
};

inline NaiveBayesModel train_naive_bayes(const Matrix& X, const std::vector<int>& y,
                                         std::size_t n_classes, const Hyper& hyper) {
  detail::check_training_inputs(X, y, n_classes);
  const double floor = hyper_or(hyper, "variance_floor", 1e-9);
  const std::size_t d = X[0].size();

  NaiveBayesModel model;
  model.n_classes = n_classes;
  model.means.assign(n_classes, std::vector<double>(d, 0.0));
  model.variances.assign(n_classes, std::vector<double>(d, 0.0));
  std::vector<double> counts(n_classes, 0.0);

  for (std::size_t i = 0; i < X.size(); ++i) {
    const auto c = static_cast<std::size_t>(y[i]);
    counts[c] += 1.0;
    for (std::size_t j = 0; j < d; ++j) model.means[c][j] += X[i][j];
  }
  for (std::size_t c = 0; c < n_classes; ++c) {
    if (counts[c] == 0.0) throw Error("naive bayes: class without samples");
    for (std::size_t j = 0; j < d; ++j) model.means[c][j] /= counts[c];
  }
  for (std::size_t i = 0; i < X.size(); ++i) {
    const auto c = static_cast<std::size_t>(y[i]);
    for (std::size_t j = 0; j < d; ++j) {
      const double diff = X[i][j] - model.means[c][j];
      model.variances[c][j] += diff * diff;
    }
  }
  for (std::size_t c = 0; c < n_classes; ++c) {
    for (std::size_t j = 0; j < d; ++j) {
      model.variances[c][j] = std::max(model.variances[c][j] / counts[c], floor);
    }
    model.log_priors.push_back(std::log(counts[c] / static_cast<double>(X.size())));
  }
  return model;
}

inline void to_json(nlohmann::json& j, const NaiveBayesModel& m) {
  j = nlohmann::json{{"means", m.means},
                     {"variances", m.variances},
                     {"log_priors", m.log_priors},
                     {"n_classes", m.n_classes}};
}

inline void from_json(const nlohmann::json& j, NaiveBayesModel& m) {
  j.at("means").get_to(m.means);
  j.at("variances").get_to(m.variances);
  j.at("log_priors").get_to(m.log_priors);
  j.at("n_classes").get_to(m.n_classes);
}

}  // namespace stylo
