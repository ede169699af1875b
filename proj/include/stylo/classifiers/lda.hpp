#pragma once

// Linear discriminant analysis: class means with a pooled covariance,
// ridge-stabilized by 1e-3 * trace / dim. Discriminant values go through a
// softmax for the confidence distribution. Features are standardized first.

#include <Eigen/Dense>
#include <vector>

#include "stylo/classifiers/common.hpp"

namespace stylo {

struct LdaModel {
  Standardizer standardizer;
  Matrix means;        // n_classes x dim (standardized space)
  Matrix solved;       // n_classes x dim, rows are Sigma^-1 * mean_c
  std::vector<double> constants;  // -0.5 mean_c' Sigma^-1 mean_c + log prior_c
  std::size_t n_classes = 0;

  std::vector<double> confidence(const std::vector<double>& x) const {
    const auto xs = standardizer.apply(x);
    std::vector<double> z(n_classes, 0.0);
    for (std::size_t c = 0; c < n_classes; ++c) {
      double dot = constants[c];
      for (std::size_t j = 0; j < xs.size(); ++j) dot += solved[c][j] * xs[j];
      z[c] = dot;
    }
    return softmax(std::move(z));
  }
};

inline LdaModel train_lda(const Matrix& X, const std::vector<int>& y,
                          std::size_t n_classes, const Hyper& hyper) {
  detail::check_training_inputs(X, y, n_classes);
  const double ridge_factor = hyper_or(hyper, "ridge", 1e-3);
  const std::size_t n = X.size();
  const auto d = static_cast<long>(X[0].size());

  LdaModel model;
  model.n_classes = n_classes;
  model.standardizer.fit(X);
  const Matrix Xs = model.standardizer.apply(X);

  std::vector<double> counts(n_classes, 0.0);
  Eigen::MatrixXd mu = Eigen::MatrixXd::Zero(static_cast<long>(n_classes), d);
  for (std::size_t i = 0; i < n; ++i) {
    counts[static_cast<std::size_t>(y[i])] += 1.0;
    for (long j = 0; j < d; ++j) mu(y[i], j) += Xs[i][static_cast<std::size_t>(j)];
  }
  for (std::size_t c = 0; c < n_classes; ++c) {
    if (counts[c] == 0.0) throw Error("lda: class without samples");
    mu.row(static_cast<long>(c)) /= counts[c];
  }

  Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(d, d);
  Eigen::VectorXd diff(d);
  for (std::size_t i = 0; i < n; ++i) {
    for (long j = 0; j < d; ++j)
      diff(j) = Xs[i][static_cast<std::size_t>(j)] - mu(y[i], j);
    sigma.noalias() += diff * diff.transpose();
  }
  const double denom = std::max<double>(1.0, static_cast<double>(n) -
                                                 static_cast<double>(n_classes));
  sigma /= denom;
  double ridge = ridge_factor * sigma.trace() / static_cast<double>(d);
  if (ridge <= 0.0) ridge = 1e-9;
  sigma += ridge * Eigen::MatrixXd::Identity(d, d);

  const Eigen::LLT<Eigen::MatrixXd> llt(sigma);
  model.means.assign(n_classes, std::vector<double>(static_cast<std::size_t>(d)));
  model.solved.assign(n_classes, std::vector<double>(static_cast<std::size_t>(d)));
  for (std::size_t c = 0; c < n_classes; ++c) {
    const Eigen::VectorXd mean_c = mu.row(static_cast<long>(c)).transpose();
    const Eigen::VectorXd z = llt.solve(mean_c);
    for (long j = 0; j < d; ++j) {
      model.means[c][static_cast<std::size_t>(j)] = mean_c(j);
      model.solved[c][static_cast<std::size_t>(j)] = z(j);
    }
    model.constants.push_back(-0.5 * mean_c.dot(z) +
                              std::log(counts[c] / static_cast<double>(n)));
  }
  return model;
}

inline void to_json(nlohmann::json& j, const LdaModel& m) {
  j = nlohmann::json{{"standardizer", m.standardizer},
                     {"means", m.means},
                     {"solved", m.solved},
                     {"constants", m.constants},
                     {"n_classes", m.n_classes}};
}

inline void from_json(const nlohmann::json& j, LdaModel& m) {
  j.at("standardizer").get_to(m.standardizer);
  j.at("means").get_to(m.means);
  j.at("solved").get_to(m.solved);
  j.at("constants").get_to(m.constants);
  j.at("n_classes").get_to(m.n_classes);
}

}  // namespace stylo
