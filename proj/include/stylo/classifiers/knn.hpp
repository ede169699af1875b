#pragma once

// k-nearest neighbors over standardized features with Euclidean distance.
// Confidence is the class-vote fraction among the k neighbors; distance ties
// resolve by training-row index for determinism.

#include <algorithm>
#include <vector>

#include "stylo/classifiers/common.hpp"

namespace stylo {

struct KnnModel {
  Standardizer standardizer;
  Matrix train_x;  // standardized
  std::vector<int> train_y;
  std::size_t n_classes = 0;
  std::size_t k = 5;

  std::vector<double> confidence(const std::vector<double>& x) const {
    const auto xs = standardizer.apply(x);
    std::vector<std::pair<double, std::size_t>> dist;
    dist.reserve(train_x.size());
    for (std::size_t i = 0; i < train_x.size(); ++i) {
      double d2 = 0.0;
      for (std::size_t j = 0; j < xs.size(); ++j) {
        const double diff = xs[j] - train_x[i][j];
        d2 += diff * diff;
      }
      dist.emplace_back(d2, i);
    }
    const std::size_t kk = std::min(k, dist.size());
    std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(kk),
                      dist.end());
    std::vector<double> votes(n_classes, 0.0);
    for (std::size_t i = 0; i < kk; ++i) {
      votes[static_cast<std::size_t>(train_y[dist[i].second])] += 1.0;
    }
    for (double& v : votes) v /= static_cast<double>(kk);
    return votes;
  }
};

inline KnnModel train_knn(const Matrix& X, const std::vector<int>& y,
                          std::size_t n_classes, const Hyper& hyper) {
  detail::check_training_inputs(X, y, n_classes);
  KnnModel model;
  model.n_classes = n_classes;
  model.k = static_cast<std::size_t>(hyper_or(hyper, "k", 5));
  model.standardizer.fit(X);
  model.train_x = model.standardizer.apply(X);
  model.train_y = y;
  return model;
}

inline void to_json(nlohmann::json& j, const KnnModel& m) {
  j = nlohmann::json{{"standardizer", m.standardizer},
                     {"train_x", m.train_x},
                     {"train_y", m.train_y},
                     {"n_classes", m.n_classes},
                     {"k", m.k}};
}

inline void from_json(const nlohmann::json& j, KnnModel& m) {
  j.at("standardizer").get_to(m.standardizer);
  j.at("train_x").get_to(m.train_x);
  j.at("train_y").get_to(m.train_y);
  j.at("n_classes").get_to(m.n_classes);
  j.at("k").get_to(m.k);
}

}  // namespace stylo
