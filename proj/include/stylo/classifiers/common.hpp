#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "stylo/error.hpp"

namespace stylo {

using Matrix = std::vector<std::vector<double>>;
using Hyper = std::map<std::string, double>;

inline double hyper_or(const Hyper& hyper, const std::string& key, double fallback) {
  auto it = hyper.find(key);
  return it == hyper.end() ? fallback : it->second;
}

// argmax with the lowest index winning ties
inline std::size_t argmax_index(const std::vector<double>& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] > v[best]) best = i;
  }
  return best;
}

inline std::vector<double> softmax(std::vector<double> z) {
  const double m = *std::max_element(z.begin(), z.end());
  double total = 0.0;
  for (double& x : z) {
    x = std::exp(x - m);
    total += x;
  }
  for (double& x : z) x /= total;
  return z;
}

// Per-feature mean/std scaling fitted on the training set. Constant features
// get scale 1 so they map to exactly zero.
struct Standardizer {
  std::vector<double> mean;
  std::vector<double> scale;

  void fit(const Matrix& X) {
    const std::size_t n = X.size(), d = X.empty() ? 0 : X[0].size();
    mean.assign(d, 0.0);
    scale.assign(d, 1.0);
    for (const auto& row : X)
      for (std::size_t j = 0; j < d; ++j) mean[j] += row[j];
    for (double& m : mean) m /= static_cast<double>(n);
    std::vector<double> var(d, 0.0);
    for (const auto& row : X)
      for (std::size_t j = 0; j < d; ++j) {
        const double c = row[j] - mean[j];
        var[j] += c * c;
      }
    for (std::size_t j = 0; j < d; ++j) {
      const double sd = std::sqrt(var[j] / static_cast<double>(n));
      scale[j] = sd > 1e-12 ? sd : 1.0;
    }
  }

  std::vector<double> apply(const std::vector<double>& x) const {
    std::vector<double> out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) out[j] = (x[j] - mean[j]) / scale[j];
    return out;
  }

  Matrix apply(const Matrix& X) const {
    Matrix out;
    out.reserve(X.size());
    for (const auto& row : X) out.push_back(apply(row));
    return out;
  }
};

inline void to_json(nlohmann::json& j, const Standardizer& s) {
  j = nlohmann::json{{"mean", s.mean}, {"scale", s.scale}};
}

inline void from_json(const nlohmann::json& j, Standardizer& s) {
  j.at("mean").get_to(s.mean);
  j.at("scale").get_to(s.scale);
}

namespace detail {

inline void check_training_inputs(const Matrix& X, const std::vector<int>& y,
                                  std::size_t n_classes) {
  if (X.empty() || X.size() != y.size()) {
    throw Error("training needs a non-empty X with one label per row");
  }
  if (n_classes < 2) throw Error("training needs at least 2 classes");
  const std::size_t d = X[0].size();
  for (const auto& row : X) {
    if (row.size() != d) throw Error("feature rows have inconsistent dimensions");
    for (double v : row) {
      if (!std::isfinite(v)) throw Error("non-finite feature value in training data");
    }
  }
}

}  // namespace detail

}  // namespace stylo
