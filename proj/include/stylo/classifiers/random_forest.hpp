#pragma once

// Random forest of CART trees: Gini split criterion, bootstrap sampling,
// ceil(sqrt(dim)) features examined per split. Confidence is the fraction of
// tree votes per class. Gini importances are accumulated during training as
// impurity decrease weighted by the node's sample fraction, summed over all
// trees and normalized to 1.

#include <cmath>
#include <numeric>
#include <vector>

#include "stylo/classifiers/common.hpp"
#include "stylo/rng.hpp"

namespace stylo {

struct TreeNode {
  int feature = -1;  // -1 for leaves
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  int leaf_class = -1;
};

struct RandomForestModel {
  std::vector<std::vector<TreeNode>> trees;
  std::vector<double> importances;  // per feature, sums to 1 (or all zero)
  std::size_t n_classes = 0;

  int tree_vote(const std::vector<TreeNode>& tree, const std::vector<double>& x) const {
    int node = 0;
    while (tree[node].feature >= 0) {
      node = x[static_cast<std::size_t>(tree[node].feature)] <= tree[node].threshold
                 ? tree[node].left
                 : tree[node].right;
    }
    return tree[node].leaf_class;
  }

  std::vector<double> confidence(const std::vector<double>& x) const {
    std::vector<double> votes(n_classes, 0.0);
    for (const auto& tree : trees) votes[static_cast<std::size_t>(tree_vote(tree, x))] += 1.0;
    for (double& v : votes) v /= static_cast<double>(trees.size());
    return votes;
  }
};

namespace detail {

struct TreeBuilder {
  const Matrix& X;
  const std::vector<int>& y;
  std::size_t n_classes;
  std::size_t features_per_split;
  std::size_t max_depth;
  double total_samples;  // bootstrap sample count, for importance weighting
  Rng& rng;
  std::vector<TreeNode> nodes;
  std::vector<double>& importances;

  static double gini(const std::vector<double>& counts, double total) {
    double g = 1.0;
    for (double c : counts) {
      const double p = c / total;
      g -= p * p;
    }
    return g;
  }

  int majority(const std::vector<double>& counts) const {
    std::size_t best = 0;
    for (std::size_t c = 1; c < counts.size(); ++c)
      if (counts[c] > counts[best]) best = c;
    return static_cast<int>(best);
  }

  int build(std::vector<std::size_t>& idx, std::size_t depth) {
    std::vector<double> counts(n_classes, 0.0);
    for (auto i : idx) counts[static_cast<std::size_t>(y[i])] += 1.0;
    const double n = static_cast<double>(idx.size());
    const double node_gini = gini(counts, n);

    const int node_id = static_cast<int>(nodes.size());
    nodes.emplace_back();

    bool pure = false;
    for (double c : counts) {
      if (c == n) pure = true;
    }
    if (pure || idx.size() < 2 || depth >= max_depth) {
      nodes[node_id].leaf_class = majority(counts);
      return node_id;
    }

    // best split over a random feature sample
    double best_gain = 1e-12;
    int best_feature = -1;
    double best_threshold = 0.0;
    const auto feats = rng.sample_indices(X[0].size(), features_per_split);
    std::vector<std::pair<double, int>> vals;
    vals.reserve(idx.size());
    for (auto f : feats) {
      vals.clear();
      for (auto i : idx) vals.emplace_back(X[i][f], y[i]);
      std::sort(vals.begin(), vals.end());
      std::vector<double> left(n_classes, 0.0);
      std::vector<double> right = counts;
      for (std::size_t k = 0; k + 1 < vals.size(); ++k) {
        const auto cls = static_cast<std::size_t>(vals[k].second);
        left[cls] += 1.0;
        right[cls] -= 1.0;
        if (vals[k].first == vals[k + 1].first) continue;
        const double nl = static_cast<double>(k + 1);
        const double nr = n - nl;
        const double gain =
            node_gini - (nl / n) * gini(left, nl) - (nr / n) * gini(right, nr);
        if (gain > best_gain) {
          best_gain = gain;
          best_feature = static_cast<int>(f);
          best_threshold = 0.5 * (vals[k].first + vals[k + 1].first);
        }
      }
    }

    if (best_feature < 0) {
      nodes[node_id].leaf_class = majority(counts);
      return node_id;
    }

    importances[static_cast<std::size_t>(best_feature)] +=
        best_gain * (n / total_samples);

    std::vector<std::size_t> left_idx, right_idx;
    for (auto i : idx)
      (X[i][static_cast<std::size_t>(best_feature)] <= best_threshold ? left_idx
                                                                      : right_idx)
          .push_back(i);
    nodes[node_id].feature = best_feature;
    nodes[node_id].threshold = best_threshold;
    nodes[node_id].left = build(left_idx, depth + 1);
    nodes[node_id].right = build(right_idx, depth + 1);
    return node_id;
  }
};

}  // namespace detail

inline RandomForestModel train_random_forest(const Matrix& X, const std::vector<int>& y,
                                             std::size_t n_classes, const Hyper& hyper,
                                             std::uint64_t seed) {
  detail::check_training_inputs(X, y, n_classes);
  const auto n_trees = static_cast<std::size_t>(hyper_or(hyper, "trees", 100));
  const auto max_depth = static_cast<std::size_t>(hyper_or(hyper, "max_depth", 48));
  const std::size_t n = X.size();
  const std::size_t d = X[0].size();
  const auto features_per_split =
      static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(d))));

  RandomForestModel model;
  model.n_classes = n_classes;
  model.importances.assign(d, 0.0);
  model.trees.reserve(n_trees);

  for (std::size_t t = 0; t < n_trees; ++t) {
    Rng rng(derive_seed(seed, "tree", t));
    std::vector<std::size_t> idx(n);
    for (auto& i : idx) i = rng.below(n);  // bootstrap
    detail::TreeBuilder builder{X,        y,   n_classes,
                                features_per_split, max_depth,
                                static_cast<double>(n), rng,
                                {},       model.importances};
    builder.build(idx, 0);
    model.trees.push_back(std::move(builder.nodes));
  }

  const double total =
      std::accumulate(model.importances.begin(), model.importances.end(), 0.0);
  if (total > 0.0) {
    for (double& v : model.importances) v /= total;
  }
  return model;
}

inline void to_json(nlohmann::json& j, const TreeNode& n) {
  j = nlohmann::json::array({n.feature, n.threshold, n.left, n.right, n.leaf_class});
}

inline void from_json(const nlohmann::json& j, TreeNode& n) {
  n.feature = j.at(0).get<int>();
  n.threshold = j.at(1).get<double>();
  n.left = j.at(2).get<int>();
  n.right = j.at(3).get<int>();
  n.leaf_class = j.at(4).get<int>();
}

inline void to_json(nlohmann::json& j, const RandomForestModel& m) {
  j = nlohmann::json{{"trees", m.trees},
                     {"importances", m.importances},
                     {"n_classes", m.n_classes}};
}

inline void from_json(const nlohmann::json& j, RandomForestModel& m) {
  j.at("trees").get_to(m.trees);
  j.at("importances").get_to(m.importances);
  j.at("n_classes").get_to(m.n_classes);
}

}  // namespace stylo
