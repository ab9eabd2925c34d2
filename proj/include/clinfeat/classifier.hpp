#ifndef CLINFEAT_CLASSIFIER_HPP
#define CLINFEAT_CLASSIFIER_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "clinfeat/model.hpp"
#include "clinfeat/pipeline.hpp"

namespace clinfeat {

// Samples with raw (possibly NA) feature values and +1/-1 labels.
struct RawDataset {
  std::vector<std::string> feature_names;
  std::vector<std::vector<FeatureValue>> X;  // n_samples x n_features
  std::vector<int> y;                        // +1 aphasia, -1 control
  std::vector<std::string> ids;

  std::size_t n_samples() const { return X.size(); }
  std::size_t n_features() const { return feature_names.size(); }
};

// Joins a feature table with doc_id -> label, keeping `feature_subset`
// columns in table order. Missing labels or columns are errors.
RawDataset dataset_from_table(const FeatureTable& table,
                              const std::map<std::string, int>& labels,
                              const std::vector<std::string>& feature_subset);

struct StandardizeResult {
  std::vector<std::vector<double>> X;  // imputed and standardized
  std::vector<double> mu;
  std::vector<double> sigma;  // 1 for zero-variance columns
};

// Per-column: impute NA with the column mean, subtract the mean, divide by
// the population standard deviation. Requires >= 2 samples.
StandardizeResult standardize_fit_apply(const std::vector<std::vector<FeatureValue>>& X);

struct SvmParams {
  double lambda = 1e-3;
  int epochs = 1000;
  std::uint64_t seed = 1;
  bool record_objective = false;
};

struct TrainResult {
  std::vector<double> w;
  double b = 0.0;
  std::vector<double> objective_per_epoch;  // filled when record_objective
};

// Minimizes (1/n) sum hinge(y(w.x+b)) + lambda*|w|^2 by seeded-shuffle
// subgradient descent with step 1/(lambda*t). Deterministic per
// (dataset, params). Requires both classes present.
TrainResult train_linear_svm(const std::vector<std::vector<double>>& X,
                             const std::vector<int>& y, const SvmParams& params);

double hinge_objective(const std::vector<std::vector<double>>& X,
                       const std::vector<int>& y, std::span<const double> w,
                       double b, double lambda);

struct LinearModel {
  std::vector<std::string> feature_names;
  std::vector<double> w;
  double b = 0.0;
  std::vector<double> mu;     // standardization learned on training data
  std::vector<double> sigma;

  // Expects raw (unstandardized) values aligned with feature_names; NA is
  // imputed with the training mean.
  double decision(std::span<const FeatureValue> raw) const;
  int predict(std::span<const FeatureValue> raw) const {
    return decision(raw) >= 0 ? 1 : -1;
  }
};

// Trains on the full dataset (standardizing first) without feature selection.
LinearModel fit_model(const RawDataset& train, const SvmParams& params);

struct RfeResult {
  std::vector<std::string> selected;             // survivors in original column order
  LinearModel model;                             // retrained on the survivors
  std::vector<std::string> elimination_order;    // first dropped first
};

// Repeatedly drops the feature with the smallest trained |w| (ties to the
// lower column index) until target_k remain.
RfeResult rfe(const RawDataset& train, std::size_t target_k, const SvmParams& params);

struct Evaluation {
  double accuracy = 0.0;
  double f1 = 0.0;  // on the +1 class
};

Evaluation evaluate(const LinearModel& model, const RawDataset& test);

struct SplitResult {
  RawDataset train;
  RawDataset test;
};

// Class-stratified split with equal class counts in each partition; excess
// majority samples are dropped at random. Deterministic per seed.
SplitResult balanced_split(const RawDataset& data, double test_fraction,
                           std::uint64_t seed);

}  // namespace clinfeat

#endif
