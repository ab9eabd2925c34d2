#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "clinfeat/classifier.hpp"

namespace clinfeat {

namespace {

// mt19937_64 gives a portable sequence; the modulo draw keeps shuffles
// reproducible across standard libraries.
void seeded_shuffle(std::vector<std::size_t>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[rng() % i]);
}

}  // namespace

RawDataset dataset_from_table(const FeatureTable& table,
                              const std::map<std::string, int>& labels,
                              const std::vector<std::string>& feature_subset) {
  std::vector<std::size_t> cols;
  for (const auto& want : feature_subset) {
    auto it = std::find(table.feature_names.begin(), table.feature_names.end(), want);
    if (it == table.feature_names.end())
      throw ValidationError("feature table has no column '" + want + "'");
    cols.push_back(static_cast<std::size_t>(it - table.feature_names.begin()));
  }

  RawDataset ds;
  ds.feature_names = feature_subset;
  for (const auto& [id, values] : table.rows) {
    auto it = labels.find(id);
    if (it == labels.end()) throw ValidationError("no label for document '" + id + "'");
    std::vector<FeatureValue> row;
    row.reserve(cols.size());
    for (std::size_t c : cols) row.push_back(values[c].second);
    ds.X.push_back(std::move(row));
    ds.y.push_back(it->second);
    ds.ids.push_back(id);
  }
  return ds;
}

StandardizeResult standardize_fit_apply(const std::vector<std::vector<FeatureValue>>& X) {
  const std::size_t n = X.size();
  if (n < 2) throw ValidationError("standardization needs at least 2 samples");
  const std::size_t d = X.front().size();

  StandardizeResult out;
  out.mu.assign(d, 0.0);
  out.sigma.assign(d, 1.0);
  out.X.assign(n, std::vector<double>(d, 0.0));

  for (std::size_t j = 0; j < d; ++j) {
    double sum = 0.0;
    std::size_t present = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (X[i][j]) {
        sum += *X[i][j];
        ++present;
      }
    }
    double mean = present > 0 ? sum / static_cast<double>(present) : 0.0;
    double var = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double v = X[i][j] ? *X[i][j] : mean;  // impute with the training mean
      var += (v - mean) * (v - mean);
    }
    var /= static_cast<double>(n);
    double sd = std::sqrt(var);
    if (!(sd > 0.0)) sd = 1.0;  // zero-variance columns pass through
    out.mu[j] = mean;
    out.sigma[j] = sd;
    for (std::size_t i = 0; i < n; ++i) {
      double v = X[i][j] ? *X[i][j] : mean;
      out.X[i][j] = (v - mean) / sd;
    }
  }
  return out;
}

double hinge_objective(const std::vector<std::vector<double>>& X,
                       const std::vector<int>& y, std::span<const double> w,
                       double b, double lambda) {
  const std::size_t n = X.size();
  double loss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double score = b;
    for (std::size_t j = 0; j < w.size(); ++j) score += w[j] * X[i][j];
    loss += std::max(0.0, 1.0 - y[i] * score);
  }
  double reg = 0.0;
  for (double wj : w) reg += wj * wj;
  return loss / static_cast<double>(n) + lambda * reg;
}

TrainResult train_linear_svm(const std::vector<std::vector<double>>& X,
                             const std::vector<int>& y, const SvmParams& params) {
  const std::size_t n = X.size();
  if (n == 0 || y.size() != n) throw ValidationError("empty or misaligned training data");
  const std::size_t d = X.front().size();

  bool has_pos = false, has_neg = false;
  for (int label : y) {
    if (label > 0) has_pos = true;
    else has_neg = true;
  }
  if (!has_pos || !has_neg)
    throw ValidationError("training requires both classes present");

  TrainResult result;
  result.w.assign(d, 0.0);
  std::vector<double>& w = result.w;
  double& b = result.b;

  std::mt19937_64 rng(params.seed);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);

  long t = 0;
  for (int epoch = 0; epoch < params.epochs; ++epoch) {
    seeded_shuffle(order, rng);
    for (std::size_t i : order) {
      ++t;
      const double eta = 1.0 / (params.lambda * static_cast<double>(t));
      const std::vector<double>& x = X[i];
      double score = b;
      for (std::size_t j = 0; j < d; ++j) score += w[j] * x[j];

      const double shrink = 1.0 - 2.0 * eta * params.lambda;  // from grad of lambda*|w|^2
      if (y[i] * score < 1.0) {
        for (std::size_t j = 0; j < d; ++j) w[j] = shrink * w[j] + eta * y[i] * x[j];
        b += eta * y[i];
      } else {
        for (std::size_t j = 0; j < d; ++j) w[j] = shrink * w[j];
      }
    }
    if (params.record_objective)
      result.objective_per_epoch.push_back(hinge_objective(X, y, w, b, params.lambda));
  }
  return result;
}

double LinearModel::decision(std::span<const FeatureValue> raw) const {
  double score = b;
  for (std::size_t j = 0; j < w.size(); ++j) {
    double v = raw[j] ? *raw[j] : mu[j];
    score += w[j] * (v - mu[j]) / sigma[j];
  }
  return score;
}

LinearModel fit_model(const RawDataset& train, const SvmParams& params) {
  StandardizeResult std_result = standardize_fit_apply(train.X);
  TrainResult trained = train_linear_svm(std_result.X, train.y, params);
  LinearModel model;
  model.feature_names = train.feature_names;
  model.w = std::move(trained.w);
  model.b = trained.b;
  model.mu = std::move(std_result.mu);
  model.sigma = std::move(std_result.sigma);
  return model;
}

RfeResult rfe(const RawDataset& train, std::size_t target_k, const SvmParams& params) {
  const std::size_t d = train.n_features();
  if (d < target_k)
    throw ValidationError("cannot select " + std::to_string(target_k) + " of " +
                          std::to_string(d) + " features");

  StandardizeResult std_all = standardize_fit_apply(train.X);
  std::vector<std::size_t> active(d);
  std::iota(active.begin(), active.end(), 0);

  RfeResult result;
  while (active.size() > target_k) {
    std::vector<std::vector<double>> sub(train.n_samples(),
                                         std::vector<double>(active.size()));
    for (std::size_t i = 0; i < train.n_samples(); ++i)
      for (std::size_t j = 0; j < active.size(); ++j)
        sub[i][j] = std_all.X[i][active[j]];

    TrainResult trained = train_linear_svm(sub, train.y, params);
    std::size_t drop = 0;
    for (std::size_t j = 1; j < active.size(); ++j)
      if (std::abs(trained.w[j]) < std::abs(trained.w[drop])) drop = j;
    // ties keep the first (lowest original column index): strict < above

    result.elimination_order.push_back(train.feature_names[active[drop]]);
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(drop));
  }

  RawDataset survivors;
  for (std::size_t j : active) survivors.feature_names.push_back(train.feature_names[j]);
  survivors.y = train.y;
  survivors.ids = train.ids;
  for (const auto& row : train.X) {
    std::vector<FeatureValue> r;
    r.reserve(active.size());
    for (std::size_t j : active) r.push_back(row[j]);
    survivors.X.push_back(std::move(r));
  }
  result.selected = survivors.feature_names;
  result.model = fit_model(survivors, params);
  return result;
}

Evaluation evaluate(const LinearModel& model, const RawDataset& test) {
  if (test.n_samples() == 0) throw ValidationError("empty test set");
  long correct = 0, tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < test.n_samples(); ++i) {
    int predicted = model.predict(test.X[i]);
    if (predicted == test.y[i]) ++correct;
    if (predicted == 1 && test.y[i] == 1) ++tp;
    if (predicted == 1 && test.y[i] == -1) ++fp;
    if (predicted == -1 && test.y[i] == 1) ++fn;
  }
  Evaluation eval;
  eval.accuracy = static_cast<double>(correct) / static_cast<double>(test.n_samples());
  double denom = static_cast<double>(2 * tp + fp + fn);
  eval.f1 = denom > 0 ? 2.0 * static_cast<double>(tp) / denom : 0.0;
  return eval;
}

namespace {

RawDataset subset(const RawDataset& data, const std::vector<std::size_t>& idx) {
  RawDataset out;
  out.feature_names = data.feature_names;
  for (std::size_t i : idx) {
    out.X.push_back(data.X[i]);
    out.y.push_back(data.y[i]);
    out.ids.push_back(data.ids.empty() ? std::string() : data.ids[i]);
  }
  return out;
}

}  // namespace

SplitResult balanced_split(const RawDataset& data, double test_fraction,
                           std::uint64_t seed) {
  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < data.n_samples(); ++i)
    (data.y[i] > 0 ? pos : neg).push_back(i);
  if (pos.size() < 2 || neg.size() < 2)
    throw ValidationError("balanced split needs at least 2 samples per class");

  std::mt19937_64 rng(seed);
  seeded_shuffle(pos, rng);
  seeded_shuffle(neg, rng);

  const std::size_t per_class = std::min(pos.size(), neg.size());
  const auto n_test = static_cast<std::size_t>(
      std::llround(static_cast<double>(per_class) * test_fraction));
  if (n_test < 1 || n_test >= per_class)
    throw ValidationError("test fraction leaves an empty partition");

  std::vector<std::size_t> test_idx, train_idx;
  for (std::size_t i = 0; i < per_class; ++i) {
    (i < n_test ? test_idx : train_idx).push_back(pos[i]);
    (i < n_test ? test_idx : train_idx).push_back(neg[i]);
  }
  std::sort(test_idx.begin(), test_idx.end());
  std::sort(train_idx.begin(), train_idx.end());
  return {subset(data, train_idx), subset(data, test_idx)};
}

}  // namespace clinfeat
