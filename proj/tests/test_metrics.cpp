#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "ctr/metrics.hpp"

using namespace ctr;

namespace {

// O(n^2) pair-counting oracle, ties worth 1/2.
double brute_force_auc(const std::vector<int>& labels, const std::vector<double>& scores) {
  double wins = 0.0;
  size_t pairs = 0;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != 1) continue;
    for (size_t j = 0; j < labels.size(); ++j) {
      if (labels[j] != 0) continue;
      ++pairs;
      if (scores[i] > scores[j]) {
        wins += 1.0;
      } else if (scores[i] == scores[j]) {
        wins += 0.5;
      }
    }
  }
  return wins / static_cast<double>(pairs);
}

}  // namespace

TEST_CASE("logloss examples") {
  std::vector<int> ones{1, 1, 1};
  std::vector<double> half{0.5, 0.5, 0.5};
  CHECK(logloss(ones, half) == doctest::Approx(std::log(2.0)).epsilon(1e-12));

  std::vector<int> labels{1, 0};
  std::vector<double> perfect{1.0, 0.0};
  CHECK(logloss(labels, perfect) == doctest::Approx(0.0).epsilon(1e-6));

  // (1, 0.9), (0, 0.9) -> (-ln 0.9 - ln 0.1)/2
  std::vector<double> nine{0.9, 0.9};
  CHECK(logloss(labels, nine) == doctest::Approx(1.2039728043259361).epsilon(1e-12));

  CHECK_THROWS_AS(logloss({}, {}), DataError);
}

TEST_CASE("auc examples") {
  std::vector<int> labels{1, 0, 1, 0};
  std::vector<double> separated{0.9, 0.1, 0.8, 0.2};
  CHECK(auc(labels, separated) == 1.0);

  std::vector<double> equal{0.4, 0.4, 0.4, 0.4};
  CHECK(auc(labels, equal) == 0.5);

  // 3 of 4 pairs ranked correctly
  std::vector<double> mixed{0.9, 0.8, 0.7, 0.1};
  CHECK(auc(labels, mixed) == doctest::Approx(0.75));

  std::vector<int> single{1, 1};
  std::vector<double> s{0.3, 0.7};
  CHECK_THROWS_AS(auc(single, s), DataError);
}

TEST_CASE("rank-based auc equals brute force exactly, ties included") {
  Rng rng(1234);
  for (int trial = 0; trial < 60; ++trial) {
    size_t n = 2 + rng.below(400);
    std::vector<int> labels(n);
    std::vector<double> scores(n);
    bool quantize = trial % 2 == 0;  // force heavy ties on half the trials
    for (size_t i = 0; i < n; ++i) {
      labels[i] = rng.uniform() < 0.3 ? 1 : 0;
      scores[i] = quantize ? std::floor(rng.uniform() * 5.0) / 5.0 : rng.uniform();
    }
    // ensure both classes are present
    labels[0] = 1;
    labels[n - 1] = 0;
    CHECK(auc(labels, scores) == brute_force_auc(labels, scores));
  }
}

TEST_CASE("auc invariant under strictly increasing transforms") {
  Rng rng(77);
  size_t n = 300;
  std::vector<int> labels(n);
  std::vector<double> scores(n), exp_scores(n), affine_scores(n);
  for (size_t i = 0; i < n; ++i) {
    labels[i] = rng.uniform() < 0.4 ? 1 : 0;
    scores[i] = rng.uniform(-3, 3);
    exp_scores[i] = std::exp(scores[i]);
    affine_scores[i] = 2.5 * scores[i] + 11.0;
  }
  labels[0] = 1;
  labels[1] = 0;
  double base = auc(labels, scores);
  CHECK(auc(labels, exp_scores) == doctest::Approx(base).epsilon(1e-12));
  CHECK(auc(labels, affine_scores) == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("rela_imp formula") {
  CHECK(rela_imp(0.7, 0.7) == 0.0);
  CHECK(rela_imp(0.75, 0.80) == doctest::Approx(20.0).epsilon(1e-12));
  CHECK_THROWS_AS(rela_imp(0.5, 0.7), DataError);
  CHECK_THROWS_AS(rela_imp(0.45, 0.7), DataError);
}

TEST_CASE("rela_imp reproduces the published reference pairs") {
  // (baseline auc, improved auc) -> printed relative improvement, percent
  struct Ref {
    double base, improved, printed;
  };
  const Ref refs[] = {
      {0.7462, 0.7479, 0.69}, {0.7454, 0.7467, 0.53}, {0.7459, 0.7500, 1.66},
      {0.7401, 0.7456, 2.29}, {0.7476, 0.7499, 0.93}, {0.7428, 0.7464, 1.48},
      {0.7480, 0.7506, 1.05},
  };
  for (const Ref& r : refs) {
    CHECK(std::fabs(rela_imp(r.base, r.improved) - r.printed) < 0.02);
  }
}

TEST_CASE("MetricsReport serializes to stable JSON") {
  MetricsReport rep;
  rep.logloss = 0.5;
  rep.auc = 0.75;
  rep.sample_count = 10;
  rep.positive_count = 3;
  std::string j = rep.to_json();
  CHECK(j.find("\"logloss\"") != std::string::npos);
  CHECK(j.find("\"auc\"") != std::string::npos);
  CHECK(j.find("\"relaimp_vs_baseline\"") == std::string::npos);  // unset -> omitted
  rep.relaimp_vs_baseline = 1.5;
  CHECK(rep.to_json().find("\"relaimp_vs_baseline\"") != std::string::npos);
}
