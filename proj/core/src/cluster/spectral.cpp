// Copyright 2026 The ihgmm Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ihgmm/cluster/spectral.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "ihgmm/error.hpp"

namespace ihgmm {
namespace {

void check_inputs(const Matrix& x, int K, int min_K) {
  if (K < min_K) {
    throw Error(ErrorCode::kInvalidArgument, "K must be >= " + std::to_string(min_K));
  }
  if (x.cols() < K) throw Error(ErrorCode::kInvalidArgument, "fewer observations than clusters");
  if (x.rows() < 1) throw Error(ErrorCode::kInvalidArgument, "data has no features");
  if (!x.allFinite()) throw Error(ErrorCode::kInvalidArgument, "data has non-finite entries");
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kIhSC: return "IhSC";
    case Method::kPSC: return "PSC";
    case Method::kKMeansRaw: return "KMeansRaw";
    case Method::kIdealOracle: return "IdealOracle";
  }
  return "IhSC";
}

Method method_from_string(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "ihsc") return Method::kIhSC;
  if (lower == "psc") return Method::kPSC;
  if (lower == "kmeans" || lower == "k-means" || lower == "kmeansraw") return Method::kKMeansRaw;
  if (lower == "oracle" || lower == "idealoracle") return Method::kIdealOracle;
  throw Error(ErrorCode::kInvalidArgument, "unknown method '" + std::string(name) + "'");
}

Matrix hollow_gram(const Matrix& x) {
  Matrix g = gram(x);
  g.diagonal().setZero();
  return g;
}

RowNormalized row_normalize(const Matrix& u, double cutoff) {
  RowNormalized out{u, {}};
  for (Index i = 0; i < u.rows(); ++i) {
    const double norm = u.row(i).norm();
    if (norm < cutoff) {
      out.degenerate_rows.push_back(i);
      out.rows.row(i).setZero();
    } else {
      out.rows.row(i) /= norm;
    }
  }
  return out;
}

IhscResult ihsc(const Matrix& x, int K, const KMeansConfig& cfg, const IhscOptions& options) {
  check_inputs(x, K, 2);
  IhscResult result;
  HollowedSpectral& spectral = result.spectral;
  Matrix g = hollow_gram(x);
  EigenOptions eig_options;
  eig_options.selection = options.selection;
  spectral.eigen = sym_top_k_eigs(g, K, eig_options);
  if (options.retain_gram) spectral.gram = std::move(g);
  RowNormalized normalized = row_normalize(spectral.eigen.vectors);
  spectral.normalized = std::move(normalized.rows);
  spectral.degenerate_rows = std::move(normalized.degenerate_rows);

  KMeansResult km = kmeans(spectral.normalized, K, cfg);
  result.estimate = LabelEstimate{std::move(km.labels), Method::kIhSC, km.objective};
  return result;
}

LabelEstimate psc(const Matrix& x, int K, const KMeansConfig& cfg) {
  check_inputs(x, K, 1);
  const Index rank = std::min<Index>(K, std::min(x.rows(), x.cols()));
  const SvdFactors svd = thin_svd(x, rank);
  const Matrix projected = svd.right * svd.singulars.asDiagonal();
  KMeansResult km = kmeans(projected, K, cfg);
  return LabelEstimate{std::move(km.labels), Method::kPSC, km.objective};
}

LabelEstimate kmeans_raw(const Matrix& x, int K, const KMeansConfig& cfg) {
  check_inputs(x, K, 1);
  KMeansResult km = kmeans(x.transpose(), K, cfg);
  return LabelEstimate{std::move(km.labels), Method::kKMeansRaw, km.objective};
}

LabelEstimate ideal_oracle(const GroundTruth& truth, const KMeansConfig& cfg) {
  const int K = truth.labels.K;
  validate_labels(truth.labels);
  check_inputs(truth.signal, K, 1);
  if (truth.signal.rows() < K) {
    throw Error(ErrorCode::kDegenerateCenters, "signal has fewer features than clusters");
  }
  const SvdFactors svd = thin_svd(truth.signal, K);
  if (!(svd.singulars(K - 1) > kRankTolerance * svd.singulars(0))) {
    throw Error(ErrorCode::kDegenerateCenters, "signal matrix has rank < K");
  }
  const RowNormalized normalized = row_normalize(svd.right);
  KMeansResult km = kmeans(normalized.rows, K, cfg);
  return LabelEstimate{std::move(km.labels), Method::kIdealOracle, km.objective};
}

LabelEstimate run_method(Method method, const Matrix& x, int K, const KMeansConfig& cfg) {
  switch (method) {
    case Method::kIhSC: {
      IhscOptions options;
      options.retain_gram = false;
      return ihsc(x, K, cfg, options).estimate;
    }
    case Method::kPSC: return psc(x, K, cfg);
    case Method::kKMeansRaw: return kmeans_raw(x, K, cfg);
    case Method::kIdealOracle: break;
  }
  throw Error(ErrorCode::kInvalidArgument, "the ideal oracle needs ground truth, not data");
}

}  // namespace ihgmm
