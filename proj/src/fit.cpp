#include "apsheat/fit.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <cmath>

namespace apsheat {

AsymptoticFit fit_asymptotics(const HeatContentCurve& curve, int n_max, double w_lo, double w_hi,
                              const std::vector<double>* weights) {
  if (n_max < 0) throw DimensionMismatch("negative expansion order");
  std::vector<size_t> idx;
  for (size_t i = 0; i < curve.t.size(); ++i)
    if (curve.t[i] > 0 && curve.t[i] >= w_lo * (1 - 1e-12) && curve.t[i] <= w_hi * (1 + 1e-12))
      idx.push_back(i);
  const int rows = static_cast<int>(idx.size());
  const int cols = n_max + 1;
  if (rows < 12) throw DimensionMismatch("need at least 12 samples inside the fit window");
  if (weights != nullptr && static_cast<int>(weights->size()) != rows)
    throw DimensionMismatch("weight vector length mismatch");

  Eigen::MatrixXd design(rows, cols);
  Vec y(rows);
  for (int i = 0; i < rows; ++i) {
    const double t = curve.t[idx[i]];
    const double w = weights ? (*weights)[i] : 1.0;
    for (int j = 0; j < cols; ++j) design(i, j) = w * std::pow(t, 0.5 * j);
    y(i) = w * curve.beta[idx[i]];
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(design);
  const double cond = svd.singularValues()(0) / svd.singularValues()(cols - 1);
  if (!(cond < 1e12)) throw IllConditioned("fit design condition number " + std::to_string(cond));

  // Column equilibration improves the QR solve without changing the model.
  Eigen::VectorXd scale(cols);
  for (int j = 0; j < cols; ++j) scale(j) = 1.0 / design.col(j).norm();
  const Mat eq = (design * scale.asDiagonal()).cast<cx>();
  Vec sol = Eigen::ColPivHouseholderQR<Mat>(eq).solve(y);

  AsymptoticFit fit;
  fit.points = rows;
  fit.condition = cond;
  fit.b.resize(cols);
  for (int j = 0; j < cols; ++j) fit.b[j] = sol(j) * scale(j);
  Vec model = Vec::Zero(rows);
  for (int j = 0; j < cols; ++j) model += fit.b[j] * design.col(j).cast<cx>() ;
  fit.residual = (y - model).norm();
  return fit;
}

}  // namespace apsheat
