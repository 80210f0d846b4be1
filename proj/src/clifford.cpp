#include "apsheat/clifford.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace apsheat {

namespace {

Mat pauli(char which) {
  Mat p(2, 2);
  switch (which) {
    case 'x': p << 0, 1, 1, 0; break;
    case 'y': p << 0, cx(0, -1), cx(0, 1), 0; break;
    case 'z': p << 1, 0, 0, -1; break;
    default: p = Mat::Identity(2, 2);
  }
  return p;
}

Mat chain(int q, int slot, char op) {
  // Z on factors before `slot`, `op` at `slot`, identity after.
  Mat acc = Mat::Identity(1, 1);
  for (int j = 0; j < q; ++j) {
    char c = j < slot ? 'z' : (j == slot ? op : 'i');
    acc = Eigen::kroneckerProduct(acc, pauli(c)).eval();
  }
  return acc;
}

}  // namespace

CliffordRep build_rep(int m) {
  if (m < 1) throw DimensionMismatch("need at least one generator");
  const int q = (m + 2) / 2;  // ceil((m+1)/2)
  CliffordRep rep;
  rep.m = m;
  rep.ell = 1 << q;
  rep.Theta.reserve(m);
  const cx iu(0, 1);
  for (int i = 1; i <= m; ++i) {
    const int slot = (i - 1) / 2;
    rep.Theta.push_back(iu * chain(q, slot, i % 2 ? 'x' : 'y'));
  }
  // All-Z chain anticommutes with every generator above and squares to Id.
  rep.gamma0 = chain(q, q, 'z');
  return rep;
}

Mat dual_endo(const Mat& e) { return e.transpose(); }

double relation_defect(const CliffordRep& rep) {
  const int n = rep.ell;
  const Mat id = Mat::Identity(n, n);
  double worst = 0;
  auto note = [&](const Mat& d) { worst = std::max(worst, d.cwiseAbs().maxCoeff()); };
  for (int i = 0; i < rep.m; ++i) {
    for (int j = 0; j < rep.m; ++j) {
      Mat anti = rep.Theta[i] * rep.Theta[j] + rep.Theta[j] * rep.Theta[i];
      if (i == j) anti += 2.0 * id;
      note(anti);
    }
    note(rep.gamma0 * rep.Theta[i] + rep.Theta[i] * rep.gamma0);
  }
  note(rep.gamma0 * rep.gamma0 - id);
  return worst;
}

}  // namespace apsheat
