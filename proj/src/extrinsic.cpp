#include "minemb/extrinsic.hpp"

#include <cmath>
#include <stdexcept>

namespace minemb {

namespace {

// Orthonormal basis of the span of the given vectors (two-pass
// Gram-Schmidt); vectors below the drop tolerance are rejected because the
// callers below always pass sets expected to be independent.
std::vector<Eigen::VectorXd> orthonormal_span(
    const std::vector<Eigen::VectorXd>& vecs, double drop_tol) {
  std::vector<Eigen::VectorXd> basis;
  for (Eigen::VectorXd v : vecs) {
    const double scale = v.norm();
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) v -= b.dot(v) * b;
    if (v.norm() < drop_tol * (scale > 0.0 ? scale : 1.0))
      throw std::runtime_error("degenerate frame: dependent pushed-forward directions");
    basis.push_back(v / v.norm());
  }
  return basis;
}

}  // namespace

ExtrinsicReport measure(const Embedding& embedding, const FramePoint& fp) {
  const int m = static_cast<int>(fp.horizontal.size());
  if (m <= 0) throw std::domain_error("measure needs a nonempty frame");

  ExtrinsicReport rep;
  rep.m = m;

  const Eigen::VectorXd q = embedding.value(fp.base);
  rep.base_defect = std::abs(q.norm() - 1.0);

  // First and second jets along the frame directions.
  std::vector<Eigen::VectorXd> d1(m), d2(m);
  for (int i = 0; i < m; ++i) {
    const CurveJet j = embedding.jet_along(fp.base, fp.horizontal[i]);
    d1[i] = j.d1;
    d2[i] = j.d2;
  }

  rep.gram.resize(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) rep.gram(i, j) = d1[i].dot(d1[j]);
  rep.conformal_factor = rep.gram.trace() / m;
  rep.conformal_defect = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const double target = i == j ? rep.conformal_factor : 0.0;
      rep.conformal_defect =
          std::max(rep.conformal_defect, std::abs(rep.gram(i, j) - target));
    }

  // Orthonormal basis of (radial direction + pushed-forward tangent space);
  // projecting a second derivative off this span removes both the ambient
  // sphere's own shape term and the tangential acceleration.
  std::vector<Eigen::VectorXd> span_vecs;
  span_vecs.reserve(m + 1);
  span_vecs.push_back(q);
  for (int i = 0; i < m; ++i) span_vecs.push_back(d1[i]);
  const std::vector<Eigen::VectorXd> tangent_radial =
      orthonormal_span(span_vecs, 1e-9);
  auto project_normal = [&](Eigen::VectorXd w) {
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : tangent_radial) w -= b.dot(w) * b;
    return w;
  };

  // Raw second fundamental form on the sampled frame. Diagonal entries come
  // straight from the direction's own curve; off-diagonal entries from the
  // polarization identity along the diagonal direction e_i + e_j, rescaled
  // by its squared length because alpha is bilinear.
  std::vector<std::vector<Eigen::VectorXd>> raw(
      m, std::vector<Eigen::VectorXd>(m));
  for (int i = 0; i < m; ++i) raw[i][i] = project_normal(d2[i]);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const Eigen::VectorXd u = fp.horizontal[i] + fp.horizontal[j];
      const double s2 = u.squaredNorm();
      const CurveJet cj = embedding.jet_along(fp.base, u / u.norm());
      const Eigen::VectorXd auu = project_normal(cj.d2);
      raw[i][j] = 0.5 * (s2 * auu - raw[i][i] - raw[j][j]);
      raw[j][i] = raw[i][j];
    }

  // Gram-orthonormalization: alpha in the frame A = gram^{-1/2}, so all
  // reported curvatures describe the induced metric on the image.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(rep.gram);
  if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= 1e-12)
    throw std::runtime_error("degenerate frame: gram matrix not positive definite");
  const Eigen::MatrixXd A = es.operatorInverseSqrt();

  rep.alpha.assign(m, std::vector<Eigen::VectorXd>(m));
  const long ambient = q.size();
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      Eigen::VectorXd acc = Eigen::VectorXd::Zero(ambient);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) acc += A(i, a) * A(j, b) * raw[i][j];
      rep.alpha[a][b] = acc;
      rep.alpha[b][a] = acc;
    }

  rep.mean_curvature = Eigen::VectorXd::Zero(ambient);
  for (int a = 0; a < m; ++a) rep.mean_curvature += rep.alpha[a][a];
  rep.h2 = rep.mean_curvature.squaredNorm();
  rep.a2 = 0.0;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) rep.a2 += rep.alpha[a][b].squaredNorm();

  // Sectional curvatures from the Gauss equation against the unit ambient
  // sphere (curvature one).
  rep.sectional = Eigen::MatrixXd::Zero(m, m);
  rep.s_sum = 0.0;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      const double k = 1.0 + rep.alpha[a][a].dot(rep.alpha[b][b]) -
                       rep.alpha[a][b].squaredNorm();
      rep.sectional(a, b) = k;
      rep.s_sum += k;
    }
  rep.s_gauss = double(m) * (m - 1) + rep.h2 - rep.a2;

  rep.normal_defect = 0.0;
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b)
      for (const auto& t : tangent_radial)
        rep.normal_defect =
            std::max(rep.normal_defect, std::abs(t.dot(rep.alpha[a][b])));
  return rep;
}

double ricci_direction(const ExtrinsicReport& report, int i) {
  if (i < 0 || i >= report.m)
    throw std::domain_error("ricci_direction index out of range");
  double sum = 0.0;
  for (int j = 0; j < report.m; ++j)
    if (j != i) sum += report.sectional(i, j);
  return sum;
}

}  // namespace minemb
