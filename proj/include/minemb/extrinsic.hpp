#pragma once

#include <Eigen/Dense>
#include <vector>

#include "minemb/embedding.hpp"

namespace minemb {

// Second-order extrinsic data of an embedded submanifold of the unit round
// sphere, measured at one FramePoint. All curvature entries refer to the
// gram-orthonormalized frame, i.e. to the induced metric on the image.
struct ExtrinsicReport {
  int m = 0;                 // frame size = manifold dimension
  Eigen::MatrixXd gram;      // <df(e_i), df(e_j)>
  double conformal_factor = 0.0;  // trace(gram)/m
  double conformal_defect = 0.0;  // max_ij |gram_ij - c * delta_ij|
  // Second fundamental form relative to the ambient unit sphere, in the
  // gram-orthonormalized frame; alpha[a][b] is an ambient vector, symmetric.
  std::vector<std::vector<Eigen::VectorXd>> alpha;
  Eigen::VectorXd mean_curvature;  // H = sum_a alpha[a][a]
  double h2 = 0.0;                 // |H|^2
  double a2 = 0.0;                 // sum_ab |alpha[a][b]|^2
  Eigen::MatrixXd sectional;       // K(a,b); diagonal entries are zero
  double s_sum = 0.0;              // sum_{a != b} K(a,b)
  double s_gauss = 0.0;            // m(m-1) + h2 - a2
  double base_defect = 0.0;        // | |f(p)| - 1 |
  // Largest projection of any alpha[a][b] onto the radial direction or the
  // pushed-forward tangent space; should vanish for a correct projector.
  double normal_defect = 0.0;
};

// Measures metric, second fundamental form, mean curvature, sectional and
// scalar curvature at fp. Throws std::domain_error on invalid frames and
// std::runtime_error when the pushed-forward frame is degenerate.
ExtrinsicReport measure(const Embedding& embedding, const FramePoint& fp);

// Ricci curvature of the i-th frame direction: sum_{j != i} K(i,j).
double ricci_direction(const ExtrinsicReport& report, int i);

}  // namespace minemb
