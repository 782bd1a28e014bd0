#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "minemb/algebra.hpp"
#include "minemb/jet.hpp"

namespace minemb {

// Parameters of the product hypersurface S^k(r1) x S^{n-k}(r2) in S^{n+1},
// with r1^2 + r2^2 = 1.
struct ProductSphereSpec {
  int n = 0;
  int k = 0;
  double r1 = 0.0;
  double r2 = 0.0;
  bool minimal_radius = false;

  ProductSphereSpec(int n, int k, double r1);
  // The balanced radius r1 = sqrt(k/n) that makes the hypersurface minimal.
  static ProductSphereSpec minimal(int n, int k);
};

// Parameters of the projective-space embedding tower over F in {R, C, H}.
struct ProjectiveSpec {
  Field field = Field::R;
  int n = 0;

  ProjectiveSpec(Field field, int n);

  // Real dimension of the embedded manifold FP^n.
  int nprime() const { return n * real_dim(field); }
  // Real coordinates of the domain F^{n+1}.
  int domain_coords() const { return (n + 1) * real_dim(field); }
  // Radius r_n of the domain sphere, with r_n^4 = ((n+1)/2)^2 (n-1)!.
  double radius() const;
  // Image lies in R^{L+1} on a unit sphere S^L; this is L.
  long long ambient_l() const { return ladder_closed_form(field, n); }

  static long long ladder_closed_form(Field f, int n);
  static long long ladder_recursive(Field f, int n);
};

// Coefficients (a_j, b_j) of the level-j recursion step.
struct LevelConstants {
  double a = 0.0;
  double b = 0.0;
};

LevelConstants level_constants(int j);

// A base point together with an orthonormal tangent frame split into the
// horizontal part (projecting to the embedded manifold) and the fiber part
// (directions collapsed by the quotient; empty when there is no fiber).
struct FramePoint {
  Eigen::VectorXd base;
  std::vector<Eigen::VectorXd> horizontal;
  std::vector<Eigen::VectorXd> fiber;
};

// Second-order data of t -> f(gamma(t)) at t = 0.
struct CurveJet {
  Eigen::VectorXd value;
  Eigen::VectorXd d1;
  Eigen::VectorXd d2;
};

// A sphere-valued map presented through curve jets, which is all the
// extrinsic measurement pipeline needs.
class Embedding {
 public:
  virtual ~Embedding() = default;

  virtual int domain_coords() const = 0;
  virtual int image_coords() const = 0;
  // Dimension of the manifold the horizontal frame spans.
  virtual int manifold_dim() const = 0;

  virtual Eigen::VectorXd value(const Eigen::VectorXd& p) const = 0;
  // Jets of f along the distinguished curve through p with velocity x.
  virtual CurveJet jet_along(const Eigen::VectorXd& p,
                             const Eigen::VectorXd& x) const = 0;
  virtual FramePoint sample_frame(std::uint64_t seed) const = 0;
};

// The product hypersurface included as-is in the unit sphere S^{n+1}.
class ProductSphereEmbedding : public Embedding {
 public:
  explicit ProductSphereEmbedding(const ProductSphereSpec& spec)
      : spec_(spec) {}

  int domain_coords() const override { return spec_.n + 2; }
  int image_coords() const override { return spec_.n + 2; }
  int manifold_dim() const override { return spec_.n; }

  Eigen::VectorXd value(const Eigen::VectorXd& p) const override;
  CurveJet jet_along(const Eigen::VectorXd& p,
                     const Eigen::VectorXd& x) const override;
  FramePoint sample_frame(std::uint64_t seed) const override;

  const ProductSphereSpec& spec() const { return spec_; }

 private:
  ProductSphereSpec spec_;
};

// The homogeneous-quadratic map from the sphere of radius r_n in F^{n+1}
// onto a minimally embedded FP^n in the unit sphere S^L. Built by the level
// recursion; the optional flag evaluates every algebra product in the
// opposite algebra (handedness flip) for convention-independence checks.
class ProjectiveEmbedding : public Embedding {
 public:
  explicit ProjectiveEmbedding(const ProjectiveSpec& spec,
                               bool opposite_mul = false)
      : spec_(spec), opposite_(opposite_mul) {}

  int domain_coords() const override { return spec_.domain_coords(); }
  int image_coords() const override {
    return static_cast<int>(spec_.ambient_l()) + 1;
  }
  int manifold_dim() const override { return spec_.nprime(); }

  // Defined on all of F^{n+1}; the norm identity pins the off-sphere values.
  Eigen::VectorXd value(const Eigen::VectorXd& p) const override;
  // Jets along the great circle of the domain sphere through p towards x.
  CurveJet jet_along(const Eigen::VectorXd& p,
                     const Eigen::VectorXd& x) const override;
  FramePoint sample_frame(std::uint64_t seed) const override;

  // Frame at a caller-chosen base point on the domain sphere.
  FramePoint frame_at(const Eigen::VectorXd& base, std::uint64_t seed) const;
  // Frame whose leading block is (e, i e, j e, k e) truncated to the field,
  // followed by a generic completion; index real_dim(field) then holds a
  // totally real partner of e.
  FramePoint adapted_frame(std::uint64_t seed) const;

  // Entrywise action of the t-th imaginary unit under this embedding's
  // multiplication convention (t in 1..real_dim-1).
  Eigen::VectorXd unit_mul(int t, const Eigen::VectorXd& v) const;

  const ProjectiveSpec& spec() const { return spec_; }
  bool opposite_convention() const { return opposite_; }

 private:
  ProjectiveSpec spec_;
  bool opposite_ = false;
};

// Coordinate positions realizing the isometric inclusion of the level-n
// tower over `from` into the tower over `to`: coordinate i of the smaller
// image appears at position result[i] of the larger one.
std::vector<int> inclusion_indices(Field from, Field to, int n);

// Orthonormalizes `seeds` against `established` (assumed orthonormal) and
// against each other; throws if a seed is dependent beyond drop_tol.
std::vector<Eigen::VectorXd> gram_schmidt(
    const std::vector<Eigen::VectorXd>& established,
    const std::vector<Eigen::VectorXd>& seeds, double drop_tol = 1e-8);

}  // namespace minemb
