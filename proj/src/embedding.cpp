#include "minemb/embedding.hpp"

#include <cmath>
#include <stdexcept>

#include "minemb/closed_forms.hpp"
#include "minemb/rng.hpp"

namespace minemb {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}

Eigen::VectorXd gaussian_vector(Rng& rng, int dim) {
  Eigen::VectorXd v(dim);
  for (int i = 0; i < dim; ++i) v[i] = rng.gaussian();
  return v;
}

// Gaussian point scaled to the sphere of the given radius.
Eigen::VectorXd sphere_point(Rng& rng, int dim, double radius) {
  for (;;) {
    Eigen::VectorXd v = gaussian_vector(rng, dim);
    const double n = v.norm();
    if (n > 1e-6) return radius / n * v;
  }
}

std::vector<double> to_std(const Eigen::VectorXd& v) {
  return {v.data(), v.data() + v.size()};
}

Eigen::VectorXd to_eigen(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(),
                                           static_cast<long>(v.size()));
}

// Appends `count` unit vectors orthogonal to `established` and to each other.
std::vector<Eigen::VectorXd> complete_orthonormal(
    Rng& rng, int dim, const std::vector<Eigen::VectorXd>& established,
    int count) {
  std::vector<Eigen::VectorXd> out;
  int guard = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++guard > 100 * (count + 1))
      throw std::runtime_error("orthonormal completion stalled");
    Eigen::VectorXd cand = gaussian_vector(rng, dim);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : established) cand -= b.dot(cand) * b;
      for (const auto& b : out) cand -= b.dot(cand) * b;
    }
    const double n = cand.norm();
    if (n < 1e-6) continue;
    out.push_back(cand / n);
  }
  return out;
}

// iota evaluation, generic over the scalar so the same recursion produces
// values (S = double) and curve jets (S = Jet2). The whole level-j vector is
// scaled by 1/sqrt(j+1), new blocks included.
template <class S>
std::vector<S> iota_eval(Field f, int n, bool opposite,
                         const std::vector<S>& coords) {
  const int d = real_dim(f);
  HVec<S> v = unflatten(f, coords);
  if (static_cast<int>(v.size()) != n + 1)
    throw std::domain_error("iota input must have n+1 field entries");
  auto mulc = [opposite](const AlgebraElem<S>& x, const AlgebraElem<S>& y) {
    return opposite ? mul(y, x) : mul(x, y);
  };

  std::vector<S> out;
  out.reserve(ProjectiveSpec::ladder_closed_form(f, n) + 1);
  const AlgebraElem<S> lead = mulc(conj(v.e[1]), v.e[0]);
  for (int t = 0; t < d; ++t) out.push_back(2.0 * lead.c[t]);
  out.push_back(norm2(v.e[0]) - norm2(v.e[1]));
  S sumsq = norm2(v.e[0]) + norm2(v.e[1]);

  for (int j = 2; j <= n; ++j) {
    const LevelConstants lc = level_constants(j);
    const double inv = 1.0 / std::sqrt(j + 1.0);
    std::vector<S> next;
    next.reserve(out.size() + j * d + 1);
    for (const S& c : out) next.push_back(inv * c);
    const AlgebraElem<S> cj = conj(v.e[j]);
    for (int i = 0; i < j; ++i) {
      const AlgebraElem<S> w = mulc(cj, v.e[i]);
      for (int t = 0; t < d; ++t) next.push_back((lc.a * inv) * w.c[t]);
    }
    next.push_back((lc.b * inv) * (sumsq - double(j) * norm2(v.e[j])));
    sumsq = sumsq + norm2(v.e[j]);
    out = std::move(next);
  }
  return out;
}

// Jet coordinates of the great circle through p with initial velocity x on
// the sphere of the given radius, built from the trigonometric jets.
JetVector circle_jets(const Eigen::VectorXd& p, const Eigen::VectorXd& x,
                      double radius) {
  const double speed = x.norm();
  JetVector out(p.size());
  if (speed == 0.0) {
    for (long i = 0; i < p.size(); ++i) out[i] = Jet2(p[i]);
    return out;
  }
  const double omega = speed / radius;
  const Jet2 theta(0.0, omega, 0.0);
  const Jet2 c = cos(theta), s = sin(theta);
  for (long i = 0; i < p.size(); ++i) out[i] = p[i] * c + (x[i] / omega) * s;
  return out;
}

void require_on_sphere(const Eigen::VectorXd& p, double radius,
                       const char* msg) {
  if (std::abs(p.norm() - radius) > 1e-6 * radius) throw std::domain_error(msg);
}

void require_tangent(const Eigen::VectorXd& p, const Eigen::VectorXd& x,
                     const char* msg) {
  if (std::abs(p.dot(x)) > 1e-6 * p.norm() * (x.norm() + 1e-300))
    throw std::domain_error(msg);
}

}  // namespace

// --- specs -------------------------------------------------------------------

ProductSphereSpec::ProductSphereSpec(int n_, int k_, double r1_) {
  require(n_ >= 3, "product needs n >= 3");
  require(k_ >= 1 && k_ <= n_ - 1, "product needs 1 <= k <= n-1");
  require(r1_ > 0.0 && r1_ < 1.0, "product needs r1 in (0,1)");
  n = n_;
  k = k_;
  r1 = r1_;
  r2 = std::sqrt(1.0 - r1_ * r1_);
  minimal_radius = std::abs(r1_ - std::sqrt(double(k_) / n_)) < 1e-12;
}

ProductSphereSpec ProductSphereSpec::minimal(int n, int k) {
  ProductSphereSpec s(n, k, std::sqrt(double(k) / n));
  s.minimal_radius = true;
  return s;
}

ProjectiveSpec::ProjectiveSpec(Field f, int n_) : field(f), n(n_) {
  require(n_ >= 1, "projective space needs n >= 1");
}

double ProjectiveSpec::radius() const { return domain_radius(n); }

long long ProjectiveSpec::ladder_closed_form(Field f, int n) {
  switch (f) {
    case Field::R:
      return (long long)n * (n + 3) / 2 - 1;
    case Field::C:
      return (long long)(n + 1) * (n + 1) - 2;
    case Field::H:
      return (long long)(n + 1) * (2 * n + 1) - 2;
  }
  throw std::logic_error("unreachable");
}

long long ProjectiveSpec::ladder_recursive(Field f, int n) {
  long long l = real_dim(f);
  for (int j = 2; j <= n; ++j) l += (long long)j * real_dim(f) + 1;
  return l;
}

LevelConstants level_constants(int j) {
  require(j >= 2, "recursion level starts at 2");
  // r_{j-1}^4 = (j/2)^2 (j-2)!
  const double r4 = 0.25 * j * j * std::tgamma(double(j - 1));
  LevelConstants lc;
  lc.b = 1.0 / std::sqrt((double(j) * j - 1.0) * r4);
  lc.a = lc.b * std::sqrt(2.0 * j * (j + 1.0));
  return lc;
}

// --- product embedding --------------------------------------------------------

Eigen::VectorXd ProductSphereEmbedding::value(const Eigen::VectorXd& p) const {
  require(p.size() == domain_coords(), "wrong coordinate count");
  require_on_sphere(p.head(spec_.k + 1), spec_.r1,
                    "first factor radius violated");
  require_on_sphere(p.tail(spec_.n - spec_.k + 1), spec_.r2,
                    "second factor radius violated");
  return p;
}

CurveJet ProductSphereEmbedding::jet_along(const Eigen::VectorXd& p,
                                           const Eigen::VectorXd& x) const {
  require(p.size() == domain_coords() && x.size() == domain_coords(),
          "wrong coordinate count");
  const int d1 = spec_.k + 1, d2 = spec_.n - spec_.k + 1;
  require_on_sphere(p.head(d1), spec_.r1, "first factor radius violated");
  require_on_sphere(p.tail(d2), spec_.r2, "second factor radius violated");
  require_tangent(p.head(d1), x.head(d1), "direction not tangent (factor 1)");
  require_tangent(p.tail(d2), x.tail(d2), "direction not tangent (factor 2)");
  // Product geodesic: each factor runs along its own great circle.
  JetVector j1 = circle_jets(p.head(d1), x.head(d1), spec_.r1);
  JetVector j2 = circle_jets(p.tail(d2), x.tail(d2), spec_.r2);
  j1.insert(j1.end(), j2.begin(), j2.end());
  CurveJet out;
  out.value.resize(p.size());
  out.d1.resize(p.size());
  out.d2.resize(p.size());
  for (long i = 0; i < p.size(); ++i) {
    out.value[i] = j1[i].value();
    out.d1[i] = j1[i].d1();
    out.d2[i] = j1[i].d2();
  }
  return out;
}

FramePoint ProductSphereEmbedding::sample_frame(std::uint64_t seed) const {
  Rng rng(seed);
  const int d1 = spec_.k + 1, d2 = spec_.n - spec_.k + 1;
  const Eigen::VectorXd p1 = sphere_point(rng, d1, spec_.r1);
  const Eigen::VectorXd p2 = sphere_point(rng, d2, spec_.r2);
  FramePoint fp;
  fp.base.resize(domain_coords());
  fp.base.head(d1) = p1;
  fp.base.tail(d2) = p2;
  const auto f1 =
      complete_orthonormal(rng, d1, {p1 / spec_.r1}, spec_.k);
  const auto f2 =
      complete_orthonormal(rng, d2, {p2 / spec_.r2}, spec_.n - spec_.k);
  for (const auto& v : f1) {
    Eigen::VectorXd w = Eigen::VectorXd::Zero(domain_coords());
    w.head(d1) = v;
    fp.horizontal.push_back(w);
  }
  for (const auto& v : f2) {
    Eigen::VectorXd w = Eigen::VectorXd::Zero(domain_coords());
    w.tail(d2) = v;
    fp.horizontal.push_back(w);
  }
  return fp;
}

// --- projective embedding ------------------------------------------------------

Eigen::VectorXd ProjectiveEmbedding::value(const Eigen::VectorXd& p) const {
  require(p.size() == domain_coords(), "wrong coordinate count");
  return to_eigen(iota_eval<double>(spec_.field, spec_.n, opposite_, to_std(p)));
}

CurveJet ProjectiveEmbedding::jet_along(const Eigen::VectorXd& p,
                                        const Eigen::VectorXd& x) const {
  require(p.size() == domain_coords() && x.size() == domain_coords(),
          "wrong coordinate count");
  const double rn = spec_.radius();
  require_on_sphere(p, rn, "base point off the domain sphere");
  require_tangent(p, x, "direction not tangent to the domain sphere");
  const JetVector curve = circle_jets(p, x, rn);
  const JetVector image = iota_eval<Jet2>(spec_.field, spec_.n, opposite_, curve);
  CurveJet out;
  const long a = static_cast<long>(image.size());
  out.value.resize(a);
  out.d1.resize(a);
  out.d2.resize(a);
  for (long i = 0; i < a; ++i) {
    out.value[i] = image[i].value();
    out.d1[i] = image[i].d1();
    out.d2[i] = image[i].d2();
  }
  return out;
}

Eigen::VectorXd ProjectiveEmbedding::unit_mul(int t,
                                              const Eigen::VectorXd& v) const {
  require(t >= 1 && t < real_dim(spec_.field), "imaginary unit out of range");
  HVector h = unflatten(spec_.field, to_std(v));
  AlgebraElement unit = AlgebraElement::zero(spec_.field);
  unit.c[t] = 1.0;
  for (auto& entry : h.e)
    entry = opposite_ ? mul(entry, unit) : mul(unit, entry);
  return to_eigen(flatten(h));
}

FramePoint ProjectiveEmbedding::frame_at(const Eigen::VectorXd& base,
                                         std::uint64_t seed) const {
  require(base.size() == domain_coords(), "wrong coordinate count");
  const double rn = spec_.radius();
  require_on_sphere(base, rn, "base point off the domain sphere");
  Rng rng(seed);
  FramePoint fp;
  fp.base = base;
  std::vector<Eigen::VectorXd> established = {base / rn};
  for (int t = 1; t < real_dim(spec_.field); ++t) {
    fp.fiber.push_back(unit_mul(t, base) / rn);
    established.push_back(fp.fiber.back());
  }
  fp.horizontal = complete_orthonormal(rng, domain_coords(), established,
                                       spec_.nprime());
  return fp;
}

FramePoint ProjectiveEmbedding::sample_frame(std::uint64_t seed) const {
  Rng rng(seed);
  const Eigen::VectorXd base =
      sphere_point(rng, domain_coords(), spec_.radius());
  return frame_at(base, derive_seed(seed, 1));
}

FramePoint ProjectiveEmbedding::adapted_frame(std::uint64_t seed) const {
  const int d = real_dim(spec_.field);
  if (d == 1) return sample_frame(seed);
  Rng rng(seed);
  const double rn = spec_.radius();
  const Eigen::VectorXd base = sphere_point(rng, domain_coords(), rn);
  FramePoint fp;
  fp.base = base;
  std::vector<Eigen::VectorXd> established = {base / rn};
  for (int t = 1; t < d; ++t) {
    fp.fiber.push_back(unit_mul(t, base) / rn);
    established.push_back(fp.fiber.back());
  }
  // Leading vector e, then its images under the imaginary units; these are
  // horizontal and orthonormal by the algebra, not by re-orthogonalization.
  const Eigen::VectorXd e =
      complete_orthonormal(rng, domain_coords(), established, 1)[0];
  fp.horizontal.push_back(e);
  for (int t = 1; t < d; ++t) fp.horizontal.push_back(unit_mul(t, e));
  for (const auto& v : fp.horizontal) established.push_back(v);
  const auto rest = complete_orthonormal(rng, domain_coords(), established,
                                         spec_.nprime() - d);
  fp.horizontal.insert(fp.horizontal.end(), rest.begin(), rest.end());
  return fp;
}

// --- coordinate inclusion -------------------------------------------------------

std::vector<int> inclusion_indices(Field from, Field to, int n) {
  require(real_dim(from) < real_dim(to),
          "inclusion needs a strictly larger target field");
  require(n >= 1, "inclusion needs n >= 1");
  const int df = real_dim(from), dt = real_dim(to);
  std::vector<int> idx;
  idx.reserve(ProjectiveSpec::ladder_closed_form(from, n) + 1);
  for (int t = 0; t < df; ++t) idx.push_back(t);
  idx.push_back(dt);
  long long lf = df, lt = dt;
  for (int j = 2; j <= n; ++j) {
    const long long baset = lt + 1;
    for (int i = 0; i < j; ++i)
      for (int t = 0; t < df; ++t)
        idx.push_back(static_cast<int>(baset + i * dt + t));
    lf += (long long)j * df + 1;
    lt += (long long)j * dt + 1;
    idx.push_back(static_cast<int>(lt));
  }
  return idx;
}

std::vector<Eigen::VectorXd> gram_schmidt(
    const std::vector<Eigen::VectorXd>& established,
    const std::vector<Eigen::VectorXd>& seeds, double drop_tol) {
  std::vector<Eigen::VectorXd> out;
  for (Eigen::VectorXd cand : seeds) {
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : established) cand -= b.dot(cand) * b;
      for (const auto& b : out) cand -= b.dot(cand) * b;
    }
    const double n = cand.norm();
    if (n < drop_tol)
      throw std::domain_error("gram_schmidt: dependent seed vector");
    out.push_back(cand / n);
  }
  return out;
}

}  // namespace minemb
