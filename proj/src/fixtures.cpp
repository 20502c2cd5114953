#include "mqed/fixtures.hpp"

namespace mqed::fixtures {

namespace {

MediumModel named(std::string name) {
  MediumModel m;
  m.name = std::move(name);
  return m;
}

}  // namespace

MediumModel vacuum() { return named("vacuum"); }

MediumModel lorentz_dielectric() {
  MediumModel m = named("lorentz");
  m.eps = TensorDispersion::isotropic({{1.0, 1.0, 0.1}});
  return m;
}

MediumModel lorentz_magnetic() {
  MediumModel m = named("magnetic");
  m.mu = TensorDispersion::isotropic({{0.5, 1.0, 0.1}});
  return m;
}

MediumModel uniaxial_dielectric() {
  MediumModel m = named("uniaxial");
  m.eps = TensorDispersion::diagonal({{1.0, 1.0, 0.1}}, {{1.0, 1.0, 0.1}}, {{2.0, 1.5, 0.1}});
  return m;
}

MediumModel chiral() {
  MediumModel m = named("chiral");
  m.eps = TensorDispersion::isotropic({{1.0, 1.0, 0.2}});
  m.mu = TensorDispersion::isotropic({{0.5, 1.0, 0.2}});
  m.kappa = TensorDispersion::isotropic({{0.02, 1.0, 0.2}});
  return m;
}

MediumModel tellegen() {
  MediumModel m = named("tellegen");
  m.eps = TensorDispersion::isotropic({{1.0, 1.0, 0.2}});
  m.mu = TensorDispersion::isotropic({{0.5, 1.0, 0.2}});
  m.chi = TensorDispersion::isotropic({{0.3, 1.0, 0.2}});
  return m;
}

MediumModel tellegen_uniaxial() {
  MediumModel m = tellegen();
  m.name = "tellegen_uniaxial";
  m.chi = TensorDispersion::diagonal({{0.3, 1.0, 0.2}}, {{0.3, 1.0, 0.2}}, {});
  return m;
}

const std::vector<Named>& all() {
  static const std::vector<Named> list = {
      {"vacuum", &vacuum},
      {"lorentz", &lorentz_dielectric},
      {"magnetic", &lorentz_magnetic},
      {"uniaxial", &uniaxial_dielectric},
      {"chiral", &chiral},
      {"tellegen", &tellegen},
      {"tellegen_uniaxial", &tellegen_uniaxial},
  };
  return list;
}

ResponseSet random_passive_response(std::mt19937_64& rng, bool real_frequency) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> uniform(0.2, 3.0);
  auto random_complex = [&](int n) {
    CMatrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = cplx(normal(rng), normal(rng));
    return a;
  };
  const CMatrix hermitian = 0.3 * hermitian_part(random_complex(6));
  const CMatrix b = random_complex(6);
  const CMatrix loss = 0.2 * b * b.adjoint() / 6.0 + 0.05 * CMatrix::Identity(6, 6);
  const CMatrix w = hermitian + cplx(0.0, 1.0) * loss + 1.5 * CMatrix::Identity(6, 6);

  ResponseSet rs;
  rs.eps = w.topLeftCorner<3, 3>();
  rs.xi = w.topRightCorner<3, 3>();
  rs.zeta = w.bottomLeftCorner<3, 3>();
  rs.mu = w.bottomRightCorner<3, 3>();
  rs.omega = real_frequency ? cplx(uniform(rng), 0.0) : cplx(uniform(rng), 0.5 * uniform(rng));
  return rs;
}

Vector3d random_wavevector(std::mt19937_64& rng, double min_norm, double max_norm) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> length(min_norm, max_norm);
  Vector3d dir(normal(rng), normal(rng), normal(rng));
  return length(rng) * dir.normalized();
}

}  // namespace mqed::fixtures
