#include <random>

#include "doctest.h"
#include "mqed/conductivity.hpp"
#include "mqed/fixtures.hpp"

using namespace mqed;

TEST_CASE("vacuum has zero conductivity") {
  const ResponseSet rs = ResponseSet::vacuum(0.8);
  CHECK(local_conductivity_k(rs, Vector3d(0.3, 0.1, -2.0)).norm() == 0.0);
}

TEST_CASE("isotropic dielectric conductivity is -i eps0 w (eps - 1) and k independent") {
  const double w = 0.8;
  const ResponseSet rs = evaluate(fixtures::lorentz_dielectric(), w);
  const CTensor3 expected = cplx(0.0, -w) * (rs.eps - CTensor3::Identity());
  for (const Vector3d& k : {Vector3d(0, 0, 0), Vector3d(1, 2, 3), Vector3d(-0.4, 0.1, 0.0)}) {
    CHECK((local_conductivity_k(rs, k) - expected).norm() < 1e-14);
  }
}

TEST_CASE("both Helmholtz assemblies agree on random passive media") {
  std::mt19937_64 rng(11);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const ResponseSet rs = fixtures::random_passive_response(rng, i % 2 == 0);
    const Vector3d k = fixtures::random_wavevector(rng);
    const CTensor3 m_bi = helmholtz_bianisotropic_k(rs, k);
    const CTensor3 m_gen = helmholtz_generic_k(local_conductivity_k(rs, k), k, rs.omega);
    worst = std::max(worst, (m_bi - m_gen).norm() / m_bi.norm());
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("flipping the right curl breaks the equivalence for magnetoelectric media") {
  std::mt19937_64 rng(12);
  const ResponseSet rs = fixtures::random_passive_response(rng);
  const Vector3d k(0.4, -0.9, 1.3);
  const CTensor3 kk = curl_k(k);
  const CTensor3 mu_inv = rs.mu.inverse();
  const cplx w = rs.omega;
  // same expression with +K on the right
  const CTensor3 wrong = cplx(0, -1) / w * kk * (mu_inv - CTensor3::Identity()) * kk +
                         kk * mu_inv * rs.zeta + rs.xi * mu_inv * kk -
                         cplx(0, 1) * w * (rs.eps - rs.xi * mu_inv * rs.zeta - CTensor3::Identity());
  const CTensor3 m_bi = helmholtz_bianisotropic_k(rs, k);
  const CTensor3 m_wrong = helmholtz_generic_k(wrong, k, w);
  CHECK((m_bi - m_wrong).norm() / m_bi.norm() > 1e-3);
}

TEST_CASE("conductivity producer built from a model") {
  const MediumModel model = fixtures::chiral();
  const ConductivityK q = ConductivityK::local(model);
  const Vector3d k(0.2, 0.5, -0.3);
  const CTensor3 direct = local_conductivity_k(evaluate(model, 1.2), k);
  CHECK((q(k, 1.2) - direct).norm() < 1e-15);
}

TEST_CASE("hydrodynamic Drude conductivity") {
  const double wp = 1.0, g = 0.1, beta = 0.4;
  const ConductivityK q = ConductivityK::hydrodynamic_drude(wp, g, beta);
  const cplx w = 0.7;
  const cplx sigma_t = cplx(0, 1) * wp * wp / (w + cplx(0, 1) * g);
  const Vector3d k(0.0, 0.0, 0.8);
  const cplx sigma_l = cplx(0, 1) * w * wp * wp / (w * w + cplx(0, 1) * g * w - beta * beta * 0.64);
  const CTensor3 s = q(k, w);
  CHECK(std::abs(s(0, 0) - sigma_t) < 1e-14);
  CHECK(std::abs(s(1, 1) - sigma_t) < 1e-14);
  CHECK(std::abs(s(2, 2) - sigma_l) < 1e-14);
  CHECK(std::abs(s(0, 2)) < 1e-15);

  CHECK((q(Vector3d::Zero(), w) - sigma_t * CTensor3::Identity()).norm() < 1e-14);

  const ConductivityK local_limit = ConductivityK::hydrodynamic_drude(wp, g, 0.0);
  CHECK((local_limit(Vector3d(0.3, -0.2, 0.9), w) - sigma_t * CTensor3::Identity()).norm() < 1e-14);

  // reflection: Q(k, -w*)* = Q(k, w) for this k-even kernel
  const cplx wc(0.9, 0.2);
  CHECK((q(k, -std::conj(wc)).conjugate() - q(k, wc)).norm() < 1e-14);
}

TEST_CASE("1-D Gaussian kernel") {
  Nonlocal1DKernel kern;
  kern.n = 32;
  CHECK_NOTHROW(kern.validate());
  const Eigen::MatrixXd gm = kern.gram();
  CHECK((gm - gm.transpose()).norm() == 0.0);
  // row sums of a well-resolved normalized Gaussian are ~1 away from the walls
  CHECK(gm.row(kern.n / 2).sum() == doctest::Approx(1.0).epsilon(1e-3));

  Nonlocal1DKernel coarse;
  coarse.n = 8;
  CHECK_THROWS_AS(coarse.validate(), ResolutionError);
  Nonlocal1DKernel narrow;
  narrow.smoothing = 0.1;
  CHECK_THROWS_AS(narrow.validate(), ResolutionError);

  Nonlocal1DKernel off;
  off.plasma_frequency = 0.0;
  CHECK(off.q_matrix(1.0).norm() == 0.0);

  const cplx w = 0.5;
  CHECK(std::abs(kern.sigma(w) - 1.0 / (0.1 - cplx(0, 1) * w)) < 1e-15);
}
