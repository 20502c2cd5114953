#include <numbers>
#include <random>

#include "doctest.h"
#include "mqed/duality.hpp"
#include "mqed/fixtures.hpp"
#include "mqed/fluctuations.hpp"

using namespace mqed;

namespace {

constexpr double kPi = std::numbers::pi;

FieldPair random_pair(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  auto v = [&] { return Vector3c(cplx(n(rng), n(rng)), cplx(n(rng), n(rng)), cplx(n(rng), n(rng))); };
  return {v(), v()};
}

double distance(const ResponseSet& a, const ResponseSet& b) {
  return std::sqrt((a.eps - b.eps).squaredNorm() + (a.xi - b.xi).squaredNorm() +
                   (a.zeta - b.zeta).squaredNorm() + (a.mu - b.mu).squaredNorm());
}

}  // namespace

TEST_CASE("duality rotations form a group") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> angle(-7.0, 7.0);
  for (int i = 0; i < 100; ++i) {
    const double a = angle(rng), b = angle(rng);
    CHECK((duality_matrix(a) * duality_matrix(b) - duality_matrix(a + b)).norm() <= 1e-13);
    CHECK((response_transform(a) * response_transform(b) - response_transform(a + b)).norm() <= 1e-13);
    CHECK((response_transform(a) * response_transform(-a) - Eigen::Matrix4d::Identity()).norm() <= 1e-13);
  }
  CHECK((response_transform(0.0) - Eigen::Matrix4d::Identity()).norm() == 0.0);
}

TEST_CASE("quarter turn permutes the slots") {
  std::mt19937_64 rng(32);
  const ResponseSet rs = fixtures::random_passive_response(rng);
  const ResponseSet r = rotate_responses(rs, kPi / 2);
  ResponseSet expected = rs;
  expected.eps = rs.mu;
  expected.xi = -rs.zeta;
  expected.zeta = -rs.xi;
  expected.mu = rs.eps;
  CHECK(distance(r, expected) <= 1e-14 * rs.norm());
}

TEST_CASE("response rotation is the congruence of the constitutive matrix") {
  std::mt19937_64 rng(33);
  const ResponseSet rs = fixtures::random_passive_response(rng);
  const double theta = 0.77;
  CMatrix6 w;
  w << rs.eps, rs.xi, rs.zeta, rs.mu;
  Eigen::Matrix<double, 6, 6> d;
  const Eigen::Matrix2d d2 = duality_matrix(theta);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) d.block<3, 3>(3 * i, 3 * j) = d2(i, j) * Eigen::Matrix3d::Identity();
  const CMatrix6 expected = d.cast<cplx>() * w * d.transpose().cast<cplx>();
  const ResponseSet r = rotate_responses(rs, theta);
  CMatrix6 got;
  got << r.eps, r.xi, r.zeta, r.mu;
  CHECK((got - expected).norm() <= 1e-14 * w.norm());
}

TEST_CASE("vacuum is a fixed point") {
  const ResponseSet vac = ResponseSet::vacuum(0.6);
  CHECK(distance(rotate_responses(vac, 1.234), vac) <= 1e-13);
}

TEST_CASE("joint rotation preserves the constitutive relation") {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 25; ++i) {
    const ResponseSet rs = fixtures::random_passive_response(rng);
    const FieldPair e_h = random_pair(rng);
    const FieldPair noise = random_pair(rng);
    for (const double theta : {kPi / 7, kPi / 4, kPi / 2, 2.5}) {
      CHECK(constitutive_covariance_residual(rs, e_h, noise, theta) <= 1e-12);
    }
  }
}

TEST_CASE("noise transform at zero angle is the identity") {
  std::mt19937_64 rng(35);
  const ResponseSet rs = fixtures::random_passive_response(rng);
  CHECK((noise_transform(rs, 0.0) - CMatrix6::Identity()).norm() <= 1e-13);
}

TEST_CASE("singular rotated permeability") {
  // eps = -mu makes mu' = cos^2 mu + sin^2 eps vanish at theta = pi/4
  ResponseSet rs = ResponseSet::vacuum(1.0);
  rs.eps = -CTensor3::Identity();
  CHECK_THROWS_AS(noise_transform(rs, kPi / 4), DualitySingularity);
}

TEST_CASE("vacuum Green blocks are invariant") {
  const Vector3d k(1.7, -0.4, 0.9);
  const double w = 0.8;
  const GreenBlocks b = green_blocks_k(solve_green_k(ResponseSet::vacuum(w), k, w).g, k, w);
  for (const double theta : {0.3, 1.234, kPi / 2, -2.0}) {
    const GreenBlocks r = rotate_green_blocks_vacuum(b, theta);
    const double scale = b.ee.norm();
    CHECK((r.ee - b.ee).norm() <= 1e-12 * scale);
    CHECK((r.em - b.em).norm() <= 1e-12 * scale);
    CHECK((r.me - b.me).norm() <= 1e-12 * scale);
    CHECK((r.mm - b.mm).norm() <= 1e-12 * scale);
  }
}

TEST_CASE("symmetry classes of the fixtures") {
  const std::vector<cplx> grid = {0.3, 0.9, 1.6};
  auto sym = [&](const MediumModel& m) { return symmetry_class(m, grid); };

  const SymmetryReport vac = sym(fixtures::vacuum());
  CHECK(vac.symmetry == DualitySymmetry::continuous);
  CHECK(vac.category == MediumCategory::vacuum);

  const SymmetryReport chiral = sym(fixtures::chiral());
  CHECK(chiral.symmetry == DualitySymmetry::continuous);
  CHECK(chiral.category == MediumCategory::biisotropic);
  CHECK(sym(fixtures::tellegen()).symmetry == DualitySymmetry::continuous);

  for (const MediumModel& m : {fixtures::lorentz_dielectric(), fixtures::lorentz_magnetic(),
                               fixtures::uniaxial_dielectric()}) {
    CAPTURE(m.name);
    const SymmetryReport r = sym(m);
    CHECK(r.symmetry == DualitySymmetry::discrete);
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == doctest::Approx(kPi / 4));
  }
}

TEST_CASE("rotating a reciprocal medium with eps != mu creates a Tellegen part") {
  const ResponseSet rs = evaluate(fixtures::chiral(), 0.8);
  const double theta = 0.6;
  const ResponseSet r = rotate_responses(rs, theta);
  const CTensor3 expected = std::sin(theta) * std::cos(theta) * (rs.mu - rs.eps);
  CHECK((decompose_magnetoelectric(r).chi - expected).norm() <= 1e-14 * rs.norm());
  CHECK_FALSE(classify(r).reciprocal);
  CHECK_FALSE(symmetry_class(std::span<const ResponseSet>(&rs, 1)).reciprocity_preserved_at_quarter_pi);
}
