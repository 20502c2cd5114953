#include <numbers>
#include <vector>

#include "doctest.h"
#include "mqed/fixtures.hpp"
#include "mqed/media.hpp"

using namespace mqed;

namespace {

std::vector<cplx> upper_half_plane_grid() {
  std::vector<cplx> g;
  for (int i = 0; i < 40; ++i) {
    const double re = 0.05 + 0.1 * i;
    g.emplace_back(re, 0.0);
    g.emplace_back(re, 0.3);
    g.emplace_back(-re, 0.05);
  }
  return g;
}

Eigen::Matrix3d rotation_about_y(double a) {
  return Eigen::AngleAxisd(a, Vector3d::UnitY()).toRotationMatrix();
}

}  // namespace

TEST_CASE("Lorentz and Condon terms") {
  const LorentzTerm t{1.0, 1.0, 0.1};
  CHECK(std::abs(lorentz_response(t, 0.0) - 1.0) < 1e-15);
  CHECK(std::abs(lorentz_response(t, 1.0) - cplx(0.0, 10.0)) < 1e-12);
  CHECK(std::abs(condon_response(t, 0.0)) == 0.0);
  CHECK(std::abs(condon_response(t, 2.0) - 2.0 * lorentz_response(t, 2.0)) < 1e-15);
}

TEST_CASE("Lorentz dielectric at resonance") {
  const ResponseSet rs = evaluate(fixtures::lorentz_dielectric(), 1.0);
  CHECK((rs.eps - cplx(1.0, 10.0) * CTensor3::Identity()).norm() < 1e-12);
  CHECK((rs.mu - CTensor3::Identity()).norm() == 0.0);
  CHECK(rs.xi.norm() == 0.0);
  CHECK(rs.zeta.norm() == 0.0);
}

TEST_CASE("static limit") {
  const ResponseSet rs = evaluate(fixtures::lorentz_magnetic(), 0.0);
  CHECK((rs.mu - 1.5 * CTensor3::Identity()).norm() < 1e-15);
}

TEST_CASE("evaluate rejects the lower half-plane") {
  CHECK_THROWS_AS(evaluate(fixtures::lorentz_dielectric(), cplx(1.0, -0.1)), InvalidInput);
}

TEST_CASE("Schwarz reflection of every fixture") {
  const auto grid = upper_half_plane_grid();
  for (const auto& f : fixtures::all()) {
    CAPTURE(f.file_stem);
    CHECK(schwarz_check(f.make(), grid) <= 1e-12);
  }
}

TEST_CASE("passive fixtures have a positive semidefinite loss matrix") {
  for (const auto& f : fixtures::all()) {
    CAPTURE(f.file_stem);
    for (const double w : {0.1, 0.5, 0.9, 1.0, 1.1, 2.0, 10.0}) {
      const ResponseSet rs = evaluate(f.make(), w);
      CMatrix w6(6, 6);
      w6 << rs.eps, rs.xi, rs.zeta, rs.mu;
      CHECK(is_psd_relative(antihermitian_part(w6)).psd);
    }
  }
}

TEST_CASE("classification of the fixtures") {
  auto cls = [](MediumModel m) { return classify(evaluate(m, 0.7)); };
  CHECK(cls(fixtures::vacuum()).category == MediumCategory::vacuum);
  CHECK(cls(fixtures::vacuum()).reciprocal);
  CHECK(cls(fixtures::lorentz_dielectric()).category == MediumCategory::isotropic);
  CHECK(cls(fixtures::lorentz_magnetic()).category == MediumCategory::isotropic);
  CHECK(cls(fixtures::uniaxial_dielectric()).category == MediumCategory::anisotropic);
  CHECK(cls(fixtures::uniaxial_dielectric()).reciprocal);

  const MediumClass chiral = cls(fixtures::chiral());
  CHECK(chiral.category == MediumCategory::biisotropic);
  CHECK(chiral.reciprocal);
  CHECK_FALSE(chiral.nonreciprocal_magnetoelectric);

  const MediumClass tellegen = cls(fixtures::tellegen());
  CHECK(tellegen.category == MediumCategory::biisotropic);
  CHECK_FALSE(tellegen.reciprocal);
  CHECK(tellegen.nonreciprocal_magnetoelectric);

  const MediumClass uni = cls(fixtures::tellegen_uniaxial());
  CHECK(uni.category == MediumCategory::bianisotropic);
  CHECK_FALSE(uni.reciprocal);
}

TEST_CASE("a rotated uniaxial medium stays anisotropic and symmetric") {
  MediumModel m = fixtures::uniaxial_dielectric();
  m.rotation = rotation_about_y(0.4);
  m.validate();
  const ResponseSet rs = evaluate(m, 1.3);
  CHECK((rs.eps - rs.eps.transpose()).norm() < 1e-14);
  CHECK(std::abs(rs.eps(0, 2)) > 1e-3);
  CHECK(classify(rs).category == MediumCategory::anisotropic);
  CHECK(classify(rs).reciprocal);
}

TEST_CASE("magnetoelectric decomposition round trip") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10; ++i) {
    const ResponseSet rs = fixtures::random_passive_response(rng);
    const Magnetoelectric me = decompose_magnetoelectric(rs);
    const auto [xi, zeta] = compose_magnetoelectric(me.kappa, me.chi);
    CHECK((xi - rs.xi).norm() < 1e-14);
    CHECK((zeta - rs.zeta).norm() < 1e-14);
  }
  const ResponseSet chiral = evaluate(fixtures::chiral(), 0.9);
  CHECK(decompose_magnetoelectric(chiral).chi.norm() < 1e-15);
  const ResponseSet tellegen = evaluate(fixtures::tellegen(), 0.9);
  CHECK(decompose_magnetoelectric(tellegen).kappa.norm() < 1e-15);
}

TEST_CASE("model validation") {
  MediumModel m = fixtures::lorentz_dielectric();
  m.eps.terms[0][0][0].damping = 0.0;
  CHECK_THROWS_AS(m.validate(), InvalidModel);

  m = fixtures::lorentz_dielectric();
  m.eps.terms[1][1][0].resonance = -1.0;
  CHECK_THROWS_AS(m.validate(), InvalidModel);

  m = fixtures::lorentz_dielectric();
  m.rotation(0, 0) = 2.0;
  CHECK_THROWS_AS(m.validate(), InvalidModel);

  for (const auto& f : fixtures::all()) CHECK_NOTHROW(f.make().validate());
}

TEST_CASE("resonance range") {
  CHECK(fixtures::vacuum().lowest_resonance() == 1.0);
  CHECK(fixtures::uniaxial_dielectric().lowest_resonance() == 1.0);
  CHECK(fixtures::uniaxial_dielectric().highest_resonance() == 1.5);
}
