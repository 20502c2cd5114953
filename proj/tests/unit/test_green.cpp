#include <random>

#include "doctest.h"
#include "mqed/fixtures.hpp"
#include "mqed/green.hpp"

using namespace mqed;

TEST_CASE("vacuum Green tensor in closed form") {
  const GreenK g = solve_green_k(fixtures::vacuum(), Vector3d(1, 0, 0), 0.5);
  CTensor3 expected = CTensor3::Zero();
  expected.diagonal() << -4.0, 1.0 / 0.75, 1.0 / 0.75;
  CHECK((g.g - expected).norm() < 1e-13);
  CHECK(g.right_residual < 1e-14);
  CHECK(g.left_residual < 1e-14);
}

TEST_CASE("on-shell vacuum point is singular") {
  try {
    solve_green_k(fixtures::vacuum(), Vector3d(0, 1, 0), 1.0);
    FAIL("expected SingularityError");
  } catch (const SingularityError& e) {
    CHECK(e.k().isApprox(Vector3d(0, 1, 0)));
    CHECK(e.omega() == cplx(1.0, 0.0));
  }
}

TEST_CASE("Green tensor of lossy media solves both sides") {
  for (const auto& f : fixtures::all()) {
    if (f.file_stem == "vacuum") continue;
    CAPTURE(f.file_stem);
    const GreenK g = solve_green_k(f.make(), Vector3d(0.3, -0.2, 0.6), 1.0);
    CHECK(g.right_residual < 1e-12);
    CHECK(g.left_residual < 1e-12);
  }
}

TEST_CASE("ResponseSet media are frozen at their frequency") {
  const ResponseSet rs = evaluate(fixtures::lorentz_dielectric(), 0.7);
  CHECK_NOTHROW(solve_green_k(rs, Vector3d(1, 0, 0), 0.7));
  CHECK_THROWS_AS(solve_green_k(rs, Vector3d(1, 0, 0), 0.8), InvalidInput);
}

TEST_CASE("vacuum Green blocks") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const Vector3d k = fixtures::random_wavevector(rng, 1.5, 3.0);
    const double w = 0.2 + 0.05 * i;
    const ResponseSet rs = ResponseSet::vacuum(w);
    const GreenBlocks b = green_blocks_k(solve_green_k(rs, k, w).g, k, w);
    CHECK((b.ee - b.mm - CTensor3::Identity()).norm() < 1e-12);
    CHECK((b.em + b.me).norm() < 1e-12 * std::max(1.0, b.em.norm()));
  }
}

TEST_CASE("block Green matrix: the magnetic row uses zeta") {
  std::mt19937_64 rng(6);
  const ResponseSet rs = fixtures::random_passive_response(rng);
  const Vector3d k(0.4, 0.1, -0.7);
  const GreenBlocks b = green_blocks_k(solve_green_k(rs, k, rs.omega).g, k, rs.omega);
  const CMatrix6 m = green_block_matrix(b, rs);
  const CTensor3 mu_inv = rs.mu.inverse();
  CHECK((m.bottomLeftCorner<3, 3>() - mu_inv * (b.me - rs.zeta * b.ee)).norm() < 1e-12);
  CHECK((m.bottomRightCorner<3, 3>() - mu_inv * (b.mm - rs.zeta * b.em) - CTensor3::Identity()).norm() <
        1e-12);
  CHECK((m.topLeftCorner<3, 3>() - b.ee).norm() == 0.0);
}

TEST_CASE("Onsager reciprocity") {
  const Vector3d k(0.3, -0.5, 0.7);
  for (const auto& f : fixtures::all()) {
    if (f.file_stem == "tellegen_uniaxial") continue;
    CAPTURE(f.file_stem);
    CHECK(onsager_residual(f.make(), k, 0.9) <= 1e-12);
  }
  CHECK(onsager_residual(fixtures::tellegen_uniaxial(), k, 0.9) >= 1e-3);
}

TEST_CASE("high-frequency asymptote") {
  // vacuum: transverse part of w^2 G + I is k^2 / (k^2 - w^2)
  const double r = asymptote_residual(fixtures::vacuum(), Vector3d(1, 0, 0), 100.0);
  CHECK(r == doctest::Approx(1.0 / (100.0 * 100.0 - 1.0)).epsilon(1e-9));
  const MediumModel m = fixtures::chiral();
  double prev = 1e300;
  for (const double w : {100.0, 200.0, 400.0, 1000.0}) {
    const double cur = asymptote_residual(m, Vector3d(0.2, 0.4, 0.6), w);
    CHECK(cur < prev);
    prev = cur;
  }
  CHECK(prev <= 1e-3);
}

TEST_CASE("1-D Green matrix") {
  Nonlocal1DKernel kern;
  const Green1D g = solve_green_1d(kern, 1.0);
  CHECK(g.residual < 1e-11);
  CHECK((g.g - g.g.transpose()).norm() < 1e-10 * g.g.norm());

  Nonlocal1DKernel coarse;
  coarse.n = 4;
  CHECK_THROWS_AS(solve_green_1d(coarse, 1.0), ResolutionError);
}

TEST_CASE("1-D Green function converges under refinement") {
  auto sample = [](int n, double x, double y) {
    Nonlocal1DKernel kern;
    kern.n = n;
    const Green1D g = solve_green_1d(kern, 0.5);
    const double h = kern.spacing();
    auto idx = [&](double p, int& i, double& t) {
      const double s = p / h - 1.0;
      i = static_cast<int>(std::floor(s));
      t = s - i;
    };
    int i, j;
    double ti, tj;
    idx(x, i, ti);
    idx(y, j, tj);
    return (1 - ti) * (1 - tj) * g.g(i, j) + ti * (1 - tj) * g.g(i + 1, j) +
           (1 - ti) * tj * g.g(i, j + 1) + ti * tj * g.g(i + 1, j + 1);
  };
  const cplx coarse = sample(64, 3.0, 6.0);
  const cplx fine = sample(128, 3.0, 6.0);
  CHECK(std::abs(coarse - fine) <= 0.03 * std::abs(fine));
}
