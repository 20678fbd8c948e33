#include <gtest/gtest.h>

#include "lagpants/maslov.hpp"

using namespace lagpants;

TEST(Maslov, HolomorphicVolumeOfCoordinatePlanes) {
  TangentFrame x{{1, 0, 0, 0}, {0, 1, 0, 0}};
  EXPECT_NEAR(std::abs(holomorphic_volume(x) - std::complex<double>(-1, 0)), 0.0, 1e-15);
  TangentFrame y{{0, 0, 1, 0}, {0, 0, 0, 1}};
  EXPECT_NEAR(std::abs(holomorphic_volume(y) - std::complex<double>(1, 0)), 0.0, 1e-15);
}

TEST(Maslov, CylindersHaveZeroWinding) {
  for (IPoint d : {IPoint{1, 0}, IPoint{0, 1}, IPoint{1, 1}, IPoint{2, -1}}) {
    WindingResult w = phase_winding(cylinder_loop(d));
    EXPECT_EQ(w.winding, 0);
    EXPECT_TRUE(w.orientation_preserved);
  }
}

TEST(Maslov, RotatingFrameWinds) {
  // e^{-is} applied to both coordinates of the real plane; Omega picks up e^{-2is}.
  std::vector<TangentFrame> loop;
  const int N = 200;
  for (int i = 0; i < N; ++i) {
    double s = kPi * i / N;
    double c = std::cos(s), sn = std::sin(s);
    loop.push_back({{c, 0, sn, 0}, {0, c, 0, sn}});
  }
  WindingResult w = phase_winding(loop);
  EXPECT_EQ(std::abs(w.winding), 1);
}

TEST(Maslov, PantsLegsHaveZeroWinding) {
  PantsMap pm(1);
  for (int leg : {1, 2}) {
    auto loop = pants_basis_loop(pm, leg, 1.0);
    ASSERT_GT(loop.size(), 8u);
    WindingResult w = phase_winding(loop);
    EXPECT_EQ(w.winding, 0) << "leg " << leg;
    EXPECT_LE(w.max_step, 0.5);
  }
}
