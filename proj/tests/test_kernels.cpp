#include "hsclab/kernels.hpp"
#include "hsclab/soliton.hpp"
#include "support.hpp"

using namespace hsc;

TEST_SUITE("kernels") {

TEST_CASE("linspace") {
  auto u = linspace(-1, 1, 5);
  REQUIRE(u.size() == 5);
  CHECK(u.front() == -1.0);
  CHECK(u[2] == 0.0);
  CHECK(u.back() == 1.0);
}

TEST_CASE("serial and parallel paths agree bit for bit") {
  GeneratingProfile g = quartic_profile(1, Q("51/100"));
  TripleEval f(curvature_triple(g));
  auto u = linspace(-1, 1, 3001);
  for (int workers : {1, 3, 4}) {
    set_max_workers(workers);
    auto a = sample_abc(f, u, Exec::serial), b = sample_abc(f, u, Exec::parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].A == b[i].A);
      CHECK(a[i].B == b[i].B);
      CHECK(a[i].C == b[i].C);
    }
    auto ea = sample_extrema(f, u, Exec::serial), eb = sample_extrema(f, u, Exec::parallel);
    for (std::size_t i = 0; i < ea.size(); ++i) {
      CHECK(ea[i].min_h == eb[i].min_h);
      CHECK(ea[i].argmin_t == eb[i].argmin_t);
    }
    GridMin ga = dense_h_min(f, -1, 1, 777, 33, Exec::serial), gb = dense_h_min(f, -1, 1, 777, 33, Exec::parallel);
    CHECK(ga.value == gb.value);
    CHECK(ga.u == gb.u);
    CHECK(ga.t == gb.t);
  }
  set_max_workers(0);
}

TEST_CASE("dense minimum of a soliton profile is repeatable") {
  SolitonSolution sol = soliton_profile(3, 1, compact_alpha(3, 1).alpha, SolitonKind::compact);
  AbcFn f = soliton_curvature(sol);
  GridMin a = dense_h_min(f, sol.u_min(), sol.u_max(), 400, 16, Exec::serial);
  GridMin b = dense_h_min(f, sol.u_min(), sol.u_max(), 400, 16, Exec::parallel);
  CHECK(a.value == b.value);
  CHECK(a.u == b.u);
}

}
