#include <cmath>
#include <complex>
#include <vector>

#include <doctest.h>

#include "dickeenv/dicke.hpp"

using namespace dickeenv;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / double(n - 1);
  return g;
}

/// Concurrence of the resonant pair from a dense evolution of |00>|n>.
double exact_concurrence(const DickeParams& params, const SystemLayout& layout,
                         const Propagator& prop, double gt) {
  StateVector psi0 = StateVector::Zero(layout.dim());
  psi0((1 * 2 + 1) * (layout.n_max + 1) + params.n) = 1.0;  // |00> x |n>
  const StateVector psi = prop.evolve(psi0, gt / params.g);
  ComplexMatrix rho = reduced_density_from_state(psi, layout.tensor(), {0, 1});
  return wootters_concurrence(TwoQubitState(DensityMatrix{std::move(rho)}));
}

}  // namespace

TEST_SUITE("dicke") {

TEST_CASE("zero photons leave the pair unentangled forever") {
  DickeParams params;
  params.n = 0;
  for (double gt : linspace(0.0, 9.0, 25)) {
    CHECK(analytic_concurrence(params, gt) == 0.0);
    const ComplexMatrix rho = analytic_rho_ab(params, gt).rho.rho;
    CHECK(std::abs(rho(3, 3) - Complex(1.0, 0.0)) <= 1e-14);  // stays |00><00|
  }
}

TEST_CASE("one photon gives sin^2(sqrt(2) gt) exactly") {
  DickeParams params;
  params.n = 1;
  for (double gt : linspace(0.0, 4.0 * kPi, 200)) {
    const double target = std::pow(std::sin(std::sqrt(2.0) * gt), 2);
    CHECK(std::abs(analytic_concurrence(params, gt) - target) <= 1e-14);
  }
  // unit-concurrence maxima sit at gt = pi (2m+1) / (2 sqrt(2))
  for (int m = 0; m < 4; ++m) {
    const double gt = kPi * (2 * m + 1) / (2.0 * std::sqrt(2.0));
    CHECK(analytic_concurrence(params, gt) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("the analytic state is a normalized three-component mixture") {
  DickeParams params;
  for (int n : {1, 2, 3, 7, 25}) {
    params.n = n;
    for (double gt : linspace(0.0, 6.0, 40)) {
      const ComplexMatrix rho = analytic_rho_ab(params, gt).rho.rho;
      const double w11 = rho(0, 0).real();
      const double wpsi = 2.0 * rho(1, 1).real();
      const double w00 = rho(3, 3).real();
      CHECK(w11 >= -1e-14);
      CHECK(wpsi >= -1e-14);
      CHECK(w00 >= -1e-14);
      CHECK(std::abs(w11 + wpsi + w00 - 1.0) <= 1e-13);
      // the psi+ block carries full coherence: rho(1,2) = rho(1,1)
      CHECK(std::abs(rho(1, 2) - rho(1, 1)) <= 1e-14);
      CHECK(std::abs(rho(1, 1) - rho(2, 2)) <= 1e-14);
      CHECK_NOTHROW(analytic_rho_ab(params, gt).rho.validate());
    }
  }
}

TEST_CASE("analytic state and concurrence match the dense evolution") {
  DickeParams params;
  for (int n : {1, 2, 3}) {
    params.n = n;
    const SystemLayout layout(n, 0);
    const Propagator prop(tc_hamiltonian(params, layout));
    for (double gt : linspace(0.0, 2.0 * kPi, 25)) {
      const double exact = exact_concurrence(params, layout, prop, gt);
      CHECK(std::abs(exact - analytic_concurrence(params, gt)) <= 1e-8);
    }
  }
}

TEST_CASE("coupling strength scales the Hamiltonian linearly") {
  const SystemLayout layout(2, 0);
  DickeParams g1;
  g1.n = 2;
  DickeParams g2;
  g2.n = 2;
  g2.g = 2.0;
  CHECK((tc_hamiltonian(g2, layout) - 2.0 * tc_hamiltonian(g1, layout)).norm() <=
        1e-13);
}

TEST_CASE("the time maximum is exactly 1/n") {
  DickeParams params;
  params.n = 1;
  CHECK(max_concurrence_over_time(params) ==
        doctest::Approx(1.0).epsilon(1e-12));
  for (int n : {2, 3, 5, 20, 50, 100}) {
    params.n = n;
    CHECK(std::abs(double(n) * max_concurrence_over_time(params) - 1.0) <=
          1e-9);
  }
}

TEST_CASE("no grid point ever exceeds the closed-form maximum") {
  DickeParams params;
  for (int n : {1, 2, 4}) {
    params.n = n;
    const double closed = max_concurrence_over_time(params);
    const double period = 2.0 * kPi / std::sqrt(2.0 * (2.0 * n - 1.0));
    double grid_max = 0.0;
    for (double gt : linspace(0.0, period, 4000)) {
      grid_max = std::max(grid_max, analytic_concurrence(params, gt));
    }
    CHECK(grid_max <= closed + 1e-12);
    CHECK(grid_max >= closed - 1e-4);  // the dense grid reaches the peak
  }
}

TEST_CASE("the photon cutoff must hold the initial Fock state") {
  DickeParams params;
  params.n = 3;
  CHECK_THROWS_AS(tc_hamiltonian(params, SystemLayout(2, 0)), CutoffTooSmall);
  CHECK_NOTHROW(tc_hamiltonian(params, SystemLayout(3, 0)));
}

TEST_CASE("heatmap ordering, determinism, and values") {
  const std::vector<double> grid = linspace(0.0, 5.0, 17);
  const auto cells = concurrence_heatmap(0, 3, grid);
  REQUIRE(cells.size() == 4 * grid.size());
  const auto again = concurrence_heatmap(0, 3, grid);
  DickeParams params;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const int n = int(i / grid.size());
    const double gt = grid[i % grid.size()];
    CHECK(cells[i].n == n);
    CHECK(cells[i].gt == gt);
    params.n = n;
    CHECK(std::abs(cells[i].concurrence - analytic_concurrence(params, gt)) <=
          1e-15);
    CHECK(cells[i].concurrence == again[i].concurrence);  // bit-identical rerun
  }
}

}  // TEST_SUITE
