// Copyright 2026 The aqcgap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch_amalgamated.hpp>

#include <random>

#include "aqcgap/cases.hpp"
#include "aqcgap/certifier.hpp"
#include "aqcgap/sweep.hpp"
#include "oracles.hpp"

using namespace aqcgap;

namespace {

HamiltonianPair grover2() {
  return {build_projector_complement(ProjectorSpec::uniform(1)), build_diagonal({1, {0, 1}})};
}

HamiltonianPair counterexample() {
  PauliExpression e{2, {}};
  e.add(-2, "XI").add(1, "IX").add(1, "IZ").add(-2, "XX");
  return {build_pauli(e), build_diagonal({2, {0, 2, 6, 8}})};
}

double grover_gap(double s) { return std::sqrt(s * s + (1 - s) * (1 - s)); }

HamiltonianPair random_pair(std::mt19937_64& rng, Eigen::Index d) {
  std::uniform_real_distribution<double> f(0.0, 10.0);
  DenseMatrix p = DenseMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) p(i, i) = f(rng);
  return {HermitianMatrix(oracle::random_hermitian(rng, d)), HermitianMatrix(p)};
}

ScheduleSpec random_schedule(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> inner(1, 6);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int k = inner(rng);
  std::vector<double> ts, as, bs;
  for (int i = 0; i < k; ++i) {
    ts.push_back(u(rng));
    as.push_back(u(rng));
    bs.push_back(u(rng));
  }
  std::sort(ts.begin(), ts.end());
  std::sort(as.begin(), as.end(), std::greater<>());
  std::sort(bs.begin(), bs.end());
  std::vector<ScheduleSample> samples{{0, 1, 0}};
  for (int i = 0; i < k; ++i) {
    if (ts[static_cast<std::size_t>(i)] <= samples.back().t || ts[static_cast<std::size_t>(i)] >= 1) continue;
    samples.push_back({ts[static_cast<std::size_t>(i)], as[static_cast<std::size_t>(i)], bs[static_cast<std::size_t>(i)]});
  }
  samples.push_back({1, 0, 1});
  return ScheduleSpec::tabulated(samples);
}

}  // namespace

TEST_CASE("uniform grid", "[sweep]") {
  const auto g = uniform_grid(4);
  CHECK(g == std::vector<double>{0, 0.25, 0.5, 0.75});
  CHECK_THROWS_AS(uniform_grid(1), InvalidArgument);
}

TEST_CASE("Grover d=2 profile matches the closed form", "[sweep]") {
  const auto prof = gap_sweep(grover2());
  CHECK(prof.m_levels == 2);
  for (std::size_t k = 0; k < prof.grid.size(); ++k) {
    CHECK(std::abs(prof.gap1[k] - grover_gap(prof.grid[k])) <= 1e-9);
  }
  CHECK(prof.crossings.empty());
  CHECK(std::abs(prof.min_gap.value - 1 / std::sqrt(2.0)) <= 1e-9);
  CHECK(std::abs(prof.min_gap.s - 0.5) <= 1e-6);
  CHECK(*std::min_element(prof.gap1.begin(), prof.gap1.end()) == prof.min_gap.value);
}

TEST_CASE("commuting constant spectrum has unit gap", "[sweep]") {
  const auto h = build_diagonal({1, {0, 1}});
  const auto prof = gap_sweep({h, h}, {11, 2});
  CHECK(prof.grid.size() == 11);
  for (double g : prof.gap1) CHECK(g == 1.0);
  CHECK(prof.crossings.empty());
}

TEST_CASE("counterexample sweep reports the crossing", "[sweep]") {
  const auto prof = gap_sweep(counterexample());
  REQUIRE(prof.crossings.size() >= 1);
  const auto& c = prof.crossings.front();
  CHECK(c.lo > 0.0);
  CHECK(c.hi < 1.0);
  CHECK(std::abs(c.s_star - 0.5) < 1e-6);
  CHECK(c.min_gap < 1e-8 * prof.spectral_width);
  CHECK(prof.min_gap.value == c.min_gap);

  const auto table = parse_profile_csv(export_profile(prof));
  bool dips = false;
  for (const auto& row : table.rows) {
    if (row.front() > 0 && row.front() < 1 && row.back() < 1e-8) dips = true;
  }
  CHECK(dips);
}

TEST_CASE("runtime estimate", "[sweep]") {
  const auto pair = grover2();
  SweepOptions opts;
  opts.refine = false;
  const auto prof = gap_sweep(pair, opts);
  const auto est = estimate_runtime(pair, prof, 0.1);
  double expected = 0.0;
  for (double s : prof.grid) expected = std::max(expected, 1.0 / (2.0 * std::pow(grover_gap(s), 3)));
  CHECK(std::abs(est.worst_ratio - expected) <= 1e-9 * expected);
  CHECK(est.suggested_T == Catch::Approx(expected / 0.1));
  CHECK(est.worst_level == 1);

  const auto d1 = build_diagonal({2, {0, 1, 2, 3}});
  const auto d2 = build_diagonal({2, {0, 2, 3, 5}});
  const auto commuting = gap_sweep({d1, d2}, {101, 4});
  CHECK(estimate_runtime({d1, d2}, commuting, 0.5).worst_ratio == 0.0);

  const auto ce = counterexample();
  CHECK_THROWS_AS(estimate_runtime(ce, gap_sweep(ce), 0.1), CrossingPresent);
  CHECK_THROWS_AS(estimate_runtime(pair, prof, 1.5), InvalidArgument);
}

TEST_CASE("CSV schema", "[sweep]") {
  const auto h = build_diagonal({1, {0, 1}});
  const auto prof = gap_sweep({h, h}, {3, 2});
  const auto csv = export_profile(prof);
  const auto table = parse_profile_csv(csv);
  CHECK(table.columns == std::vector<std::string>{"s", "eps0", "eps1", "gap1"});
  CHECK(table.rows.size() == 3);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);

  const auto wide = parse_profile_csv(export_profile(gap_sweep(counterexample(), {21, 4})));
  CHECK(wide.columns.size() == 6);
  for (const auto& row : wide.rows) {
    CHECK(row[5] == Catch::Approx(row[2] - row[1]).margin(1e-14));
  }
}

TEST_CASE("endpoint consistency", "[sweep][property]") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const auto d = static_cast<Eigen::Index>(2 + trial % 8);
    const auto pair = random_pair(rng, d);
    const auto prof = gap_sweep(pair, {201, static_cast<std::size_t>(d)});
    const auto ei = eigenvalues(pair.h_i);
    for (Eigen::Index m = 0; m < d; ++m) CHECK(prof.levels.front()[static_cast<std::size_t>(m)] == ei(m));

    auto f = eigenvalues(pair.h_p);
    const double ds = 1.0 - prof.grid.back();
    const double bound = spectral_norm(combine(1.0, pair.h_p, -1.0, pair.h_i)) * ds + 1e-9;
    for (Eigen::Index m = 0; m < d; ++m) {
      CHECK(std::abs(prof.levels.back()[static_cast<std::size_t>(m)] - f(m)) <= bound);
    }
    const auto end = eigenvalues(interpolate(pair.h_i, pair.h_p, 1.0));
    CHECK((end - f).cwiseAbs().maxCoeff() == 0.0);
    CHECK(gap_at(pair, 1.0) == std::max(0.0, f(1) - f(0)));
  }
}

TEST_CASE("Weyl continuity between adjacent grid points", "[sweep][property]") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const auto d = static_cast<Eigen::Index>(2 + trial % 10);
    const auto pair = random_pair(rng, d);
    const auto prof = gap_sweep(pair, {301, 4});
    const double norm = spectral_norm(combine(1.0, pair.h_p, -1.0, pair.h_i));
    for (std::size_t k = 1; k < prof.grid.size(); ++k) {
      const double ds = prof.grid[k] - prof.grid[k - 1];
      CHECK(ds > 0.0);
      for (std::size_t m = 0; m < prof.m_levels; ++m) {
        CHECK(std::abs(prof.levels[k][m] - prof.levels[k - 1][m]) <= norm * ds + 1e-9);
      }
      for (std::size_t m = 1; m < prof.m_levels; ++m) CHECK(prof.levels[k][m - 1] <= prof.levels[k][m]);
      CHECK(prof.gap1[k] >= 0.0);
    }
  }
}

TEST_CASE("linear schedule sweep equals gap_sweep", "[sweep]") {
  const auto pair = counterexample();
  const auto a = gap_sweep(pair, {101, 3});
  const auto b = schedule_sweep(pair, ScheduleSpec::linear(), {101, 3});
  CHECK(a.grid == b.grid);
  CHECK(a.levels == b.levels);
  CHECK(a.crossings.size() == b.crossings.size());
}

TEST_CASE("tabulated quadratic schedule keeps crossing counts", "[sweep]") {
  std::vector<ScheduleSample> samples;
  for (int k = 0; k <= 20; ++k) {
    const double t = k / 20.0;
    samples.push_back({t, (1 - t) * (1 - t), 1 - (1 - t) * (1 - t)});
  }
  const auto sched = ScheduleSpec::tabulated(samples);
  CHECK(schedule_sweep(grover2(), sched).crossings.size() == gap_sweep(grover2()).crossings.size());
  CHECK(schedule_sweep(counterexample(), sched).crossings.size() ==
        gap_sweep(counterexample()).crossings.size());
}

TEST_CASE("schedule with a + b = 2 doubles the gap", "[sweep]") {
  const auto sched = ScheduleSpec::tabulated({{0, 1, 0}, {0.2, 1, 1}, {0.8, 1, 1}, {1, 0, 1}});
  const auto pair = grover2();
  for (double t : {0.2, 0.3, 0.5, 0.75, 0.8}) {
    CHECK(std::abs(gap_at(pair, sched, t) - 2.0 * gap_at(pair, 0.5)) <= 1e-12);
  }
}

TEST_CASE("schedule rescaling identity", "[sweep][property]") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const auto pair = random_pair(rng, 2 + trial % 6);
    const auto sched = random_schedule(rng);
    const auto prof = schedule_sweep(pair, sched, {101, 2});
    for (std::size_t k = 0; k < prof.grid.size(); ++k) {
      const double a = prof.coeff_a[k], b = prof.coeff_b[k];
      CHECK(std::abs(prof.gap1[k] - (a + b) * gap_at(pair, b / (a + b))) <= 1e-9);
    }
  }
}

TEST_CASE("certified corpus is gapped", "[sweep][property]") {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> f(0.0, 10.0), neg(-2.0, -0.1);
  for (int n = 1; n <= 4; ++n) {
    CaseParams p;
    p.family = Family::bit_rotation;
    p.n_qubits = n;
    for (int q = 0; q < n; ++q) p.ai.push_back(neg(rng));
    DiagonalSpec hp{n, {}};
    for (std::size_t z = 0; z < dimension_for(n); ++z) hp.values.push_back(f(rng));
    const auto inst = make_instance(p, hp);
    REQUIRE(certify(inst).certified());
    const auto prof = gap_sweep(inst, 501, 2);
    CHECK(prof.crossings.empty());
    CHECK(prof.min_gap.value > 0.0);
  }
}

TEST_CASE("sweep input validation", "[sweep]") {
  const HermitianMatrix h(DenseMatrix::Constant(1, 1, 1.0));
  CHECK_THROWS_AS(gap_sweep({h, h}), InvalidArgument);
  CHECK_THROWS_AS(gap_sweep(grover2(), {1, 2}), InvalidArgument);
  CHECK_THROWS_AS(gap_sweep(grover2(), {10, 1}), InvalidArgument);
}
