// Copyright 2026 The levelseg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "levelseg/engine.hpp"
#include "levelseg/errors.hpp"

using namespace levelseg;

namespace {

class StationaryModel : public EvolutionModel {
 public:
  std::string_view name() const override { return "stationary"; }
  LevelSetField step(const ScalarField2D&, const LevelSetField& phi) override {
    return phi;
  }
  double energy(const ScalarField2D&, const LevelSetField& phi) const override {
    double s = 0.0;
    for (size_t i = 0; i < phi.size(); ++i) s += phi[i] * phi[i];
    return s;
  }
};

class ScheduledStationary : public StationaryModel {
 public:
  explicit ScheduledStationary(ReinitSchedule s) : sched_(s) {}
  ReinitSchedule reinit_schedule() const override { return sched_; }

 private:
  ReinitSchedule sched_;
};

// moves a one-column interior stripe every step; the sign pattern never rests
class DriftingStripe : public EvolutionModel {
 public:
  std::string_view name() const override { return "drift"; }
  LevelSetField step(const ScalarField2D&, const LevelSetField& phi) override {
    LevelSetField out(phi.width(), phi.height(), 1.0);
    const int col = ++calls_ % phi.width();
    for (int y = 0; y < phi.height(); ++y) out.at(col, y) = -1.0;
    return out;
  }
  double energy(const ScalarField2D&, const LevelSetField&) const override { return 0.0; }

 private:
  int calls_ = 0;
};

class FlipOnce : public EvolutionModel {
 public:
  explicit FlipOnce(int at) : at_(at) {}
  std::string_view name() const override { return "fliponce"; }
  LevelSetField step(const ScalarField2D&, const LevelSetField& phi) override {
    if (++calls_ != at_) return phi;
    LevelSetField out = phi;
    for (size_t i = 0; i < out.size(); ++i) out[i] = -out[i];
    return out;
  }
  double energy(const ScalarField2D&, const LevelSetField&) const override { return 0.0; }

 private:
  int at_;
  int calls_ = 0;
};

class PoisonAt : public EvolutionModel {
 public:
  explicit PoisonAt(int at) : at_(at) {}
  std::string_view name() const override { return "poison"; }
  LevelSetField step(const ScalarField2D&, const LevelSetField& phi) override {
    LevelSetField out = phi;
    if (++calls_ == at_) out[0] = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  double energy(const ScalarField2D&, const LevelSetField&) const override { return 0.0; }

 private:
  int at_;
  int calls_ = 0;
};

LevelSetField circle_sdf(int w, int h, double cx, double cy, double r) {
  LevelSetField phi(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) phi.at(x, y) = std::hypot(x - cx, y - cy) - r;
  return phi;
}

}  // namespace

TEST_SUITE("engine") {

TEST_CASE("a still sign pattern stops after patience consecutive checks") {
  const ScalarField2D image(16, 16, 0.5);
  const LevelSetField phi0 = circle_sdf(16, 16, 8, 8, 5);
  StationaryModel model;
  EvolveOptions opts;  // check_every 10, patience 3
  const SegmentationResult res = evolve(image, phi0, model, opts);
  CHECK(res.converged);
  CHECK(res.iterations_run == 30);
  REQUIRE(res.energy_trace.size() == 4);
  const int expected[] = {0, 10, 20, 30};
  for (size_t i = 0; i < 4; ++i) {
    CHECK(res.energy_trace[i].first == expected[i]);
    CHECK(res.energy_trace[i].second == res.energy_trace[0].second);
  }
  for (size_t i = 0; i < phi0.size(); ++i) CHECK(res.phi_final[i] == phi0[i]);
  CHECK(!res.contours.empty());
  CHECK(res.wall_ms >= 0.0);
}

TEST_CASE("per-iteration checks give the earliest possible stop") {
  const ScalarField2D image(8, 8, 0.0);
  const LevelSetField phi0 = circle_sdf(8, 8, 4, 4, 2);
  StationaryModel model;
  EvolveOptions opts;
  opts.check_every = 1;
  CHECK(evolve(image, phi0, model, opts).iterations_run == 3);
  opts.patience = 1;
  CHECK(evolve(image, phi0, model, opts).iterations_run == 1);
}

TEST_CASE("a pattern that never settles exhausts the budget") {
  const ScalarField2D image(12, 12, 0.0);
  const LevelSetField phi0 = circle_sdf(12, 12, 6, 6, 3);
  DriftingStripe model;
  EvolveOptions opts;
  opts.max_iters = 50;
  const SegmentationResult res = evolve(image, phi0, model, opts);
  CHECK(!res.converged);
  CHECK(res.iterations_run == 50);
  CHECK(res.energy_trace.size() == 6);  // 0, 10, ..., 50
}

TEST_CASE("one sign flip resets the patience counter") {
  const ScalarField2D image(10, 10, 0.0);
  const LevelSetField phi0 = circle_sdf(10, 10, 5, 5, 3);
  FlipOnce model{15};
  EvolveOptions opts;
  opts.max_iters = 200;
  const SegmentationResult res = evolve(image, phi0, model, opts);
  CHECK(res.converged);
  CHECK(res.iterations_run == 50);  // flip lands between checks 10 and 20
}

TEST_CASE("convergence detection can be disabled") {
  const ScalarField2D image(8, 8, 0.0);
  const LevelSetField phi0 = circle_sdf(8, 8, 4, 4, 2);
  StationaryModel model;
  EvolveOptions opts;
  opts.max_iters = 40;
  opts.enable_convergence = false;
  const SegmentationResult res = evolve(image, phi0, model, opts);
  CHECK(!res.converged);
  CHECK(res.iterations_run == 40);
}

TEST_CASE("non-finite values abort with the failing iteration") {
  const ScalarField2D image(8, 8, 0.0);
  const LevelSetField phi0 = circle_sdf(8, 8, 4, 4, 2);
  PoisonAt model{7};
  EvolveOptions opts;
  CHECK_THROWS_WITH_AS(
      evolve(image, phi0, model, opts),
      doctest::Contains("poison: non-finite level set value at iteration 7"),
      NumericError);
}

TEST_CASE("redistancing: sampled energy precedes it, the mask check follows it") {
  const ScalarField2D image(32, 32, 0.0);
  LevelSetField phi0 = circle_sdf(32, 32, 16, 16, 10);
  for (size_t i = 0; i < phi0.size(); ++i) phi0[i] *= 3.0;  // distorted slope

  ScheduledStationary off{{0, 0, 0.3}};
  EvolveOptions opts;
  const SegmentationResult plain = evolve(image, phi0, off, opts);
  CHECK(plain.converged);
  for (size_t i = 0; i < phi0.size(); ++i) CHECK(plain.phi_final[i] == phi0[i]);
  for (const auto& [it, e] : plain.energy_trace)
    CHECK(e == plain.energy_trace[0].second);

  ScheduledStationary on{{10, 20, 0.3}};
  const SegmentationResult res = evolve(image, phi0, on, opts);
  CHECK(res.converged);
  CHECK(res.iterations_run == 30);
  // iteration-10 sample is taken before that iteration's redistancing
  CHECK(res.energy_trace[1].second == res.energy_trace[0].second);
  // by iteration 20 the slope was pulled toward 1, shrinking the values
  CHECK(res.energy_trace[2].second < res.energy_trace[1].second);
  bool changed = false;
  for (size_t i = 0; i < phi0.size() && !changed; ++i)
    changed = res.phi_final[i] != phi0[i];
  CHECK(changed);

  ScheduledStationary zero_steps{{10, 0, 0.3}};
  const SegmentationResult noop = evolve(image, phi0, zero_steps, opts);
  for (size_t i = 0; i < phi0.size(); ++i) CHECK(noop.phi_final[i] == phi0[i]);
}

TEST_CASE("option and shape validation") {
  const ScalarField2D image(8, 8, 0.0);
  const LevelSetField phi0 = circle_sdf(8, 8, 4, 4, 2);
  StationaryModel model;
  EvolveOptions opts;

  opts.max_iters = 0;
  CHECK_THROWS_AS(evolve(image, phi0, model, opts), SpecError);
  opts.max_iters = 10;
  opts.check_every = 0;
  CHECK_THROWS_AS(evolve(image, phi0, model, opts), SpecError);
  opts.check_every = 11;
  CHECK_THROWS_WITH_AS(evolve(image, phi0, model, opts),
                       doctest::Contains("check_every must be <= max_iters"), SpecError);
  opts.check_every = 10;
  opts.patience = 0;
  CHECK_THROWS_AS(evolve(image, phi0, model, opts), SpecError);
  opts.patience = 3;

  const LevelSetField tall(8, 9, 1.0);
  CHECK_THROWS_WITH_AS(evolve(image, tall, model, opts),
                       doctest::Contains("dimensions differ"), SpecError);
}

TEST_CASE("a budget of one iteration runs exactly one step") {
  const ScalarField2D image(8, 8, 0.0);
  const LevelSetField phi0 = circle_sdf(8, 8, 4, 4, 2);
  StationaryModel model;
  EvolveOptions opts;
  opts.max_iters = 1;
  opts.check_every = 1;
  const SegmentationResult res = evolve(image, phi0, model, opts);
  CHECK(!res.converged);  // one stable check < default patience
  CHECK(res.iterations_run == 1);
  REQUIRE(res.energy_trace.size() == 2);
  CHECK(res.energy_trace[1].first == 1);
}

TEST_CASE("interior mask is the strict negative part") {
  LevelSetField phi(3, 1);
  phi[0] = -1.0;
  phi[1] = 0.0;
  phi[2] = 1.0;
  const std::vector<uint8_t> mask = interior_mask(phi);
  CHECK(mask == std::vector<uint8_t>{1, 0, 0});
}

TEST_CASE("dice overlap") {
  CHECK(dice({1, 1, 0, 0}, {1, 0, 1, 0}) == doctest::Approx(0.5));
  CHECK(dice({0, 0}, {0, 0}) == 1.0);  // both empty counts as agreement
  CHECK(dice({1, 0}, {0, 1}) == 0.0);
  CHECK(dice({1, 1}, {1, 1}) == 1.0);
  CHECK_THROWS_WITH_AS(dice({1}, {1, 0}), doctest::Contains("mask sizes"), SpecError);
}

TEST_CASE("algorithm registry round-trips") {
  const Algo all[] = {Algo::kEdgeFlow, Algo::kChanVese, Algo::kDrlse, Algo::kRsf,
                      Algo::kLocalized};
  for (Algo a : all) CHECK(parse_algo(algo_name(a)) == a);
  CHECK_THROWS_WITH_AS(parse_algo("blob"), doctest::Contains("unknown algorithm"),
                       SpecError);

  CHECK(default_max_iters(Algo::kEdgeFlow) == 500);
  CHECK(default_max_iters(Algo::kChanVese) == 500);
  CHECK(default_max_iters(Algo::kDrlse) == 1000);
  CHECK(default_max_iters(Algo::kRsf) == 400);
  CHECK(default_max_iters(Algo::kLocalized) == 1000);

  for (Algo a : all)
    CHECK(default_init_mode(a) ==
          (a == Algo::kDrlse ? InitMode::kBinaryStep : InitMode::kSdf));

  AlgorithmParams params;
  for (Algo a : all) {
    params.algo = a;
    CHECK(make_model(params)->name() == algo_name(a));
  }
  params.algo = Algo::kChanVese;
  CHECK(make_model(params)->reinit_schedule().every == 25);
  params.algo = Algo::kLocalized;
  CHECK(make_model(params)->reinit_schedule().every == 25);
  params.algo = Algo::kDrlse;
  CHECK(make_model(params)->reinit_schedule().every == 0);
  params.algo = Algo::kRsf;
  CHECK(make_model(params)->reinit_schedule().every == 0);
  params.algo = Algo::kEdgeFlow;
  CHECK(make_model(params)->reinit_schedule().every == 0);
}

TEST_CASE("region flow holds still when both phases share a mean") {
  // straight off-lattice stripe on a flat image: zero data force, zero
  // curvature on the band, so the very first checks already agree
  const ScalarField2D image(64, 64, 0.5);
  LevelSetField phi0(64, 64);
  for (int y = 0; y < 64; ++y)
    for (int x = 0; x < 64; ++x) phi0.at(x, y) = std::fabs(y - 31.7) - 12.2;
  ChanVeseModel model{ChanVeseParams{}};
  EvolveOptions opts;
  const SegmentationResult res = evolve(image, phi0, model, opts);
  CHECK(res.converged);
  CHECK(res.iterations_run == 30);
  CHECK(interior_mask(res.phi_final) == interior_mask(phi0));
}

}  // TEST_SUITE
