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

#include "levelseg/engine.hpp"

#include <chrono>
#include <cstdio>

#include "levelseg/errors.hpp"

namespace levelseg {

SegmentationResult evolve(const ScalarField2D& image, const LevelSetField& phi0,
                          EvolutionModel& model, const EvolveOptions& opts) {
  if (!image.same_shape(phi0))
    throw SpecError("evolve: image and level set dimensions differ");
  if (opts.max_iters < 1) throw SpecError("evolve: max_iters must be >= 1");
  if (opts.check_every < 1) throw SpecError("evolve: check_every must be >= 1");
  if (opts.check_every > opts.max_iters)
    throw SpecError("evolve: check_every must be <= max_iters");
  if (opts.patience < 1) throw SpecError("evolve: patience must be >= 1");

  model.prepare(image);
  const ReinitSchedule reinit = model.reinit_schedule();

  SegmentationResult res;
  LevelSetField phi = phi0;
  res.energy_trace.emplace_back(0, model.energy(image, phi));

  std::vector<uint8_t> prev_mask = interior_mask(phi);  // iteration-0 snapshot
  int stable = 0;

  const auto t0 = std::chrono::steady_clock::now();
  for (int iter = 1; iter <= opts.max_iters; ++iter) {
    phi = model.step(image, phi);
    res.iterations_run = iter;
    if (has_non_finite(phi)) {
      char msg[96];
      std::snprintf(msg, sizeof(msg), "%s: non-finite level set value at iteration %d",
                    std::string(model.name()).c_str(), iter);
      throw NumericError(msg);
    }
    const bool checkpoint = iter % opts.check_every == 0;
    if (checkpoint) res.energy_trace.emplace_back(iter, model.energy(image, phi));
    if (reinit.every > 0 && reinit.steps > 0 && iter % reinit.every == 0)
      phi = sussman_reinit(phi, reinit.steps, reinit.dtau);
    if (checkpoint && opts.enable_convergence) {
      std::vector<uint8_t> mask = interior_mask(phi);
      if (mask == prev_mask)
        ++stable;
      else
        stable = 0;
      prev_mask = std::move(mask);
      if (stable >= opts.patience) {
        res.converged = true;
        break;
      }
    }
  }
  const auto t1 = std::chrono::steady_clock::now();
  res.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

  res.phi_final = std::move(phi);
  res.contours = extract_zero_set(res.phi_final);
  return res;
}

Algo parse_algo(const std::string& name) {
  if (name == "edgeflow") return Algo::kEdgeFlow;
  if (name == "chanvese") return Algo::kChanVese;
  if (name == "drlse") return Algo::kDrlse;
  if (name == "rsf") return Algo::kRsf;
  if (name == "localized") return Algo::kLocalized;
  throw SpecError("unknown algorithm '" + name +
                  "' (expected edgeflow, chanvese, drlse, rsf, or localized)");
}

const char* algo_name(Algo algo) {
  switch (algo) {
    case Algo::kEdgeFlow: return "edgeflow";
    case Algo::kChanVese: return "chanvese";
    case Algo::kDrlse: return "drlse";
    case Algo::kRsf: return "rsf";
    case Algo::kLocalized: return "localized";
  }
  return "unknown";
}

int default_max_iters(Algo algo) {
  switch (algo) {
    case Algo::kEdgeFlow: return 500;
    case Algo::kChanVese: return 500;
    case Algo::kDrlse: return 1000;
    case Algo::kRsf: return 400;
    case Algo::kLocalized: return 1000;
  }
  return 500;
}

InitMode default_init_mode(Algo algo) {
  return algo == Algo::kDrlse ? InitMode::kBinaryStep : InitMode::kSdf;
}

std::unique_ptr<EvolutionModel> make_model(const AlgorithmParams& params) {
  switch (params.algo) {
    case Algo::kEdgeFlow: return std::make_unique<EdgeFlowModel>(params.edgeflow);
    case Algo::kChanVese: return std::make_unique<ChanVeseModel>(params.chanvese);
    case Algo::kDrlse: return std::make_unique<DrlseModel>(params.drlse);
    case Algo::kRsf: return std::make_unique<RsfModel>(params.rsf);
    case Algo::kLocalized: return std::make_unique<LocalizedModel>(params.localized);
  }
  throw SpecError("make_model: unhandled algorithm");
}

std::vector<uint8_t> interior_mask(const LevelSetField& phi) {
  std::vector<uint8_t> mask(phi.size());
  for (size_t i = 0; i < mask.size(); ++i) mask[i] = phi[i] < 0.0 ? 1 : 0;
  return mask;
}

double dice(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b) {
  if (a.size() != b.size()) throw SpecError("dice: mask sizes differ");
  size_t na = 0, nb = 0, inter = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    na += a[i] != 0;
    nb += b[i] != 0;
    inter += (a[i] != 0 && b[i] != 0);
  }
  if (na + nb == 0) return 1.0;
  return 2.0 * static_cast<double>(inter) / static_cast<double>(na + nb);
}

}  // namespace levelseg
