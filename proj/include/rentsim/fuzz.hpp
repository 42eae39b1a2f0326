// rentsim: deterministic simulator for NFT rental with pay-per-like pricing
// Copyright 2026 The rentsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "rentsim/scenario.hpp"
#include "rentsim/world.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace rentsim {

struct FuzzOptions {
    std::uint64_t seed = 1;
    std::uint64_t sequences = 100;
    std::uint64_t max_ops = 40;
    double hostility = 0.25;
};

struct FuzzFinding {
    std::size_t step_index = 0;
    std::string description;
};

struct FuzzViolation {
    std::uint64_t sequence = 0;
    std::uint64_t sequence_seed = 0;
    std::string description;
    std::vector<Step> repro; // minimal reproducing step list
};

struct FuzzReport {
    std::uint64_t sequences = 0;
    std::uint64_t steps_executed = 0;
    std::vector<FuzzViolation> violations; // expected empty
};

// Extra predicate the checker runs alongside the module invariants; returns
// a violation description or empty. Lets tests prove the shrinker works.
using ExtraInvariant = std::function<std::string(const World&)>;

// Applies the steps to a fresh world, asserting every module invariant
// (conservation, custody, escrow, solvency, state-machine safety, log
// monotonicity) after each step.
std::optional<FuzzFinding> run_steps_checked(const WorldConfig& config,
    const std::vector<Step>& steps, const ExtraInvariant& extra = {});

// Greedy minimization: drops steps while the violation still reproduces.
std::vector<Step> shrink_violation(const WorldConfig& config, const std::vector<Step>& steps,
    const ExtraInvariant& extra = {});

FuzzReport run_fuzz(const FuzzOptions& options, const WorldConfig& base);

nlohmann::json fuzz_report_to_json(const FuzzReport& report);

} // namespace rentsim
