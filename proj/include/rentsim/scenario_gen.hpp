// rentsim: deterministic simulator for NFT rental with pay-per-like pricing
// Copyright 2026 The rentsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "rentsim/scenario.hpp"
#include "rentsim/world.hpp"

#include <vector>

namespace rentsim {

struct GenOptions {
    std::uint64_t seed = 1;
    std::size_t max_steps = 60;
    double hostility = 0.15; // share of deliberately invalid or unauthorized steps
};

// Seeded random scenario: funded accounts, minted tokens, then a weighted
// walk over the protocol surface. Invalid references, wrong callers, bad
// amounts, and fraud-heavy click bursts appear in proportion to `hostility`.
std::vector<Step> generate_scenario(const GenOptions& options, const WorldConfig& config);

} // namespace rentsim
