// rentsim: deterministic simulator for NFT rental with pay-per-like pricing
// Copyright 2026 The rentsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "rentsim/runner.hpp"
#include "rentsim/scenario.hpp"
#include "rentsim/world.hpp"

#include <map>
#include <string>
#include <vector>

namespace rentsim {

// Expected outcome of a scenario, computed without the state machine.
struct OracleOrder {
    std::string state;
    std::uint64_t token_id = 0;
    Address lender;
    bool rented = false;
    Address renter;
    Rnt deposit = 0;
    std::uint64_t like_count = 0; // on-chain (flushed) likes
    bool settled = false;
    Rnt final_rent = 0;
    Rnt refund = 0;
    bool lender_claimed = false;
    bool renter_refunded = false;
};

struct OracleOutcome {
    std::map<Address, Rnt> rnt_balances;
    std::map<Address, Wei> native_balances;
    std::map<std::uint64_t, OracleOrder> orders;
    std::uint64_t accepted_clicks = 0;
    std::uint64_t flushed_likes = 0;
    std::map<std::string, std::uint64_t> rejected_by_reason;
};

// Replays a scenario from first principles: policy verdicts are recounted
// directly over the click stream, settlements recomputed as
// final_rent = likes * price and refund = deposit - final_rent, and every
// transfer summed with integer arithmetic. Shares only the step format and
// configuration values with the engine, none of its code paths.
OracleOutcome replay_oracle(const std::vector<Step>& steps, const WorldConfig& config);

// Empty string when engine and oracle agree on every integer field;
// otherwise a description of the first divergence.
std::string compare_engine_oracle(const RunReport& engine, const OracleOutcome& oracle);

} // namespace rentsim
