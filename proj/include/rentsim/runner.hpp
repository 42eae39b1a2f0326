// rentsim: deterministic simulator for NFT rental with pay-per-like pricing
// Copyright 2026 The rentsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "rentsim/scenario.hpp"
#include "rentsim/world.hpp"

#include <string>
#include <vector>

namespace rentsim {

struct StepError {
    std::size_t index = 0; // 0-based position in the step list
    std::string step;
    std::string error;
};

struct OrderReport {
    std::string state;
    std::uint64_t token_id = 0;
    Address lender;
    Rnt price_per_like = 0;
    std::uint64_t max_duration_s = 0;
    bool rented = false;
    Address renter;
    std::uint64_t duration_s = 0;
    std::uint64_t max_like_count = 0;
    Rnt deposit = 0;
    std::uint64_t like_count = 0;
    bool settled = false;
    Rnt final_rent = 0;
    Rnt refund = 0;
    bool lender_claimed = false;
    bool renter_refunded = false;
};

struct RunReport {
    std::map<Address, Account> accounts;
    std::map<std::uint64_t, OrderReport> orders;
    std::map<Address, Wei> gas_spent_wei;
    std::map<Address, double> gas_spent_usd;
    std::map<std::string, double> usd_per_op; // successful + reverted (fee paid)
    std::map<Address, double> lender_profit_usd;
    ExhibitorStats exhibitor;
    std::vector<StepError> errors;
    std::uint64_t tx_count = 0;
    Wei burned_wei = 0;
    std::uint64_t final_now = 0;
    std::size_t steps_applied = 0;
    bool halted = false; // strict mode stopped at the first error
};

struct RunOptions {
    bool strict = false;
};

// Applies one step to a live world. Click steps first advance the chain
// clock to the event time; stop/claim steps flush the order's pending likes
// first so verified likes are not lost at settlement.
Result<void> apply_step(World& world, const Step& step);

// Runs a full scenario through the real modules and summarizes the outcome.
// Step errors are recorded; in strict mode the run halts at the first one.
RunReport run_scenario(const std::vector<Step>& steps, const WorldConfig& config,
    const RunOptions& options = {});

// Report over a world driven by other means (fuzzer, tests).
RunReport report_from_world(World& world);

nlohmann::json report_to_json(const RunReport& report);
std::string report_to_table(const RunReport& report);

} // namespace rentsim
