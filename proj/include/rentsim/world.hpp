// rentsim: deterministic simulator for NFT rental with pay-per-like pricing
// Copyright 2026 The rentsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "rentsim/economics.hpp"
#include "rentsim/exhibitor.hpp"
#include "rentsim/ledger.hpp"
#include "rentsim/rental.hpp"
#include "rentsim/token.hpp"

#include <memory>

namespace rentsim {

struct WorldConfig {
    ChainProfile profile = ChainProfile::ethereum();
    GasSchedule schedule = default_gas_schedule();
    std::uint64_t batch_k = 1;
    PolicyConfig policies;
    Address contract_address = "contract";
    Address exhibitor_address = "exhibitor";
};

// The gas schedule must cover every transaction the simulator can issue.
Result<void> validate_world_config(const WorldConfig& config);

// One self-contained simulated chain: ledger, token registry, the rental
// contract with its registered exhibitor address, and the off-chain
// exhibitor service. Each World owns its state; independent worlds may run
// in parallel.
struct World {
    explicit World(WorldConfig cfg)
        : config(std::move(cfg))
        , ledger(config.schedule, config.profile.gas_price_wei(), config.contract_address)
        , tokens(ledger)
        , rental(ledger, tokens, config.exhibitor_address)
        , exhibitor(rental, config.exhibitor_address, config.policies, config.batch_k)
    {
    }

    World(const World&) = delete;
    World& operator=(const World&) = delete;

    WorldConfig config;
    Ledger ledger;
    TokenRegistry tokens;
    RentalContract rental;
    Exhibitor exhibitor;
};

} // namespace rentsim
