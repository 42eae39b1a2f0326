// rentsim: deterministic simulator for NFT rental with pay-per-like pricing
// Copyright 2026 The rentsim Authors.
// SPDX-License-Identifier: Apache-2.0
#include "rentsim/world.hpp"

namespace rentsim {

Result<void> validate_world_config(const WorldConfig& config)
{
    if (config.profile.gas_price_gwei <= 0.0 || config.profile.eth_usd <= 0.0
        || config.profile.rnt_usd <= 0.0)
        return Err::NonPositiveInput;
    if (config.batch_k == 0)
        return Err::NonPositiveInput;
    if (config.contract_address == config.exhibitor_address)
        return Err::ReservedAddress;

    static constexpr std::string_view required[] = {
        ops::mint_nft,
        ops::transfer_nft,
        ops::transfer_rnt,
        ops::create_lend_order,
        ops::stop_lend_order,
        ops::rent,
        ops::increase_count,
        ops::stop_rent,
        ops::claim_nft_and_funds,
        ops::claim_refunds,
    };
    for (const auto op : required) {
        const auto units = config.schedule.units(op);
        if (!units)
            return Err::UnknownOp;
    }
    return {};
}

} // namespace rentsim
