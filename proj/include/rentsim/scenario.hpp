// rentsim: deterministic simulator for NFT rental with pay-per-like pricing
// Copyright 2026 The rentsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "rentsim/ledger.hpp"
#include "rentsim/result.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace rentsim {

enum class StepKind {
    OpenAccount,
    MintNft,
    MintRnt,
    TransferNft,
    TransferRnt,
    Lend,
    StopLend,
    Rent,
    Click,
    Increase, // direct increase_count transaction by an arbitrary caller
    Flush,
    StopRent,
    ClaimLender,
    ClaimRenter,
    AdvanceTime,
};

std::string_view to_string(StepKind kind);

// One scenario line. A flat record keyed by `kind`; unused fields stay at
// their defaults. Scenarios are JSONL: one step object per line. A line
// without a "step" tag but with user/order/t keys is read as a click, so a
// raw click-stream file is itself a valid scenario tail.
struct Step {
    StepKind kind = StepKind::AdvanceTime;

    Address address;               // open_account / mint_nft owner / lend lender /
                                   // stop_lend / rent renter / stop_rent / claims /
                                   // transfer sender
    Address to;                    // transfer recipient
    Wei native = 0;                // open_account
    Rnt rnt = 0;                   // open_account
    std::uint64_t token = 0;       // mint_nft / transfer_nft / lend
    std::string meta;              // mint_nft
    Rnt amount = 0;                // mint_rnt / transfer_rnt
    Rnt price_per_like = 0;        // lend
    std::uint64_t max_days = 0;    // lend
    std::uint64_t order = 0;       // order-scoped steps
    std::uint64_t days = 0;        // rent
    std::uint64_t max_likes = 0;   // rent
    std::string user;              // click
    std::uint64_t t = 0;           // click
    bool auth = true;              // click
    std::uint64_t increment = 0;   // increase_count
    std::int64_t delta = 0;        // advance_time
};

Result<Step> step_from_json(const nlohmann::json& j);
nlohmann::json step_to_json(const Step& step);

// Parses a JSONL stream; on failure `error_detail` (when given) names the
// offending line.
Result<std::vector<Step>> parse_scenario(std::istream& in, std::string* error_detail = nullptr);
Result<std::vector<Step>> load_scenario(const std::string& path, std::string* error_detail = nullptr);

std::string scenario_to_jsonl(const std::vector<Step>& steps);

// Convenience constructors used by tests and the generators.
namespace steps {
Step open_account(Address address, Wei native, Rnt rnt);
Step mint_nft(Address owner, std::uint64_t token, std::string meta = {});
Step mint_rnt(Address to, Rnt amount);
Step transfer_nft(Address from, Address to, std::uint64_t token);
Step transfer_rnt(Address from, Address to, Rnt amount);
Step lend(Address lender, std::uint64_t token, Rnt price_per_like, std::uint64_t max_days);
Step stop_lend(Address lender, std::uint64_t order);
Step rent(Address renter, std::uint64_t order, std::uint64_t days, std::uint64_t max_likes);
Step click(std::string user, std::uint64_t order, std::uint64_t t, bool auth = true);
Step increase(Address caller, std::uint64_t order, std::uint64_t increment);
Step flush(std::uint64_t order);
Step stop_rent(Address renter, std::uint64_t order);
Step claim_lender(Address lender, std::uint64_t order);
Step claim_renter(Address renter, std::uint64_t order);
Step advance_time(std::int64_t delta);
} // namespace steps

} // namespace rentsim
