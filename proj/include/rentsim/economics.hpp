// rentsim: deterministic simulator for NFT rental with pay-per-like pricing
// Copyright 2026 The rentsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "rentsim/result.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace rentsim {

using Gas = std::uint64_t;
using Wei = std::uint64_t;
using Rnt = std::uint64_t;

// Canonical operation labels. Gas schedules, the transaction log, and cost
// reports all key on these strings.
namespace ops {
inline constexpr std::string_view deploy = "deploy";
inline constexpr std::string_view mint_nft = "mint_nft";
inline constexpr std::string_view transfer_nft = "transfer_nft";
inline constexpr std::string_view transfer_rnt = "transfer_rnt";
inline constexpr std::string_view create_lend_order = "create_lend_order";
inline constexpr std::string_view stop_lend_order = "stop_lend_order";
inline constexpr std::string_view rent = "rent";
inline constexpr std::string_view increase_count = "increase_count";
inline constexpr std::string_view stop_rent = "stop_rent";
inline constexpr std::string_view claim_nft_and_funds = "claim_nft_and_funds";
inline constexpr std::string_view claim_refunds = "claim_refunds";
inline constexpr std::string_view record_click_metadata = "record_click_metadata";
} // namespace ops

// Price environment of one chain: gas price plus the USD rates used to
// convert gas and RNT flows into dollar figures. Rates must be positive.
struct ChainProfile {
    std::string name;
    double gas_price_gwei = 0.0;
    double eth_usd = 0.0; // USD per native token
    double rnt_usd = 1.0; // USD per RNT; exchange assumption, configurable

    Wei gas_price_wei() const;

    // Ethereum mainnet snapshot: 7 gwei, ETH at 1,597.70 USD.
    static ChainProfile ethereum();
    // Cheaper-chain profile, calibrated so that the per-op cost ratio against
    // ethereum() equals the published average-fee ratio 68.72 / 2.46.
    static ChainProfile binance_like();
};

Result<ChainProfile> chain_profile_from_json(const nlohmann::json& j);
Result<ChainProfile> load_chain_profile(const std::string& path);

// Gas units per operation. All user-visible transactions must have an entry.
class GasSchedule {
public:
    GasSchedule() = default;
    explicit GasSchedule(std::map<std::string, Gas> units) : units_(std::move(units)) {}

    Result<Gas> units(std::string_view op) const;
    bool contains(std::string_view op) const;
    void set(std::string_view op, Gas gas_units);
    const std::map<std::string, Gas>& entries() const { return units_; }

private:
    std::map<std::string, Gas> units_;
};

// Default schedule, calibrated against the Ethereum profile: increase_count
// lands at $0.45, deployment at $28.08, and every other op inside the
// $0.45..$2.06 band.
GasSchedule default_gas_schedule();

Result<GasSchedule> gas_schedule_from_json(const nlohmann::json& j);
Result<GasSchedule> load_gas_schedule(const std::string& path);

// USD cost of one transaction: gas_units * gas_price_gwei * 1e-9 * eth_usd.
// Full precision; round with round_usd_cents for display.
Result<double> tx_cost_usd(Gas gas_units, const ChainProfile& profile);

// Half-up rounding to whole cents.
double round_usd_cents(double usd);

// Inverse of tx_cost_usd: gas units whose cost is closest to `usd`.
Result<Gas> gas_units_for_usd(double usd, const ChainProfile& profile);

struct CostLine {
    std::string op;
    std::uint64_t count = 0;
    Gas gas_each = 0;
    double usd_total = 0.0;
};

struct CostReport {
    std::string role;
    std::vector<CostLine> items;
    double total_usd = 0.0;
    double income_usd = 0.0;
    double profit_usd = 0.0; // income - total
};

// Gas outlay of one full order for a given role.
//   lender:    create_lend_order + claim_nft_and_funds
//   renter:    rent [+ stop_rent] + claim_refunds
//   exhibitor: ceil(likes / k) * increase_count
// When price_per_like > 0 the lender's like income is included and profit
// computed; deployment is never part of a role lifecycle.
Result<CostReport> order_lifecycle_cost(const ChainProfile& profile, const GasSchedule& schedule,
    std::string_view role, std::uint64_t likes, std::uint64_t batch_k,
    bool include_stop_rent = false, Rnt price_per_like = 0);

// Smallest integer price per like that makes the lender lifecycle profitable
// for the expected number of likes: likes * price * rnt_usd >= lifecycle USD.
Result<Rnt> break_even_price_per_like(const ChainProfile& profile, const GasSchedule& schedule,
    std::uint64_t expected_likes);

struct TrustCostRow {
    std::string mode;
    Gas gas_total = 0;
    double usd = 0.0;
};

struct TrustCostCurve {
    std::vector<TrustCostRow> rows; // counter_batched, counter_unbatched, full_metadata
    double trust_cost_usd = 0.0;    // full_metadata excess over counter_batched
    double metadata_over_batched = 0.0;
};

// Cost of three levels of on-chain evidence: batched counter updates,
// per-like counter updates, and per-click metadata records covering every
// click whether accepted or not.
Result<TrustCostCurve> trust_cost_curve(const ChainProfile& profile, const GasSchedule& schedule,
    std::uint64_t total_clicks, std::uint64_t verified_likes, std::uint64_t batch_k);

// USD cost ratio a/b for the same operation under two profiles.
Result<double> compare_chains(const GasSchedule& schedule, const ChainProfile& a,
    const ChainProfile& b, std::string_view op);

} // namespace rentsim
