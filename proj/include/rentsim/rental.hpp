// rentsim: deterministic simulator for NFT rental with pay-per-like pricing
// Copyright 2026 The rentsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "rentsim/ledger.hpp"
#include "rentsim/result.hpp"
#include "rentsim/token.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>

namespace rentsim {

enum class OrderState {
    Listed,
    Rented,
    Completed,
    Cancelled,
};

std::string_view to_string(OrderState state);

struct RentAgreement {
    Address renter;
    std::uint64_t duration_s = 0;
    std::uint64_t max_like_count = 0;
    Rnt deposit = 0; // max_like_count * price_per_like, escrowed up front
    std::uint64_t start_time = 0;
    std::uint64_t like_count = 0;
    bool renter_refunded = false;
};

struct Settlement {
    Rnt final_rent = 0; // like_count * price_per_like
    Rnt refund = 0;     // deposit - final_rent
};

struct LendOrder {
    std::uint64_t order_id = 0;
    std::uint64_t token_id = 0;
    Address lender;
    Rnt price_per_like = 0;
    std::uint64_t max_duration_s = 0;
    OrderState state = OrderState::Listed;
    std::optional<RentAgreement> agreement;  // present iff Rented or Completed
    std::optional<Settlement> settlement;    // frozen at the Completed transition
    bool lender_claimed = false;

    std::uint64_t end_time() const; // start_time + duration_s (Rented/Completed only)
};

// Collateral-free, non-wrapped rental: the NFT sits in contract custody from
// listing until the lender's claim; the renter never takes custody. Rent is
// pay-per-like — the renter escrows max_like_count * price_per_like and gets
// the unused part back after settlement.
//
// State machine: Listed -> {Rented, Cancelled}, Rented -> Completed; claims
// only in Completed. Expiry is lazy: any operation touching an order first
// applies the Rented -> Completed transition when now >= start + duration
// (half-open interval; a like landing exactly at the end time is rejected).
class RentalContract {
public:
    static constexpr std::uint64_t seconds_per_day = 86'400;

    RentalContract(Ledger& ledger, TokenRegistry& tokens, Address exhibitor)
        : ledger_(ledger), tokens_(tokens), exhibitor_(std::move(exhibitor))
    {
    }

    // Lists a token: custody moves lender -> contract, order starts Listed.
    Result<std::uint64_t> create_lend_order(const Address& lender, std::uint64_t token_id,
        Rnt price_per_like, std::uint64_t max_days);

    // Cancels a not-yet-rented order and returns the token immediately.
    Result<void> stop_lend_order(const Address& lender, std::uint64_t order_id);

    // Accepts a listed order; escrows the full deposit.
    Result<void> rent(const Address& renter, std::uint64_t order_id, std::uint64_t days,
        std::uint64_t max_like_count);

    // Exhibitor-only like counting; increment >= 1 allows batched flushes.
    Result<std::uint64_t> increase_count(const Address& caller, std::uint64_t order_id,
        std::uint64_t increment);

    // Renter ends the rental early; settlement freezes, no funds move yet.
    Result<Settlement> stop_rent(const Address& renter, std::uint64_t order_id);

    // Applies lazy expiry if due and reports the state. No gas.
    Result<OrderState> observe_expiry(std::uint64_t order_id);

    // Lender collects the token plus the earned rent.
    Result<Settlement> claim_nft_and_funds(const Address& lender, std::uint64_t order_id);

    // Renter collects the unused deposit.
    Result<Rnt> claim_refunds(const Address& renter, std::uint64_t order_id);

    // Pure settlement arithmetic, shared by reports and tests.
    static Result<Settlement> settlement_amounts(std::uint64_t like_count,
        std::uint64_t max_like_count, Rnt price_per_like);

    const LendOrder* find_order(std::uint64_t order_id) const;
    const std::map<std::uint64_t, LendOrder>& orders() const { return orders_; }
    const Address& exhibitor() const { return exhibitor_; }

private:
    LendOrder* mutable_order(std::uint64_t order_id);
    bool expire_if_due(LendOrder& order); // true when this call completed the order
    void freeze_settlement(LendOrder& order);

    Ledger& ledger_;
    TokenRegistry& tokens_;
    Address exhibitor_;
    std::map<std::uint64_t, LendOrder> orders_;
    std::uint64_t next_order_id_ = 0;
};

} // namespace rentsim
