// rentsim: deterministic simulator for NFT rental with pay-per-like pricing
// Copyright 2026 The rentsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "rentsim/rental.hpp"
#include "rentsim/result.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rentsim {

struct ClickEvent {
    std::string user_id;
    std::uint64_t order_id = 0;
    std::uint64_t timestamp = 0;
    bool authenticated = true;
};

enum class RejectReason {
    None,
    InactiveOrder,
    Unauthenticated,
    Duplicate,
    RateLimited,
};

std::string_view to_string(RejectReason reason);

struct FraudVerdict {
    ClickEvent event;
    bool accepted = false;
    RejectReason reason = RejectReason::None;
};

struct PolicyConfig {
    bool authenticated_only = true;
    bool dedupe = true;
    bool rate_limit = true;
    std::uint32_t rate_limit_clicks = 5;   // accepted clicks per user ...
    std::uint64_t rate_limit_window_s = 60; // ... per rolling window
};

// Acceptance history the policies consult. Grows only on accepted clicks.
struct PolicyState {
    std::set<std::pair<std::string, std::uint64_t>> liked; // (user, order) pairs counted
    std::map<std::string, std::vector<std::uint64_t>> accept_times; // per user, sorted

    void note_accepted(const ClickEvent& event);
};

// Pure policy composition, fixed order: authenticated -> dedupe -> rate
// limit. The first failing policy names the reason. The rate window covers
// the previous window_s seconds, exclusive at the far edge: an accepted
// click at time s counts against clicks at t while s + window > t.
FraudVerdict apply_policies(const ClickEvent& event, const PolicyConfig& config,
    const PolicyState& state);

struct ExhibitorStats {
    std::uint64_t submitted = 0;
    std::uint64_t accepted = 0;
    std::map<std::string, std::uint64_t> rejected_by_reason;
    std::uint64_t flushed_on_chain = 0;   // likes landed via increase_count
    std::uint64_t increase_count_txs = 0;
    std::uint64_t dropped_at_cap = 0;     // verified likes beyond max_like_count
    std::uint64_t dropped_inactive = 0;   // pending likes lost to completion/expiry
    std::uint64_t flush_failures = 0;     // e.g. exhibitor out of gas funds
};

// Off-chain click processor. Applies the fraud policies to each click,
// accumulates verified likes per order, and flushes them to the contract in
// batches of k (one increase_count of increment k per full batch). Rejected
// clicks never reach the chain and never cost gas.
class Exhibitor {
public:
    Exhibitor(RentalContract& rental, Address address, PolicyConfig policies, std::uint64_t batch_k)
        : rental_(rental), address_(std::move(address)), policies_(policies)
        , batch_k_(batch_k == 0 ? 1 : batch_k)
    {
    }

    // Ingests one click. Timestamps must be non-decreasing across the stream.
    Result<FraudVerdict> submit_click(const ClickEvent& event);

    // Flushes the remaining pending likes (< k) for an order; returns how
    // many landed on-chain. Pending likes above the order's remaining like
    // capacity are dropped and reported, likes on no-longer-rented orders
    // are dropped as inactive.
    Result<std::uint64_t> flush_pending(std::uint64_t order_id);

    std::uint64_t pending(std::uint64_t order_id) const;
    const ExhibitorStats& stats() const { return stats_; }
    const Address& address() const { return address_; }
    const PolicyConfig& policies() const { return policies_; }
    std::uint64_t batch_k() const { return batch_k_; }

private:
    // Sends up to `batch` pending likes on-chain, clamped to the order's
    // remaining capacity; `order` must exist and be Rented.
    Result<std::uint64_t> flush_clamped(std::uint64_t order_id, std::uint64_t batch);

    RentalContract& rental_;
    Address address_;
    PolicyConfig policies_;
    std::uint64_t batch_k_;
    PolicyState policy_state_;
    std::map<std::uint64_t, std::uint64_t> pending_;
    std::uint64_t last_timestamp_ = 0;
    ExhibitorStats stats_;
};

// Proportions of click categories in a synthetic stream.
struct FraudMix {
    double genuine = 1.0;   // distinct authenticated users
    double duplicate = 0.0; // re-clicks by users who already clicked
    double bot = 0.0;       // one bot identity hammering the button
};

// Deterministic synthetic click stream for a single order.
std::vector<ClickEvent> simulate_click_stream(std::uint64_t seed, std::uint32_t n_users,
    std::uint32_t n_clicks, const FraudMix& mix, std::uint64_t order_id = 0,
    std::uint64_t start_time = 0);

// One JSON object per line: {"user": str, "order": int, "t": int, "auth": bool}.
Result<std::vector<ClickEvent>> load_click_stream(const std::string& path);

} // namespace rentsim
