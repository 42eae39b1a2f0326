// rentsim: deterministic simulator for NFT rental with pay-per-like pricing
// Copyright 2026 The rentsim Authors.
// SPDX-License-Identifier: Apache-2.0
#include "rentsim/exhibitor.hpp"

#include <algorithm>
#include <fstream>
#include <random>

#include <json.hpp>

namespace rentsim {

std::string_view to_string(RejectReason reason)
{
    switch (reason) {
    case RejectReason::None:
        return "none";
    case RejectReason::InactiveOrder:
        return "inactive_order";
    case RejectReason::Unauthenticated:
        return "unauthenticated";
    case RejectReason::Duplicate:
        return "duplicate";
    case RejectReason::RateLimited:
        return "rate_limited";
    }
    return "unknown";
}

void PolicyState::note_accepted(const ClickEvent& event)
{
    liked.insert({event.user_id, event.order_id});
    accept_times[event.user_id].push_back(event.timestamp);
}

FraudVerdict apply_policies(const ClickEvent& event, const PolicyConfig& config,
    const PolicyState& state)
{
    if (config.authenticated_only && !event.authenticated)
        return {event, false, RejectReason::Unauthenticated};

    if (config.dedupe && state.liked.count({event.user_id, event.order_id}) != 0)
        return {event, false, RejectReason::Duplicate};

    if (config.rate_limit) {
        auto it = state.accept_times.find(event.user_id);
        if (it != state.accept_times.end()) {
            const auto& times = it->second; // sorted: streams are monotonic
            std::size_t in_window = times.size();
            if (event.timestamp >= config.rate_limit_window_s) {
                const std::uint64_t cutoff = event.timestamp - config.rate_limit_window_s;
                // count accepted times strictly after the cutoff
                auto first = std::upper_bound(times.begin(), times.end(), cutoff);
                in_window = static_cast<std::size_t>(times.end() - first);
            }
            if (in_window >= config.rate_limit_clicks)
                return {event, false, RejectReason::RateLimited};
        }
    }

    return {event, true, RejectReason::None};
}

Result<FraudVerdict> Exhibitor::submit_click(const ClickEvent& event)
{
    if (event.timestamp < last_timestamp_)
        return Err::NonMonotonicTimestamp;
    last_timestamp_ = event.timestamp;

    const auto state = rental_.observe_expiry(event.order_id);
    if (!state)
        return state.error(); // UnknownOrder

    stats_.submitted += 1;

    FraudVerdict verdict;
    if (state.value() != OrderState::Rented)
        verdict = FraudVerdict{event, false, RejectReason::InactiveOrder};
    else
        verdict = apply_policies(event, policies_, policy_state_);

    if (!verdict.accepted) {
        stats_.rejected_by_reason[std::string(to_string(verdict.reason))] += 1;
        return verdict;
    }

    policy_state_.note_accepted(event);
    stats_.accepted += 1;
    pending_[event.order_id] += 1;

    while (pending_[event.order_id] >= batch_k_) {
        auto flushed = flush_clamped(event.order_id, batch_k_);
        if (!flushed) {
            stats_.flush_failures += 1;
            break; // keep the batch pending (e.g. exhibitor out of gas funds)
        }
    }
    return verdict;
}

Result<std::uint64_t> Exhibitor::flush_clamped(std::uint64_t order_id, std::uint64_t batch)
{
    const LendOrder* order = rental_.find_order(order_id);
    const RentAgreement& agreement = *order->agreement;
    const std::uint64_t capacity = agreement.max_like_count - agreement.like_count;
    const std::uint64_t send = std::min(batch, capacity);
    const std::uint64_t drop = batch - send;

    if (send == 0) {
        pending_[order_id] -= batch;
        stats_.dropped_at_cap += drop;
        return std::uint64_t{0};
    }

    auto counted = rental_.increase_count(address_, order_id, send);
    if (!counted)
        return counted.error();

    pending_[order_id] -= batch;
    stats_.dropped_at_cap += drop;
    stats_.flushed_on_chain += send;
    stats_.increase_count_txs += 1;
    return send;
}

Result<std::uint64_t> Exhibitor::flush_pending(std::uint64_t order_id)
{
    const auto state = rental_.observe_expiry(order_id);
    if (!state)
        return state.error(); // UnknownOrder

    const std::uint64_t amount = pending(order_id);
    if (amount == 0)
        return std::uint64_t{0};

    if (state.value() != OrderState::Rented) {
        pending_[order_id] = 0;
        stats_.dropped_inactive += amount;
        return std::uint64_t{0};
    }

    const LendOrder* order = rental_.find_order(order_id);
    const RentAgreement& agreement = *order->agreement;
    const std::uint64_t capacity = agreement.max_like_count - agreement.like_count;
    if (capacity == 0) {
        pending_[order_id] = 0;
        stats_.dropped_at_cap += amount;
        return Err::LikeLimitReached;
    }

    auto flushed = flush_clamped(order_id, amount);
    if (!flushed)
        stats_.flush_failures += 1;
    return flushed;
}

std::uint64_t Exhibitor::pending(std::uint64_t order_id) const
{
    auto it = pending_.find(order_id);
    return it == pending_.end() ? 0 : it->second;
}

std::vector<ClickEvent> simulate_click_stream(std::uint64_t seed, std::uint32_t n_users,
    std::uint32_t n_clicks, const FraudMix& mix, std::uint64_t order_id,
    std::uint64_t start_time)
{
    std::mt19937_64 rng(seed);
    std::vector<ClickEvent> events;
    events.reserve(n_clicks);

    double total = mix.genuine + mix.duplicate + mix.bot;
    if (total <= 0.0)
        total = 1.0;
    const double p_genuine = mix.genuine / total;
    const double p_duplicate = mix.duplicate / total;

    std::uint64_t t = start_time;
    std::uint32_t next_user = 0;
    std::vector<std::string> clicked; // users who already clicked, duplicate pool

    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<std::uint64_t> gap(0, 3);

    for (std::uint32_t i = 0; i < n_clicks; ++i) {
        const double draw = coin(rng);
        ClickEvent event;
        event.order_id = order_id;
        event.timestamp = t;
        event.authenticated = true;

        const bool wants_duplicate = draw >= p_genuine && draw < p_genuine + p_duplicate;
        if (draw >= p_genuine + p_duplicate) {
            event.user_id = "bot";
        } else if (wants_duplicate && !clicked.empty()) {
            std::uniform_int_distribution<std::size_t> pick(0, clicked.size() - 1);
            event.user_id = clicked[pick(rng)];
        } else {
            event.user_id = "u" + std::to_string(next_user % std::max(n_users, 1u));
            ++next_user;
            clicked.push_back(event.user_id);
        }

        events.push_back(event);
        t += gap(rng);
    }
    return events;
}

Result<std::vector<ClickEvent>> load_click_stream(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        return Err::ParseError;

    std::vector<ClickEvent> events;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object())
            return Err::ParseError;
        if (!j.contains("user") || !j["user"].is_string())
            return Err::ParseError;
        if (!j.contains("order") || !j["order"].is_number_unsigned())
            return Err::ParseError;
        if (!j.contains("t") || !j["t"].is_number_unsigned())
            return Err::ParseError;

        ClickEvent event;
        event.user_id = j["user"].get<std::string>();
        event.order_id = j["order"].get<std::uint64_t>();
        event.timestamp = j["t"].get<std::uint64_t>();
        event.authenticated = true;
        if (j.contains("auth")) {
            if (!j["auth"].is_boolean())
                return Err::ParseError;
            event.authenticated = j["auth"].get<bool>();
        }
        events.push_back(std::move(event));
    }
    return events;
}

} // namespace rentsim
