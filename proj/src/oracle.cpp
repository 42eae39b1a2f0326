// rentsim: deterministic simulator for NFT rental with pay-per-like pricing
// Copyright 2026 The rentsim Authors.
// SPDX-License-Identifier: Apache-2.0
#include "rentsim/oracle.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <utility>

namespace rentsim {

namespace {

constexpr std::uint64_t kNoEnd = std::numeric_limits<std::uint64_t>::max();

// Flat protocol model: plain records, wholesale recomputation, no shared
// logic with the engine beyond the wire formats.
struct ModelAccount {
    Wei native = 0;
    Rnt rnt = 0;
};

struct ModelOrder {
    std::uint64_t id = 0;
    std::uint64_t token = 0;
    Address lender;
    Rnt price = 0;
    std::uint64_t max_duration = 0;
    int state = 0; // 0 Listed, 1 Rented, 2 Completed, 3 Cancelled
    Address renter;
    std::uint64_t duration = 0;
    std::uint64_t max_likes = 0;
    Rnt deposit = 0;
    std::uint64_t start = 0;
    std::uint64_t end = kNoEnd;
    std::uint64_t flushed = 0; // on-chain counter
    std::uint64_t pending = 0; // exhibitor-side verified, unflushed
    Rnt final_rent = 0;
    Rnt refund = 0;
    bool settled = false;
    bool lender_claimed = false;
    bool renter_refunded = false;
};

struct Model {
    const WorldConfig& config;
    std::map<Address, ModelAccount> accounts;
    std::map<std::uint64_t, Address> token_owner;
    std::map<std::uint64_t, ModelOrder> orders;
    std::uint64_t next_order = 0;
    std::uint64_t now = 0;
    Wei native_minted = 0;
    Rnt rnt_minted = 0;

    // exhibitor state
    std::set<std::pair<std::string, std::uint64_t>> counted_pairs;
    std::map<std::string, std::vector<std::uint64_t>> user_accepts;
    std::uint64_t last_click_t = 0;

    OracleOutcome out;

    explicit Model(const WorldConfig& cfg) : config(cfg)
    {
        accounts[cfg.contract_address] = ModelAccount{};
    }

    bool exists(const Address& a) const { return accounts.count(a) != 0; }

    // Fee deduction; false when the whole operation must not run.
    bool pay_gas(const Address& sender, std::string_view op)
    {
        const auto units = config.schedule.units(op);
        if (!units)
            return false;
        if (sender == config.contract_address)
            return false;
        auto it = accounts.find(sender);
        if (it == accounts.end())
            return false;
        Wei fee = 0;
        if (__builtin_mul_overflow(units.value(), config.profile.gas_price_wei(), &fee))
            return false;
        if (it->second.native < fee)
            return false;
        it->second.native -= fee;
        return true;
    }

    void settle(ModelOrder& order)
    {
        order.state = 2;
        order.settled = true;
        order.final_rent = order.flushed * order.price;
        order.refund = order.deposit - order.final_rent;
    }

    // Eager expiry: equivalent to the engine's lazy rule because the flushed
    // counter cannot move once the end time has passed.
    void sweep_expiry()
    {
        for (auto& [id, order] : orders) {
            if (order.state == 1 && order.end != kNoEnd && now >= order.end)
                settle(order);
        }
    }

    void advance_clock(std::uint64_t target)
    {
        if (target > now) {
            now = target;
            sweep_expiry();
        }
    }

    void reject(std::string_view reason) { out.rejected_by_reason[std::string(reason)] += 1; }

    // One exhibitor flush transaction of up to `batch` pending likes.
    // Returns false when the transaction could not be sent (gas).
    bool flush_batch(ModelOrder& order, std::uint64_t batch)
    {
        const std::uint64_t capacity = order.max_likes - order.flushed;
        const std::uint64_t send = std::min(batch, capacity);
        if (send == 0) {
            order.pending -= batch;
            return true;
        }
        if (!pay_gas(config.exhibitor_address, ops::increase_count))
            return false;
        order.flushed += send;
        order.pending -= batch;
        out.flushed_likes += send;
        return true;
    }

    void handle_click(const Step& step)
    {
        advance_clock(step.t);

        if (step.t < last_click_t)
            return; // non-monotonic: rejected at ingestion, nothing counted
        last_click_t = step.t;

        auto order_it = orders.find(step.order);
        if (order_it == orders.end())
            return;
        ModelOrder& order = order_it->second;

        if (order.state != 1) {
            reject("inactive_order");
            return;
        }

        // policy chain: authenticated -> dedupe -> rate limit
        if (config.policies.authenticated_only && !step.auth) {
            reject("unauthenticated");
            return;
        }
        if (config.policies.dedupe && counted_pairs.count({step.user, step.order}) != 0) {
            reject("duplicate");
            return;
        }
        if (config.policies.rate_limit) {
            // accepted times are always <= step.t (monotonic stream), so the
            // age is computable without overflow
            std::uint64_t in_window = 0;
            for (const auto accepted_at : user_accepts[step.user]) {
                if (step.t - accepted_at < config.policies.rate_limit_window_s)
                    ++in_window;
            }
            if (in_window >= config.policies.rate_limit_clicks) {
                reject("rate_limited");
                return;
            }
        }

        counted_pairs.insert({step.user, step.order});
        user_accepts[step.user].push_back(step.t);
        out.accepted_clicks += 1;
        order.pending += 1;

        while (order.pending >= config.batch_k) {
            if (!flush_batch(order, config.batch_k))
                break;
        }
    }

    // Remainder flush; runs before stop/claim steps and on explicit flush.
    void handle_flush(std::uint64_t order_id)
    {
        auto it = orders.find(order_id);
        if (it == orders.end())
            return;
        ModelOrder& order = it->second;
        sweep_expiry();
        if (order.pending == 0)
            return;
        if (order.state != 1) {
            order.pending = 0;
            return;
        }
        const std::uint64_t capacity = order.max_likes - order.flushed;
        if (capacity == 0) {
            order.pending = 0;
            return;
        }
        (void)flush_batch(order, order.pending);
    }

    void handle_step(const Step& step)
    {
        switch (step.kind) {
        case StepKind::OpenAccount: {
            if (exists(step.address))
                return;
            Wei native_total = 0;
            Rnt rnt_total = 0;
            if (__builtin_add_overflow(native_minted, step.native, &native_total))
                return;
            if (__builtin_add_overflow(rnt_minted, step.rnt, &rnt_total))
                return;
            native_minted = native_total;
            rnt_minted = rnt_total;
            accounts[step.address] = ModelAccount{step.native, step.rnt};
            return;
        }
        case StepKind::MintRnt: {
            if (step.address == config.contract_address || !exists(step.address))
                return;
            Rnt rnt_total = 0;
            if (__builtin_add_overflow(rnt_minted, step.amount, &rnt_total))
                return;
            rnt_minted = rnt_total;
            accounts[step.address].rnt += step.amount;
            return;
        }
        case StepKind::MintNft: {
            if (!pay_gas(step.address, ops::mint_nft))
                return;
            if (step.address == config.contract_address)
                return;
            if (token_owner.count(step.token) != 0)
                return;
            token_owner[step.token] = step.address;
            return;
        }
        case StepKind::TransferNft: {
            if (!pay_gas(step.address, ops::transfer_nft))
                return;
            auto it = token_owner.find(step.token);
            if (it == token_owner.end() || it->second != step.address)
                return;
            if (step.to == config.contract_address || !exists(step.to))
                return;
            it->second = step.to;
            return;
        }
        case StepKind::TransferRnt: {
            if (!pay_gas(step.address, ops::transfer_rnt))
                return;
            if (step.to == config.contract_address || !exists(step.to))
                return;
            auto& from = accounts[step.address];
            if (from.rnt < step.amount)
                return;
            from.rnt -= step.amount;
            accounts[step.to].rnt += step.amount;
            return;
        }
        case StepKind::Lend: {
            if (!pay_gas(step.address, ops::create_lend_order))
                return;
            auto it = token_owner.find(step.token);
            if (it == token_owner.end() || it->second != step.address)
                return;
            if (step.price_per_like == 0 || step.max_days == 0)
                return;
            if (step.max_days > std::numeric_limits<std::uint64_t>::max() / 86'400)
                return;
            it->second = config.contract_address;
            ModelOrder order;
            order.id = next_order++;
            order.token = step.token;
            order.lender = step.address;
            order.price = step.price_per_like;
            order.max_duration = step.max_days * 86'400;
            orders[order.id] = order;
            return;
        }
        case StepKind::StopLend: {
            if (!pay_gas(step.address, ops::stop_lend_order))
                return;
            auto it = orders.find(step.order);
            if (it == orders.end())
                return;
            sweep_expiry();
            ModelOrder& order = it->second;
            if (order.state != 0 || order.lender != step.address)
                return;
            token_owner[order.token] = order.lender;
            order.state = 3;
            return;
        }
        case StepKind::Rent: {
            if (!pay_gas(step.address, ops::rent))
                return;
            auto it = orders.find(step.order);
            if (it == orders.end())
                return;
            sweep_expiry();
            ModelOrder& order = it->second;
            if (order.state != 0)
                return;
            if (step.days == 0)
                return;
            if (step.days > std::numeric_limits<std::uint64_t>::max() / 86'400)
                return;
            const std::uint64_t duration = step.days * 86'400;
            if (duration > order.max_duration || step.max_likes == 0)
                return;
            if (step.address == order.lender)
                return;
            Rnt deposit = 0;
            if (__builtin_mul_overflow(step.max_likes, order.price, &deposit))
                return;
            auto& renter = accounts[step.address];
            if (renter.rnt < deposit)
                return;
            renter.rnt -= deposit;
            accounts[config.contract_address].rnt += deposit;
            order.state = 1;
            order.renter = step.address;
            order.duration = duration;
            order.max_likes = step.max_likes;
            order.deposit = deposit;
            order.start = now;
            std::uint64_t end = 0;
            order.end = __builtin_add_overflow(now, duration, &end) ? kNoEnd : end;
            return;
        }
        case StepKind::Click:
            handle_click(step);
            return;
        case StepKind::Increase: {
            if (!pay_gas(step.address, ops::increase_count))
                return;
            auto it = orders.find(step.order);
            if (it == orders.end())
                return;
            sweep_expiry();
            ModelOrder& order = it->second;
            if (step.address != config.exhibitor_address)
                return;
            if (order.state != 1)
                return;
            if (step.increment == 0)
                return;
            if (step.increment > order.max_likes - order.flushed)
                return;
            order.flushed += step.increment;
            return;
        }
        case StepKind::Flush:
            handle_flush(step.order);
            return;
        case StepKind::StopRent: {
            handle_flush(step.order);
            if (!pay_gas(step.address, ops::stop_rent))
                return;
            auto it = orders.find(step.order);
            if (it == orders.end())
                return;
            sweep_expiry();
            ModelOrder& order = it->second;
            if (order.state != 1 || order.renter != step.address)
                return;
            settle(order);
            return;
        }
        case StepKind::ClaimLender: {
            handle_flush(step.order);
            if (!pay_gas(step.address, ops::claim_nft_and_funds))
                return;
            auto it = orders.find(step.order);
            if (it == orders.end())
                return;
            sweep_expiry();
            ModelOrder& order = it->second;
            if (order.state != 2 || order.lender != step.address || order.lender_claimed)
                return;
            token_owner[order.token] = order.lender;
            accounts[config.contract_address].rnt -= order.final_rent;
            accounts[order.lender].rnt += order.final_rent;
            order.lender_claimed = true;
            return;
        }
        case StepKind::ClaimRenter: {
            handle_flush(step.order);
            if (!pay_gas(step.address, ops::claim_refunds))
                return;
            auto it = orders.find(step.order);
            if (it == orders.end())
                return;
            sweep_expiry();
            ModelOrder& order = it->second;
            if (order.state != 2 || order.renter != step.address || order.renter_refunded)
                return;
            accounts[config.contract_address].rnt -= order.refund;
            accounts[order.renter].rnt += order.refund;
            order.renter_refunded = true;
            return;
        }
        case StepKind::AdvanceTime: {
            if (step.delta < 0)
                return;
            std::uint64_t next = 0;
            if (__builtin_add_overflow(now, static_cast<std::uint64_t>(step.delta), &next))
                return;
            advance_clock(next);
            return;
        }
        }
    }

    OracleOutcome finish()
    {
        sweep_expiry();
        for (const auto& [address, account] : accounts) {
            out.rnt_balances[address] = account.rnt;
            out.native_balances[address] = account.native;
        }
        static constexpr const char* state_names[] = {"Listed", "Rented", "Completed", "Cancelled"};
        for (const auto& [id, order] : orders) {
            OracleOrder o;
            o.state = state_names[order.state];
            o.token_id = order.token;
            o.lender = order.lender;
            o.rented = order.state == 1 || order.state == 2;
            o.renter = order.renter;
            o.deposit = order.deposit;
            o.like_count = order.flushed;
            o.settled = order.settled;
            o.final_rent = order.final_rent;
            o.refund = order.refund;
            o.lender_claimed = order.lender_claimed;
            o.renter_refunded = order.renter_refunded;
            out.orders[id] = std::move(o);
        }
        return out;
    }
};

} // namespace

OracleOutcome replay_oracle(const std::vector<Step>& steps, const WorldConfig& config)
{
    Model model(config);
    for (const auto& step : steps)
        model.handle_step(step);
    return model.finish();
}

std::string compare_engine_oracle(const RunReport& engine, const OracleOutcome& oracle)
{
    std::ostringstream why;

    for (const auto& [address, account] : engine.accounts) {
        auto it = oracle.rnt_balances.find(address);
        if (it == oracle.rnt_balances.end()) {
            why << "account " << address << " missing from oracle";
            return why.str();
        }
        if (it->second != account.rnt_balance) {
            why << "rnt[" << address << "] engine=" << account.rnt_balance
                << " oracle=" << it->second;
            return why.str();
        }
        if (oracle.native_balances.at(address) != account.native_balance) {
            why << "native[" << address << "] engine=" << account.native_balance
                << " oracle=" << oracle.native_balances.at(address);
            return why.str();
        }
    }
    if (oracle.rnt_balances.size() != engine.accounts.size()) {
        why << "account count engine=" << engine.accounts.size()
            << " oracle=" << oracle.rnt_balances.size();
        return why.str();
    }

    if (engine.orders.size() != oracle.orders.size()) {
        why << "order count engine=" << engine.orders.size()
            << " oracle=" << oracle.orders.size();
        return why.str();
    }
    for (const auto& [id, o] : engine.orders) {
        auto it = oracle.orders.find(id);
        if (it == oracle.orders.end()) {
            why << "order " << id << " missing from oracle";
            return why.str();
        }
        const OracleOrder& e = it->second;
        if (o.state != e.state) {
            why << "order " << id << " state engine=" << o.state << " oracle=" << e.state;
            return why.str();
        }
        if (o.like_count != e.like_count) {
            why << "order " << id << " likes engine=" << o.like_count
                << " oracle=" << e.like_count;
            return why.str();
        }
        if (o.deposit != e.deposit) {
            why << "order " << id << " deposit engine=" << o.deposit << " oracle=" << e.deposit;
            return why.str();
        }
        if (o.settled != e.settled || o.final_rent != e.final_rent || o.refund != e.refund) {
            why << "order " << id << " settlement engine=(" << o.settled << "," << o.final_rent
                << "," << o.refund << ") oracle=(" << e.settled << "," << e.final_rent << ","
                << e.refund << ")";
            return why.str();
        }
        if (o.lender_claimed != e.lender_claimed || o.renter_refunded != e.renter_refunded) {
            why << "order " << id << " claims engine=(" << o.lender_claimed << ","
                << o.renter_refunded << ") oracle=(" << e.lender_claimed << ","
                << e.renter_refunded << ")";
            return why.str();
        }
    }

    if (engine.exhibitor.accepted != oracle.accepted_clicks) {
        why << "accepted engine=" << engine.exhibitor.accepted
            << " oracle=" << oracle.accepted_clicks;
        return why.str();
    }
    if (engine.exhibitor.flushed_on_chain != oracle.flushed_likes) {
        why << "flushed engine=" << engine.exhibitor.flushed_on_chain
            << " oracle=" << oracle.flushed_likes;
        return why.str();
    }
    for (const auto& [reason, count] : oracle.rejected_by_reason) {
        auto it = engine.exhibitor.rejected_by_reason.find(reason);
        const std::uint64_t engine_count =
            it == engine.exhibitor.rejected_by_reason.end() ? 0 : it->second;
        if (engine_count != count) {
            why << "rejected[" << reason << "] engine=" << engine_count << " oracle=" << count;
            return why.str();
        }
    }
    for (const auto& [reason, count] : engine.exhibitor.rejected_by_reason) {
        if (oracle.rejected_by_reason.count(reason) == 0 && count != 0) {
            why << "rejected[" << reason << "] engine=" << count << " oracle=0";
            return why.str();
        }
    }

    return {};
}

} // namespace rentsim
