// rentsim: deterministic simulator for NFT rental with pay-per-like pricing
// Copyright 2026 The rentsim Authors.
// SPDX-License-Identifier: Apache-2.0
#include "rentsim/runner.hpp"

#include <iomanip>
#include <sstream>

namespace rentsim {

namespace {

Result<void> to_void(Err err)
{
    if (err == Err::None)
        return {};
    return err;
}

template <typename T>
Result<void> drop_value(const Result<T>& r)
{
    return to_void(r.ok() ? Err::None : r.error());
}

} // namespace

Result<void> apply_step(World& world, const Step& step)
{
    switch (step.kind) {
    case StepKind::OpenAccount:
        return world.ledger.open_account(step.address, step.native, step.rnt);
    case StepKind::MintNft:
        return drop_value(world.tokens.mint_nft(step.address, step.token, step.meta));
    case StepKind::MintRnt:
        return world.ledger.mint_rnt(step.address, step.amount);
    case StepKind::TransferNft:
        return drop_value(world.tokens.transfer_nft(step.address, step.token, step.to));
    case StepKind::TransferRnt:
        return world.tokens.transfer_rnt(step.address, step.to, step.amount);
    case StepKind::Lend:
        return drop_value(
            world.rental.create_lend_order(step.address, step.token, step.price_per_like, step.max_days));
    case StepKind::StopLend:
        return world.rental.stop_lend_order(step.address, step.order);
    case StepKind::Rent:
        return world.rental.rent(step.address, step.order, step.days, step.max_likes);
    case StepKind::Click: {
        // Click streams carry their own timestamps; the chain clock follows
        // them forward (never backward).
        world.ledger.advance_to(step.t);
        ClickEvent event{step.user, step.order, step.t, step.auth};
        auto verdict = world.exhibitor.submit_click(event);
        // A rejected click is a verdict, not a step error.
        return drop_value(verdict);
    }
    case StepKind::Increase:
        return drop_value(world.rental.increase_count(step.address, step.order, step.increment));
    case StepKind::Flush:
        return drop_value(world.exhibitor.flush_pending(step.order));
    case StepKind::StopRent: {
        // The exhibitor's flush is its own transaction; its failure is
        // reported in the exhibitor stats and never blocks the renter.
        (void)world.exhibitor.flush_pending(step.order);
        return drop_value(world.rental.stop_rent(step.address, step.order));
    }
    case StepKind::ClaimLender: {
        (void)world.exhibitor.flush_pending(step.order);
        return drop_value(world.rental.claim_nft_and_funds(step.address, step.order));
    }
    case StepKind::ClaimRenter: {
        (void)world.exhibitor.flush_pending(step.order);
        return drop_value(world.rental.claim_refunds(step.address, step.order));
    }
    case StepKind::AdvanceTime:
        return drop_value(world.ledger.advance_time(step.delta));
    }
    return Err::ParseError;
}

RunReport report_from_world(World& world)
{
    // Settle anything whose rent duration has passed, so the report shows
    // final states as of the final clock.
    std::vector<std::uint64_t> order_ids;
    for (const auto& [id, order] : world.rental.orders())
        order_ids.push_back(id);
    for (const auto id : order_ids)
        (void)world.rental.observe_expiry(id);

    RunReport report;
    report.accounts = world.ledger.accounts();
    report.final_now = world.ledger.now();
    report.burned_wei = world.ledger.burned_wei();
    report.tx_count = world.ledger.tx_log().size();
    report.exhibitor = world.exhibitor.stats();

    for (const auto& record : world.ledger.tx_log()) {
        if (record.fee_paid_wei == 0)
            continue;
        report.gas_spent_wei[record.sender] += record.fee_paid_wei;
        const double usd =
            static_cast<double>(record.fee_paid_wei) * 1e-18 * world.config.profile.eth_usd;
        report.gas_spent_usd[record.sender] += usd;
        report.usd_per_op[record.op_name] += usd;
    }

    for (const auto& [id, order] : world.rental.orders()) {
        OrderReport o;
        o.state = std::string(to_string(order.state));
        o.token_id = order.token_id;
        o.lender = order.lender;
        o.price_per_like = order.price_per_like;
        o.max_duration_s = order.max_duration_s;
        if (order.agreement.has_value()) {
            const auto& agreement = *order.agreement;
            o.rented = true;
            o.renter = agreement.renter;
            o.duration_s = agreement.duration_s;
            o.max_like_count = agreement.max_like_count;
            o.deposit = agreement.deposit;
            o.like_count = agreement.like_count;
            o.renter_refunded = agreement.renter_refunded;
        }
        if (order.settlement.has_value()) {
            o.settled = true;
            o.final_rent = order.settlement->final_rent;
            o.refund = order.settlement->refund;
        }
        o.lender_claimed = order.lender_claimed;
        report.orders[id] = std::move(o);
    }

    // Lender profit: RNT actually collected from settled orders minus the
    // lender's own gas outlay.
    std::map<Address, Rnt> income;
    for (const auto& [id, order] : world.rental.orders()) {
        income.try_emplace(order.lender, 0);
        if (order.lender_claimed)
            income[order.lender] += order.settlement->final_rent;
    }
    for (const auto& [lender, rnt] : income) {
        double gas_usd = 0.0;
        auto it = report.gas_spent_usd.find(lender);
        if (it != report.gas_spent_usd.end())
            gas_usd = it->second;
        report.lender_profit_usd[lender] =
            static_cast<double>(rnt) * world.config.profile.rnt_usd - gas_usd;
    }

    return report;
}

RunReport run_scenario(const std::vector<Step>& steps, const WorldConfig& config,
    const RunOptions& options)
{
    World world(config);

    std::vector<StepError> errors;
    std::size_t applied = 0;
    bool halted = false;

    for (std::size_t i = 0; i < steps.size(); ++i) {
        auto result = apply_step(world, steps[i]);
        ++applied;
        if (!result) {
            errors.push_back(
                {i, std::string(to_string(steps[i].kind)), std::string(to_string(result.error()))});
            if (options.strict) {
                halted = true;
                break;
            }
        }
    }

    RunReport report = report_from_world(world);
    report.errors = std::move(errors);
    report.steps_applied = applied;
    report.halted = halted;
    return report;
}

nlohmann::json report_to_json(const RunReport& report)
{
    nlohmann::json j;

    nlohmann::json accounts = nlohmann::json::object();
    for (const auto& [address, account] : report.accounts) {
        accounts[address] = {
            {"native", account.native_balance},
            {"rnt", account.rnt_balance},
        };
    }
    j["accounts"] = accounts;

    nlohmann::json orders = nlohmann::json::object();
    for (const auto& [id, o] : report.orders) {
        nlohmann::json entry = {
            {"state", o.state},
            {"token", o.token_id},
            {"lender", o.lender},
            {"price_per_like", o.price_per_like},
            {"max_duration_s", o.max_duration_s},
            {"lender_claimed", o.lender_claimed},
        };
        if (o.rented) {
            entry["renter"] = o.renter;
            entry["duration_s"] = o.duration_s;
            entry["max_like_count"] = o.max_like_count;
            entry["deposit"] = o.deposit;
            entry["like_count"] = o.like_count;
            entry["renter_refunded"] = o.renter_refunded;
        }
        if (o.settled) {
            entry["final_rent"] = o.final_rent;
            entry["refund"] = o.refund;
        }
        orders[std::to_string(id)] = std::move(entry);
    }
    j["orders"] = orders;

    nlohmann::json gas;
    gas["burned_wei"] = report.burned_wei;
    gas["per_sender_wei"] = report.gas_spent_wei;
    gas["per_sender_usd"] = report.gas_spent_usd;
    gas["per_op_usd"] = report.usd_per_op;
    j["gas"] = gas;

    nlohmann::json ex;
    ex["submitted"] = report.exhibitor.submitted;
    ex["accepted"] = report.exhibitor.accepted;
    ex["rejected_by_reason"] = report.exhibitor.rejected_by_reason;
    ex["flushed_on_chain"] = report.exhibitor.flushed_on_chain;
    ex["increase_count_txs"] = report.exhibitor.increase_count_txs;
    ex["dropped_at_cap"] = report.exhibitor.dropped_at_cap;
    ex["dropped_inactive"] = report.exhibitor.dropped_inactive;
    ex["flush_failures"] = report.exhibitor.flush_failures;
    j["exhibitor"] = ex;

    j["lender_profit_usd"] = report.lender_profit_usd;

    nlohmann::json errors = nlohmann::json::array();
    for (const auto& e : report.errors)
        errors.push_back({{"index", e.index}, {"step", e.step}, {"error", e.error}});
    j["errors"] = errors;

    j["tx_count"] = report.tx_count;
    j["final_now"] = report.final_now;
    j["steps_applied"] = report.steps_applied;
    j["halted"] = report.halted;
    return j;
}

std::string report_to_table(const RunReport& report)
{
    std::ostringstream out;
    out << std::fixed;

    out << "accounts\n";
    out << "  " << std::left << std::setw(20) << "address" << std::right << std::setw(24)
        << "native (wei)" << std::setw(16) << "RNT" << '\n';
    for (const auto& [address, account] : report.accounts) {
        out << "  " << std::left << std::setw(20) << address << std::right << std::setw(24)
            << account.native_balance << std::setw(16) << account.rnt_balance << '\n';
    }

    out << "orders\n";
    for (const auto& [id, o] : report.orders) {
        out << "  #" << id << " token=" << o.token_id << " state=" << o.state
            << " lender=" << o.lender << " price=" << o.price_per_like;
        if (o.rented) {
            out << " renter=" << o.renter << " deposit=" << o.deposit
                << " likes=" << o.like_count << "/" << o.max_like_count;
        }
        if (o.settled)
            out << " rent=" << o.final_rent << " refund=" << o.refund;
        out << (o.lender_claimed ? " [lender-claimed]" : "")
            << (o.renter_refunded ? " [refunded]" : "") << '\n';
    }

    out << "gas\n";
    out << "  burned_wei=" << report.burned_wei << " tx_count=" << report.tx_count << '\n';
    for (const auto& [sender, wei] : report.gas_spent_wei) {
        out << "  " << std::left << std::setw(20) << sender << std::right << std::setw(24) << wei
            << "  $" << std::setprecision(2) << report.gas_spent_usd.at(sender)
            << std::setprecision(6) << '\n';
    }

    out << "exhibitor\n";
    out << "  submitted=" << report.exhibitor.submitted << " accepted=" << report.exhibitor.accepted
        << " flushed=" << report.exhibitor.flushed_on_chain
        << " txs=" << report.exhibitor.increase_count_txs
        << " dropped_cap=" << report.exhibitor.dropped_at_cap
        << " dropped_inactive=" << report.exhibitor.dropped_inactive << '\n';
    for (const auto& [reason, count] : report.exhibitor.rejected_by_reason)
        out << "  rejected/" << reason << "=" << count << '\n';

    if (!report.lender_profit_usd.empty()) {
        out << "lender profit (USD)\n";
        for (const auto& [lender, usd] : report.lender_profit_usd)
            out << "  " << std::left << std::setw(20) << lender << std::right << " $"
                << std::setprecision(2) << usd << std::setprecision(6) << '\n';
    }

    if (!report.errors.empty()) {
        out << "step errors\n";
        for (const auto& e : report.errors)
            out << "  [" << e.index << "] " << e.step << ": " << e.error << '\n';
    }
    if (report.halted)
        out << "halted (strict mode)\n";
    return out.str();
}

} // namespace rentsim
