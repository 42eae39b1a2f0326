// rentsim: deterministic simulator for NFT rental with pay-per-like pricing
// Copyright 2026 The rentsim Authors.
// SPDX-License-Identifier: Apache-2.0
#include "rentsim/fuzz.hpp"

#include "rentsim/runner.hpp"
#include "rentsim/scenario_gen.hpp"

#include <set>
#include <sstream>

namespace rentsim {

namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

using u128 = unsigned __int128;

// Checks every module invariant against the live world, comparing with the
// snapshot taken after the previous step for the temporal ones.
class InvariantChecker {
public:
    explicit InvariantChecker(const World& world) { take_snapshot(world); }

    std::string check_and_advance(const World& world)
    {
        std::string violation = check(world);
        take_snapshot(world);
        return violation;
    }

private:
    struct OrderSnap {
        OrderState state = OrderState::Listed;
        bool lender_claimed = false;
        bool renter_refunded = false;
        std::uint64_t like_count = 0;
    };

    std::map<std::uint64_t, OrderSnap> orders_;
    std::set<std::uint64_t> token_ids_;
    std::size_t log_len_ = 0;
    std::uint64_t now_ = 0;

    void take_snapshot(const World& world)
    {
        orders_.clear();
        for (const auto& [id, order] : world.rental.orders()) {
            std::uint64_t likes = 0;
            if (order.agreement.has_value())
                likes = order.agreement->like_count;
            orders_[id] = {order.state, order.lender_claimed,
                order.agreement.has_value() && order.agreement->renter_refunded, likes};
        }
        token_ids_.clear();
        for (const auto& [id, token] : world.tokens.tokens())
            token_ids_.insert(id);
        log_len_ = world.ledger.tx_log().size();
        now_ = world.ledger.now();
    }

    static bool legal_transition(OrderState from, OrderState to)
    {
        if (from == to)
            return true;
        if (from == OrderState::Listed)
            return to == OrderState::Rented || to == OrderState::Cancelled;
        if (from == OrderState::Rented)
            return to == OrderState::Completed;
        return false; // Completed and Cancelled are terminal
    }

    std::string check(const World& world) const
    {
        std::ostringstream why;
        const Ledger& ledger = world.ledger;

        // conservation: native + burned == minted, rnt == minted
        u128 native_sum = 0;
        u128 rnt_sum = 0;
        for (const auto& [address, account] : ledger.accounts()) {
            native_sum += account.native_balance;
            rnt_sum += account.rnt_balance;
        }
        if (native_sum + ledger.burned_wei() != u128{ledger.total_native_minted()}) {
            why << "native conservation broken: balances+burned != minted";
            return why.str();
        }
        if (rnt_sum != u128{ledger.total_rnt_minted()}) {
            why << "rnt conservation broken: balances != minted";
            return why.str();
        }

        // clock
        if (ledger.now() < now_) {
            why << "clock moved backwards";
            return why.str();
        }

        // tokens: never destroyed, always owned by a live account
        for (const auto id : token_ids_) {
            if (world.tokens.tokens().count(id) == 0) {
                why << "token " << id << " destroyed";
                return why.str();
            }
        }
        for (const auto& [id, token] : world.tokens.tokens()) {
            if (!ledger.has_account(token.owner)) {
                why << "token " << id << " owned by unknown address " << token.owner;
                return why.str();
            }
        }

        // orders
        u128 escrow_expected = 0;
        for (const auto& [id, order] : world.rental.orders()) {
            if (order.price_per_like == 0 || order.max_duration_s == 0) {
                why << "order " << id << " has non-positive terms";
                return why.str();
            }
            const bool has_agreement = order.agreement.has_value();
            const bool needs_agreement =
                order.state == OrderState::Rented || order.state == OrderState::Completed;
            if (has_agreement != needs_agreement) {
                why << "order " << id << " agreement presence mismatch in state "
                    << to_string(order.state);
                return why.str();
            }
            if (has_agreement) {
                const auto& agreement = *order.agreement;
                if (u128{agreement.deposit}
                    != u128{agreement.max_like_count} * u128{order.price_per_like}) {
                    why << "order " << id << " deposit != max_likes * price";
                    return why.str();
                }
                if (agreement.like_count > agreement.max_like_count) {
                    why << "order " << id << " like_count above max";
                    return why.str();
                }
                if (agreement.duration_s == 0 || agreement.duration_s > order.max_duration_s) {
                    why << "order " << id << " duration outside (0, max]";
                    return why.str();
                }
                Rnt paid_out = 0;
                Rnt refunded = 0;
                if (order.lender_claimed)
                    paid_out = order.settlement->final_rent;
                if (agreement.renter_refunded)
                    refunded = order.settlement->refund;
                escrow_expected += u128{agreement.deposit} - paid_out - refunded;
            }
            if (order.state == OrderState::Completed) {
                if (!order.settlement.has_value()) {
                    why << "order " << id << " completed without settlement";
                    return why.str();
                }
                const auto& settlement = *order.settlement;
                const auto& agreement = *order.agreement;
                if (u128{settlement.final_rent}
                    != u128{agreement.like_count} * u128{order.price_per_like}) {
                    why << "order " << id << " final_rent != likes * price";
                    return why.str();
                }
                if (settlement.final_rent > agreement.deposit
                    || settlement.final_rent + settlement.refund != agreement.deposit) {
                    why << "order " << id << " settlement does not partition the deposit";
                    return why.str();
                }
            } else {
                if (order.settlement.has_value()) {
                    why << "order " << id << " has settlement in state "
                        << to_string(order.state);
                    return why.str();
                }
                if (order.lender_claimed
                    || (has_agreement && order.agreement->renter_refunded)) {
                    why << "order " << id << " claimed outside Completed";
                    return why.str();
                }
            }

            // custody: escrowed until cancel or the lender's claim
            const bool must_hold = order.state == OrderState::Listed
                || order.state == OrderState::Rented
                || (order.state == OrderState::Completed && !order.lender_claimed);
            if (must_hold) {
                const auto owner = world.tokens.owner_of(order.token_id);
                if (!owner.ok() || owner.value() != ledger.contract_address()) {
                    why << "order " << id << " token not in contract custody";
                    return why.str();
                }
            }
        }

        const Account* contract = ledger.find_account(ledger.contract_address());
        if (contract == nullptr || u128{contract->rnt_balance} != escrow_expected) {
            why << "escrow mismatch: contract RNT != sum of unreleased deposits";
            return why.str();
        }

        // state machine safety vs previous snapshot
        for (const auto& [id, snap] : orders_) {
            const LendOrder* order = world.rental.find_order(id);
            if (order == nullptr) {
                why << "order " << id << " disappeared";
                return why.str();
            }
            if (!legal_transition(snap.state, order->state)) {
                why << "order " << id << " illegal transition " << to_string(snap.state)
                    << " -> " << to_string(order->state);
                return why.str();
            }
            if (snap.lender_claimed && !order->lender_claimed) {
                why << "order " << id << " lender claim reverted";
                return why.str();
            }
            const bool refunded_now =
                order->agreement.has_value() && order->agreement->renter_refunded;
            if (snap.renter_refunded && !refunded_now) {
                why << "order " << id << " renter refund reverted";
                return why.str();
            }
            std::uint64_t likes_now = 0;
            if (order->agreement.has_value())
                likes_now = order->agreement->like_count;
            if (likes_now < snap.like_count) {
                why << "order " << id << " like_count decreased";
                return why.str();
            }
            if (likes_now > snap.like_count) {
                // a like landed during this step; it must respect the window
                if (order->state != OrderState::Rented
                    || ledger.now() >= order->agreement->start_time + order->agreement->duration_s) {
                    why << "order " << id << " like accepted outside the rental window";
                    return why.str();
                }
            }
        }

        // log: append-only, dense sequence, monotonic timestamps, scheduled gas
        const auto& log = ledger.tx_log();
        if (log.size() < log_len_) {
            why << "tx log shrunk";
            return why.str();
        }
        for (std::size_t i = 0; i < log.size(); ++i) {
            if (log[i].seq != i) {
                why << "tx log seq not dense at " << i;
                return why.str();
            }
            if (i > 0 && log[i].timestamp < log[i - 1].timestamp) {
                why << "tx log timestamps not monotonic at " << i;
                return why.str();
            }
        }
        if (!log.empty()) {
            const auto& last = log.back();
            const auto units = world.config.schedule.units(last.op_name);
            if (units.ok() && last.gas_used != units.value()) {
                why << "tx " << last.seq << " gas_used differs from schedule";
                return why.str();
            }
        }

        return {};
    }
};

} // namespace

std::optional<FuzzFinding> run_steps_checked(const WorldConfig& config,
    const std::vector<Step>& steps, const ExtraInvariant& extra)
{
    World world(config);
    InvariantChecker checker(world);

    for (std::size_t i = 0; i < steps.size(); ++i) {
        (void)apply_step(world, steps[i]); // errors are ordinary outcomes
        std::string violation = checker.check_and_advance(world);
        if (violation.empty() && extra)
            violation = extra(world);
        if (!violation.empty())
            return FuzzFinding{i, std::move(violation)};
    }
    return std::nullopt;
}

std::vector<Step> shrink_violation(const WorldConfig& config, const std::vector<Step>& steps,
    const ExtraInvariant& extra)
{
    auto reproduces = [&](const std::vector<Step>& candidate) {
        return run_steps_checked(config, candidate, extra).has_value();
    };
    if (!reproduces(steps))
        return {};

    std::vector<Step> current = steps;

    // cut everything after the first failure
    const auto finding = run_steps_checked(config, current, extra);
    current.resize(finding->step_index + 1);

    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t i = current.size(); i-- > 0;) {
            std::vector<Step> candidate = current;
            candidate.erase(candidate.begin() + static_cast<std::ptrdiff_t>(i));
            if (reproduces(candidate)) {
                current = std::move(candidate);
                progress = true;
            }
        }
    }
    return current;
}

FuzzReport run_fuzz(const FuzzOptions& options, const WorldConfig& base)
{
    FuzzReport report;
    for (std::uint64_t sequence = 0; sequence < options.sequences; ++sequence) {
        const std::uint64_t sequence_seed = splitmix64(options.seed + sequence);
        GenOptions gen;
        gen.seed = sequence_seed;
        gen.max_steps = options.max_ops;
        gen.hostility = options.hostility;
        const auto steps = generate_scenario(gen, base);

        report.sequences += 1;
        report.steps_executed += steps.size();

        const auto finding = run_steps_checked(base, steps);
        if (finding.has_value()) {
            FuzzViolation violation;
            violation.sequence = sequence;
            violation.sequence_seed = sequence_seed;
            violation.description = finding->description;
            violation.repro = shrink_violation(base, steps);
            report.violations.push_back(std::move(violation));
        }
    }
    return report;
}

nlohmann::json fuzz_report_to_json(const FuzzReport& report)
{
    nlohmann::json j;
    j["sequences"] = report.sequences;
    j["steps_executed"] = report.steps_executed;
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& violation : report.violations) {
        nlohmann::json v;
        v["sequence"] = violation.sequence;
        v["sequence_seed"] = violation.sequence_seed;
        v["description"] = violation.description;
        nlohmann::json repro = nlohmann::json::array();
        for (const auto& step : violation.repro)
            repro.push_back(step_to_json(step));
        v["repro"] = repro;
        violations.push_back(std::move(v));
    }
    j["violations"] = violations;
    return j;
}

} // namespace rentsim
