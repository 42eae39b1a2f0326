// rentsim: deterministic simulator for NFT rental with pay-per-like pricing
// Copyright 2026 The rentsim Authors.
// SPDX-License-Identifier: Apache-2.0
#include "rentsim/scenario_gen.hpp"

#include <limits>
#include <random>

namespace rentsim {

namespace {

constexpr Wei kAccountFunding = 1'000'000'000'000'000'000ull; // 1e18 wei
constexpr Rnt kRntFunding = 100'000;

} // namespace

std::vector<Step> generate_scenario(const GenOptions& options, const WorldConfig& config)
{
    std::mt19937_64 rng(options.seed);
    auto chance = [&](double p) {
        return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
    };
    auto range = [&](std::uint64_t lo, std::uint64_t hi) {
        return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
    };

    std::vector<Step> out;
    const double hostility = options.hostility;

    std::vector<Address> pool = {"alice", "bob", "carol", "dave"};
    pool.resize(2 + range(0, 2));

    auto pick_account = [&]() -> Address {
        if (chance(hostility * 0.3))
            return "ghost"; // never opened
        if (chance(hostility * 0.1))
            return config.contract_address;
        return pool[range(0, pool.size() - 1)];
    };

    // setup: exhibitor + users + tokens
    out.push_back(steps::open_account(config.exhibitor_address, kAccountFunding, 0));
    for (const auto& name : pool) {
        // one occasionally broke account keeps the insufficient-funds paths warm
        const Rnt rnt = chance(0.15) ? range(0, 20) : kRntFunding;
        out.push_back(steps::open_account(name, kAccountFunding, rnt));
    }

    const std::uint64_t n_tokens = range(1, 4);
    for (std::uint64_t token = 1; token <= n_tokens; ++token)
        out.push_back(steps::mint_nft(pool[range(0, pool.size() - 1)], token,
            "ipfs://art/" + std::to_string(token)));

    auto pick_token = [&]() -> std::uint64_t {
        if (chance(hostility * 0.4))
            return 90 + range(0, 9); // unknown token
        return range(1, n_tokens);
    };

    std::uint64_t lend_attempts = 0;
    auto pick_order = [&]() -> std::uint64_t {
        if (lend_attempts == 0 || chance(hostility * 0.3))
            return 40 + range(0, 9); // unknown order
        return range(0, lend_attempts - 1);
    };

    std::uint64_t t_cursor = 0;
    std::uint64_t click_user = 0;

    while (out.size() < options.max_steps) {
        const auto roll = range(0, 99);

        if (roll >= 30 && roll < 32) { // direct counter transaction
            Address caller = config.exhibitor_address;
            if (chance(0.5))
                caller = pick_account(); // unauthorized probe
            out.push_back(steps::increase(caller, pick_order(), range(0, 3)));
        } else if (roll < 32) { // click
            Step click;
            std::string user;
            if (chance(0.2))
                user = "bot";
            else if (chance(0.35))
                user = "u" + std::to_string(range(0, 3)); // small pool: duplicates likely
            else
                user = "u" + std::to_string(click_user++);
            std::uint64_t t = t_cursor + range(0, 30);
            if (chance(hostility * 0.2) && t_cursor > 100)
                t = t_cursor - 100; // non-monotonic probe
            else
                t_cursor = t;
            const bool auth = !chance(0.15);
            out.push_back(steps::click(user, pick_order(), t, auth));
        } else if (roll < 44) { // rent
            std::uint64_t days = range(1, 4);
            std::uint64_t max_likes = range(1, 60);
            if (chance(hostility * 0.3))
                days = 0;
            if (chance(hostility * 0.3))
                max_likes = 0;
            if (chance(hostility * 0.2)) {
                // deposit = max_likes * price overflows for price >= 3 and
                // drains any balance otherwise
                max_likes = std::numeric_limits<std::uint64_t>::max() / 2;
            }
            out.push_back(steps::rent(pick_account(), pick_order(), days, max_likes));
        } else if (roll < 56) { // lend
            Rnt price = range(1, 5);
            std::uint64_t max_days = range(1, 5);
            if (chance(hostility * 0.3))
                price = 0;
            if (chance(hostility * 0.3))
                max_days = 0;
            out.push_back(steps::lend(pick_account(), pick_token(), price, max_days));
            ++lend_attempts;
        } else if (roll < 64) { // advance time
            std::int64_t delta = static_cast<std::int64_t>(range(0, 2 * 86'400));
            if (chance(hostility * 0.2))
                delta = -static_cast<std::int64_t>(range(1, 100));
            out.push_back(steps::advance_time(delta));
            if (delta > 0)
                t_cursor += static_cast<std::uint64_t>(delta);
        } else if (roll < 72) { // stop rent
            out.push_back(steps::stop_rent(pick_account(), pick_order()));
        } else if (roll < 80) { // claim lender
            out.push_back(steps::claim_lender(pick_account(), pick_order()));
        } else if (roll < 88) { // claim renter
            out.push_back(steps::claim_renter(pick_account(), pick_order()));
        } else if (roll < 92) { // flush
            out.push_back(steps::flush(pick_order()));
        } else if (roll < 96) { // stop lend
            out.push_back(steps::stop_lend(pick_account(), pick_order()));
        } else if (roll < 98) { // transfers
            if (chance(0.5))
                out.push_back(steps::transfer_nft(pick_account(), pick_account(), pick_token()));
            else
                out.push_back(steps::transfer_rnt(pick_account(), pick_account(), range(0, 500)));
        } else { // late minting
            if (chance(0.5))
                out.push_back(steps::mint_nft(pick_account(), 10 + range(0, 20), "late"));
            else
                out.push_back(steps::mint_rnt(pick_account(), range(0, 1'000)));
        }
    }
    return out;
}

} // namespace rentsim
