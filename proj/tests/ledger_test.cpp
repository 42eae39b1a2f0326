// rentsim: deterministic simulator for NFT rental with pay-per-like pricing
// Copyright 2026 The rentsim Authors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rentsim/ledger.hpp"

#include <random>

using namespace rentsim;

namespace {

constexpr Wei kGasPriceWei = 7'000'000'000ull; // 7 gwei
constexpr Wei kOneEth = 1'000'000'000'000'000'000ull;

Ledger make_ledger()
{
    return Ledger(default_gas_schedule(), kGasPriceWei);
}

} // namespace

TEST_CASE("open_account creates funded accounts")
{
    auto ledger = make_ledger();
    REQUIRE(ledger.open_account("alice", kOneEth, 1000).ok());

    const Account* alice = ledger.find_account("alice");
    REQUIRE(alice != nullptr);
    CHECK(alice->native_balance == kOneEth);
    CHECK(alice->rnt_balance == 1000);
    CHECK(ledger.total_native_minted() == kOneEth);
    CHECK(ledger.total_rnt_minted() == 1000);
}

TEST_CASE("open_account rejects duplicate addresses")
{
    auto ledger = make_ledger();
    REQUIRE(ledger.open_account("alice", 1, 1).ok());
    auto second = ledger.open_account("alice", 2, 2);
    REQUIRE(!second.ok());
    CHECK(second.error() == Err::DuplicateAddress);
    CHECK(ledger.find_account("alice")->native_balance == 1);
}

TEST_CASE("zero-funded account exists but cannot pay for anything")
{
    auto ledger = make_ledger();
    REQUIRE(ledger.open_account("bob", 0, 0).ok());
    CHECK(ledger.native_balance_of("bob").value() == 0);
    CHECK(ledger.rnt_balance_of("bob").value() == 0);

    auto charged = ledger.charge_gas("bob", ops::increase_count);
    REQUIRE(!charged.ok());
    CHECK(charged.error() == Err::InsufficientGasFunds);
}

TEST_CASE("contract account exists from genesis and is reserved")
{
    auto ledger = make_ledger();
    CHECK(ledger.has_account("contract"));
    CHECK(ledger.open_account("contract", 1, 1).error() == Err::DuplicateAddress);
    CHECK(ledger.mint_rnt("contract", 5).error() == Err::ReservedAddress);
    CHECK(ledger.charge_gas("contract", ops::rent).error() == Err::ReservedAddress);
}

TEST_CASE("advance_time moves the clock forward only")
{
    auto ledger = make_ledger();
    CHECK(ledger.advance_time(86'400).value() == 86'400);

    SUBCASE("zero delta is identity")
    {
        CHECK(ledger.advance_time(0).value() == 86'400);
        CHECK(ledger.now() == 86'400);
    }
    SUBCASE("negative delta is rejected")
    {
        auto r = ledger.advance_time(-1);
        REQUIRE(!r.ok());
        CHECK(r.error() == Err::NegativeDelta);
        CHECK(ledger.now() == 86'400);
    }
    SUBCASE("advance_to never goes backwards")
    {
        ledger.advance_to(100);
        CHECK(ledger.now() == 86'400);
        ledger.advance_to(90'000);
        CHECK(ledger.now() == 90'000);
    }
}

TEST_CASE("charge_gas deducts gas_units * gas_price and burns the fee")
{
    auto ledger = make_ledger();
    REQUIRE(ledger.open_account("exhibitor", kOneEth, 0).ok());

    auto record = ledger.charge_gas("exhibitor", ops::increase_count);
    REQUIRE(record.ok());
    // 40,236 gas at 7 gwei
    const Wei expected_fee = 40'236ull * kGasPriceWei;
    CHECK(expected_fee == 281'652'000'000'000ull);
    CHECK(record.value().gas_used == 40'236);
    CHECK(record.value().fee_paid_wei == expected_fee);
    CHECK(ledger.native_balance_of("exhibitor").value() == kOneEth - expected_fee);
    CHECK(ledger.burned_wei() == expected_fee);
}

TEST_CASE("zero gas_used leaves the balance unchanged")
{
    GasSchedule schedule;
    schedule.set("noop", 0);
    Ledger ledger(schedule, kGasPriceWei);
    REQUIRE(ledger.open_account("alice", 500, 0).ok());

    auto record = ledger.charge_gas("alice", "noop");
    REQUIRE(record.ok());
    CHECK(record.value().fee_paid_wei == 0);
    CHECK(ledger.native_balance_of("alice").value() == 500);
}

TEST_CASE("insufficient balance leaves only the failure in the log")
{
    auto ledger = make_ledger();
    REQUIRE(ledger.open_account("poor", 10, 0).ok());

    auto record = ledger.charge_gas("poor", ops::rent);
    REQUIRE(!record.ok());
    CHECK(record.error() == Err::InsufficientGasFunds);
    CHECK(ledger.native_balance_of("poor").value() == 10);
    CHECK(ledger.burned_wei() == 0);
    REQUIRE(ledger.tx_log().size() == 1);
    CHECK(ledger.tx_log()[0].outcome == Err::InsufficientGasFunds);
    CHECK(ledger.tx_log()[0].fee_paid_wei == 0);
}

TEST_CASE("unknown sender is logged without any deduction")
{
    auto ledger = make_ledger();
    auto record = ledger.charge_gas("nobody", ops::rent);
    REQUIRE(!record.ok());
    CHECK(record.error() == Err::UnknownAccount);
    CHECK(ledger.burned_wei() == 0);
    CHECK(ledger.tx_log().size() == 1);
}

TEST_CASE("transact charges gas even when the body fails")
{
    auto ledger = make_ledger();
    REQUIRE(ledger.open_account("alice", kOneEth, 0).ok());

    auto result = ledger.transact("alice", ops::rent, []() -> Result<void> {
        return Err::WrongState;
    });
    REQUIRE(!result.ok());
    CHECK(result.error() == Err::WrongState);

    const Wei fee = ledger.gas_units(ops::rent) * kGasPriceWei;
    CHECK(ledger.native_balance_of("alice").value() == kOneEth - fee);
    REQUIRE(ledger.tx_log().size() == 1);
    CHECK(ledger.tx_log()[0].outcome == Err::WrongState);
    CHECK(ledger.tx_log()[0].fee_paid_wei == fee);
}

TEST_CASE("ops without a schedule entry are rejected before any state change")
{
    auto ledger = make_ledger();
    REQUIRE(ledger.open_account("alice", kOneEth, 0).ok());
    auto result = ledger.charge_gas("alice", "not_an_op");
    REQUIRE(!result.ok());
    CHECK(result.error() == Err::UnknownOp);
    CHECK(ledger.native_balance_of("alice").value() == kOneEth);
}

TEST_CASE("move_rnt keeps totals and rejects overdrafts")
{
    auto ledger = make_ledger();
    REQUIRE(ledger.open_account("alice", 0, 1000).ok());
    REQUIRE(ledger.open_account("bob", 0, 0).ok());

    REQUIRE(ledger.move_rnt("alice", "bob", 200).ok());
    CHECK(ledger.rnt_balance_of("alice").value() == 800);
    CHECK(ledger.rnt_balance_of("bob").value() == 200);

    CHECK(ledger.move_rnt("alice", "bob", 0).ok()); // identity
    CHECK(ledger.rnt_balance_of("alice").value() == 800);

    auto too_much = ledger.move_rnt("alice", "bob", 801);
    REQUIRE(!too_much.ok());
    CHECK(too_much.error() == Err::InsufficientRnt);

    CHECK(ledger.move_rnt("ghost", "bob", 1).error() == Err::UnknownAccount);
    CHECK(ledger.move_rnt("alice", "ghost", 1).error() == Err::UnknownAccount);
    CHECK(ledger.total_rnt_minted() == 1000);
}

TEST_CASE("funding overflow of the mint totals is rejected")
{
    auto ledger = make_ledger();
    const Wei huge = std::numeric_limits<Wei>::max() - 10;
    REQUIRE(ledger.open_account("whale", huge, 0).ok());
    auto more = ledger.open_account("minnow", 100, 0);
    REQUIRE(!more.ok());
    CHECK(more.error() == Err::AmountOverflow);
    CHECK(!ledger.has_account("minnow"));

    REQUIRE(ledger.open_account("zero", 0, std::numeric_limits<Rnt>::max()).ok());
    CHECK(ledger.mint_rnt("zero", 1).error() == Err::AmountOverflow);
}

TEST_CASE("property: native conservation holds under random charges")
{
    std::mt19937_64 rng(20'260'809);
    for (int round = 0; round < 25; ++round) {
        auto ledger = make_ledger();
        std::vector<Address> names;
        const int n_accounts = 2 + static_cast<int>(rng() % 4);
        unsigned __int128 minted = 0;
        for (int i = 0; i < n_accounts; ++i) {
            Address name = "acct" + std::to_string(i);
            const Wei funding = rng() % kOneEth;
            REQUIRE(ledger.open_account(name, funding, rng() % 10'000).ok());
            minted += funding;
            names.push_back(std::move(name));
        }

        const char* op_names[] = {"rent", "increase_count", "claim_refunds", "stop_rent"};
        for (int i = 0; i < 60; ++i) {
            const auto& sender = names[rng() % names.size()];
            (void)ledger.charge_gas(sender, op_names[rng() % 4]);
        }

        unsigned __int128 balances = 0;
        for (const auto& [address, account] : ledger.accounts())
            balances += account.native_balance;
        CHECK(balances + ledger.burned_wei() == minted);
        CHECK(minted == static_cast<unsigned __int128>(ledger.total_native_minted()));

        // log invariants: dense sequence, monotonic timestamps
        const auto& log = ledger.tx_log();
        for (std::size_t i = 0; i < log.size(); ++i) {
            CHECK(log[i].seq == i);
            if (i > 0)
                CHECK(log[i].timestamp >= log[i - 1].timestamp);
        }
    }
}

TEST_CASE("timestamps in the log follow the simulated clock")
{
    auto ledger = make_ledger();
    REQUIRE(ledger.open_account("alice", kOneEth, 0).ok());
    (void)ledger.charge_gas("alice", ops::rent);
    REQUIRE(ledger.advance_time(500).ok());
    (void)ledger.charge_gas("alice", ops::rent);

    REQUIRE(ledger.tx_log().size() == 2);
    CHECK(ledger.tx_log()[0].timestamp == 0);
    CHECK(ledger.tx_log()[1].timestamp == 500);
}

TEST_CASE("deployment charge matches the calibrated deploy gas")
{
    auto ledger = make_ledger();
    REQUIRE(ledger.open_account("deployer", kOneEth, 0).ok());
    auto record = ledger.charge_gas("deployer", ops::deploy);
    REQUIRE(record.ok());
    CHECK(record.value().gas_used == 2'510'746);
    CHECK(record.value().fee_paid_wei == 2'510'746ull * kGasPriceWei);
}
