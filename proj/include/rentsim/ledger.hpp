// rentsim: deterministic simulator for NFT rental with pay-per-like pricing
// Copyright 2026 The rentsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "rentsim/economics.hpp"
#include "rentsim/result.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace rentsim {

using Address = std::string;

struct Account {
    Address address;
    Wei native_balance = 0;
    Rnt rnt_balance = 0;
};

struct TxRecord {
    std::uint64_t seq = 0;
    Address sender;
    std::string op_name;
    Gas gas_used = 0;     // schedule units for op_name
    Wei fee_paid_wei = 0; // actually deducted; 0 when the fee stage itself failed
    std::uint64_t timestamp = 0;
    Err outcome = Err::None; // None == success
};

// Single-chain world state: address-keyed accounts, a simulated clock that
// only moves via advance_time, and an append-only transaction log. Gas fees
// are burned, never redistributed, so conservation is:
//   sum(native balances) + burned == total native ever minted.
// All amounts are integers; USD never enters the ledger.
class Ledger {
public:
    Ledger(GasSchedule schedule, Wei gas_price_wei, Address contract_address = "contract");

    // --- accounts / funding (world setup; no gas) ---
    Result<void> open_account(const Address& address, Wei native_funding, Rnt rnt_funding);
    Result<void> mint_rnt(const Address& to, Rnt amount);

    bool has_account(const Address& address) const;
    const Account* find_account(const Address& address) const;
    Result<Wei> native_balance_of(const Address& address) const;
    Result<Rnt> rnt_balance_of(const Address& address) const;

    // --- simulated clock ---
    Result<std::uint64_t> advance_time(std::int64_t delta_seconds);
    // Moves the clock forward to `target`; a target in the past is a no-op.
    void advance_to(std::uint64_t target);
    std::uint64_t now() const { return now_; }

    // --- RNT moves (no gas; callers charge at the transaction boundary) ---
    Result<void> move_rnt(const Address& from, const Address& to, Rnt amount);

    // Escrow-side move whose preconditions the caller has already
    // established (both accounts exist, balance suffices). Asserted, not
    // error-checked, so the rental state machine carries no dead branches.
    void escrow_move(const Address& from, const Address& to, Rnt amount);

    // --- gas ---
    // Deducts the fee for `op_name` from `sender`, runs `body`, and appends
    // exactly one TxRecord carrying the body's outcome. A body failure keeps
    // the fee burned; a fee failure (unknown sender, balance below fee) is
    // logged and the body never runs.
    template <typename Fn>
    auto transact(const Address& sender, std::string_view op_name, Fn&& body) -> decltype(body())
    {
        Wei fee_paid = 0;
        const Err fee = charge_fee(sender, op_name, fee_paid);
        if (fee != Err::None) {
            append_record(sender, op_name, fee, 0);
            return fee;
        }
        auto result = body();
        append_record(sender, op_name, result.ok() ? Err::None : result.error(), fee_paid);
        return result;
    }

    // Standalone fee deduction with its own log record (used by tests and by
    // operations without a body, e.g. contract deployment).
    Result<TxRecord> charge_gas(const Address& sender, std::string_view op_name);

    Gas gas_units(std::string_view op_name) const;
    Wei gas_price_wei() const { return gas_price_wei_; }

    // --- inspection ---
    const Address& contract_address() const { return contract_address_; }
    const std::map<Address, Account>& accounts() const { return accounts_; }
    const std::vector<TxRecord>& tx_log() const { return tx_log_; }
    Wei burned_wei() const { return burned_wei_; }
    Wei total_native_minted() const { return total_native_minted_; }
    Rnt total_rnt_minted() const { return total_rnt_minted_; }
    const GasSchedule& schedule() const { return schedule_; }

private:
    Err charge_fee(const Address& sender, std::string_view op_name, Wei& fee_paid);
    void append_record(const Address& sender, std::string_view op_name, Err outcome, Wei fee_paid);

    GasSchedule schedule_;
    Wei gas_price_wei_ = 0;
    Address contract_address_;
    std::map<Address, Account> accounts_;
    std::uint64_t now_ = 0;
    std::vector<TxRecord> tx_log_;
    Wei burned_wei_ = 0;
    Wei total_native_minted_ = 0;
    Rnt total_rnt_minted_ = 0;
};

} // namespace rentsim
