// rentsim: deterministic simulator for NFT rental with pay-per-like pricing
// Copyright 2026 The rentsim Authors.
// SPDX-License-Identifier: Apache-2.0
#include "rentsim/ledger.hpp"

#include <cassert>
#include <limits>

namespace rentsim {

Ledger::Ledger(GasSchedule schedule, Wei gas_price_wei, Address contract_address)
    : schedule_(std::move(schedule))
    , gas_price_wei_(gas_price_wei)
    , contract_address_(std::move(contract_address))
{
    // The contract account exists from genesis; it holds escrowed NFTs and
    // RNT and never sends transactions of its own.
    accounts_[contract_address_] = Account{contract_address_, 0, 0};
}

Result<void> Ledger::open_account(const Address& address, Wei native_funding, Rnt rnt_funding)
{
    if (accounts_.count(address) != 0)
        return Err::DuplicateAddress;

    if (native_funding > std::numeric_limits<Wei>::max() - total_native_minted_)
        return Err::AmountOverflow;
    if (rnt_funding > std::numeric_limits<Rnt>::max() - total_rnt_minted_)
        return Err::AmountOverflow;

    accounts_[address] = Account{address, native_funding, rnt_funding};
    total_native_minted_ += native_funding;
    total_rnt_minted_ += rnt_funding;
    return {};
}

Result<void> Ledger::mint_rnt(const Address& to, Rnt amount)
{
    if (to == contract_address_)
        return Err::ReservedAddress;
    auto it = accounts_.find(to);
    if (it == accounts_.end())
        return Err::UnknownAccount;
    if (amount > std::numeric_limits<Rnt>::max() - total_rnt_minted_)
        return Err::AmountOverflow;

    it->second.rnt_balance += amount;
    total_rnt_minted_ += amount;
    return {};
}

bool Ledger::has_account(const Address& address) const
{
    return accounts_.count(address) != 0;
}

const Account* Ledger::find_account(const Address& address) const
{
    auto it = accounts_.find(address);
    return it == accounts_.end() ? nullptr : &it->second;
}

Result<Wei> Ledger::native_balance_of(const Address& address) const
{
    const Account* acct = find_account(address);
    if (acct == nullptr)
        return Err::UnknownAccount;
    return acct->native_balance;
}

Result<Rnt> Ledger::rnt_balance_of(const Address& address) const
{
    const Account* acct = find_account(address);
    if (acct == nullptr)
        return Err::UnknownAccount;
    return acct->rnt_balance;
}

Result<std::uint64_t> Ledger::advance_time(std::int64_t delta_seconds)
{
    if (delta_seconds < 0)
        return Err::NegativeDelta;
    const auto delta = static_cast<std::uint64_t>(delta_seconds);
    if (delta > std::numeric_limits<std::uint64_t>::max() - now_)
        return Err::AmountOverflow;
    now_ += delta;
    return now_;
}

void Ledger::advance_to(std::uint64_t target)
{
    if (target > now_)
        now_ = target;
}

Result<void> Ledger::move_rnt(const Address& from, const Address& to, Rnt amount)
{
    auto from_it = accounts_.find(from);
    if (from_it == accounts_.end())
        return Err::UnknownAccount;
    auto to_it = accounts_.find(to);
    if (to_it == accounts_.end())
        return Err::UnknownAccount;
    if (from_it->second.rnt_balance < amount)
        return Err::InsufficientRnt;

    from_it->second.rnt_balance -= amount;
    to_it->second.rnt_balance += amount;
    return {};
}

void Ledger::escrow_move(const Address& from, const Address& to, Rnt amount)
{
    auto from_it = accounts_.find(from);
    auto to_it = accounts_.find(to);
    assert(from_it != accounts_.end() && to_it != accounts_.end());
    assert(from_it->second.rnt_balance >= amount);
    from_it->second.rnt_balance -= amount;
    to_it->second.rnt_balance += amount;
}

Err Ledger::charge_fee(const Address& sender, std::string_view op_name, Wei& fee_paid)
{
    const auto units = schedule_.units(op_name);
    if (!units)
        return Err::UnknownOp;
    if (sender == contract_address_)
        return Err::ReservedAddress; // the escrow account never originates transactions
    auto it = accounts_.find(sender);
    if (it == accounts_.end())
        return Err::UnknownAccount;

    Wei fee = 0;
    if (__builtin_mul_overflow(units.value(), gas_price_wei_, &fee))
        return Err::AmountOverflow;
    if (it->second.native_balance < fee)
        return Err::InsufficientGasFunds;

    it->second.native_balance -= fee;
    burned_wei_ += fee;
    fee_paid = fee;
    return Err::None;
}

void Ledger::append_record(const Address& sender, std::string_view op_name, Err outcome, Wei fee_paid)
{
    TxRecord record;
    record.seq = tx_log_.size();
    record.sender = sender;
    record.op_name = std::string(op_name);
    record.gas_used = gas_units(op_name);
    record.fee_paid_wei = fee_paid;
    record.timestamp = now_;
    record.outcome = outcome;
    tx_log_.push_back(std::move(record));
}

Result<TxRecord> Ledger::charge_gas(const Address& sender, std::string_view op_name)
{
    Wei fee_paid = 0;
    const Err fee = charge_fee(sender, op_name, fee_paid);
    append_record(sender, op_name, fee, fee_paid);
    if (fee != Err::None)
        return fee;
    return tx_log_.back();
}

Gas Ledger::gas_units(std::string_view op_name) const
{
    const auto units = schedule_.units(op_name);
    return units ? units.value() : 0;
}

} // namespace rentsim
