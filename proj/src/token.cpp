// rentsim: deterministic simulator for NFT rental with pay-per-like pricing
// Copyright 2026 The rentsim Authors.
// SPDX-License-Identifier: Apache-2.0
#include "rentsim/token.hpp"

#include <cassert>

namespace rentsim {

Result<TokenRecord> TokenRegistry::mint_nft(const Address& owner, std::uint64_t token_id,
    const std::string& metadata_ref)
{
    return ledger_.transact(owner, ops::mint_nft, [&]() -> Result<TokenRecord> {
        if (owner == ledger_.contract_address())
            return Err::ReservedAddress;
        if (tokens_.count(token_id) != 0)
            return Err::DuplicateTokenId;
        TokenRecord record{token_id, owner, metadata_ref};
        tokens_[token_id] = record;
        return record;
    });
}

Result<TokenRecord> TokenRegistry::transfer_nft(const Address& caller, std::uint64_t token_id,
    const Address& to)
{
    return ledger_.transact(caller, ops::transfer_nft, [&]() -> Result<TokenRecord> {
        auto it = tokens_.find(token_id);
        if (it == tokens_.end())
            return Err::UnknownToken;
        if (it->second.owner != caller)
            return Err::NotOwner;
        // Direct transfers into the contract account would strand the token
        // outside any order; escrow happens only through create_lend_order.
        if (to == ledger_.contract_address())
            return Err::ReservedAddress;
        if (!ledger_.has_account(to))
            return Err::UnknownAccount;
        it->second.owner = to;
        return it->second;
    });
}

Result<void> TokenRegistry::transfer_rnt(const Address& from, const Address& to, Rnt amount)
{
    return ledger_.transact(from, ops::transfer_rnt, [&]() -> Result<void> {
        if (to == ledger_.contract_address())
            return Err::ReservedAddress;
        return ledger_.move_rnt(from, to, amount);
    });
}

Result<Address> TokenRegistry::owner_of(std::uint64_t token_id) const
{
    auto it = tokens_.find(token_id);
    if (it == tokens_.end())
        return Err::UnknownToken;
    return it->second.owner;
}

Result<Rnt> TokenRegistry::rnt_balance_of(const Address& address) const
{
    return ledger_.rnt_balance_of(address);
}

void TokenRegistry::contract_transfer(std::uint64_t token_id, const Address& to)
{
    auto it = tokens_.find(token_id);
    assert(it != tokens_.end());
    assert(ledger_.has_account(to));
    it->second.owner = to;
}

} // namespace rentsim
