// rentsim: deterministic simulator for NFT rental with pay-per-like pricing
// Copyright 2026 The rentsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "rentsim/ledger.hpp"
#include "rentsim/result.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace rentsim {

struct TokenRecord {
    std::uint64_t token_id = 0;
    Address owner;
    std::string metadata_ref; // opaque, never dereferenced
};

// Non-fungible token registry plus the fungible RNT rail. Each token has
// exactly one owner, always a live ledger address (user account or the
// contract account). RNT balances live in the ledger; this module is the
// user-facing transfer surface for both.
class TokenRegistry {
public:
    explicit TokenRegistry(Ledger& ledger) : ledger_(ledger) {}

    // User transactions; each charges gas to its sender exactly once.
    Result<TokenRecord> mint_nft(const Address& owner, std::uint64_t token_id,
        const std::string& metadata_ref);
    Result<TokenRecord> transfer_nft(const Address& caller, std::uint64_t token_id,
        const Address& to);
    Result<void> transfer_rnt(const Address& from, const Address& to, Rnt amount);

    // Pure queries, no gas.
    Result<Address> owner_of(std::uint64_t token_id) const;
    Result<Rnt> rnt_balance_of(const Address& address) const;

    // Custody move with contract authority: used by the rental contract to
    // escrow and release tokens inside its own transactions. The caller
    // guarantees both the token and the destination account exist.
    void contract_transfer(std::uint64_t token_id, const Address& to);

    const std::map<std::uint64_t, TokenRecord>& tokens() const { return tokens_; }

private:
    Ledger& ledger_;
    std::map<std::uint64_t, TokenRecord> tokens_;
};

} // namespace rentsim
