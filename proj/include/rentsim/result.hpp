// rentsim: deterministic simulator for NFT rental with pay-per-like pricing
// Copyright 2026 The rentsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cassert>
#include <optional>
#include <string_view>

namespace rentsim {

// Every failure the simulator can produce. Values are stable identifiers:
// they appear verbatim in transaction logs, run reports, and test fixtures.
enum class Err {
    None = 0,

    // ledger
    DuplicateAddress,
    UnknownAccount,
    NegativeDelta,
    InsufficientGasFunds,
    AmountOverflow,
    ReservedAddress,

    // token
    DuplicateTokenId,
    UnknownToken,
    NotOwner,
    InsufficientRnt,

    // rental
    UnknownOrder,
    NonPositivePrice,
    NonPositiveDuration,
    DurationExceedsMax,
    NonPositiveMaxLikes,
    NonPositiveIncrement,
    NotLender,
    NotRenter,
    NotExhibitor,
    WrongState,
    Expired,
    LikeLimitReached,
    AlreadyClaimed,
    SelfRental,
    DepositOverflow,
    LikesExceedMax,

    // exhibitor
    NonMonotonicTimestamp,

    // economics / config
    NonPositiveInput,
    InvalidCounts,
    UnknownOp,
    ParseError,
};

std::string_view to_string(Err err);

// Minimal expected-like carrier. Operations either yield a value or a named
// error; errors are ordinary data (the harness logs them and moves on).
template <typename T>
class [[nodiscard]] Result {
public:
    Result(T value) : value_(std::move(value)) {}
    Result(Err err) : err_(err) { assert(err != Err::None); }

    bool ok() const { return err_ == Err::None; }
    explicit operator bool() const { return ok(); }

    Err error() const { return err_; }

    const T& value() const& {
        assert(ok());
        return *value_;
    }
    T& value() & {
        assert(ok());
        return *value_;
    }
    T&& value() && {
        assert(ok());
        return std::move(*value_);
    }

private:
    std::optional<T> value_{};
    Err err_ = Err::None;
};

template <>
class [[nodiscard]] Result<void> {
public:
    Result() = default;
    Result(Err err) : err_(err) { assert(err != Err::None); }

    bool ok() const { return err_ == Err::None; }
    explicit operator bool() const { return ok(); }

    Err error() const { return err_; }

private:
    Err err_ = Err::None;
};

} // namespace rentsim
