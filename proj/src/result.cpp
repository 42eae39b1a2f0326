// rentsim: deterministic simulator for NFT rental with pay-per-like pricing
// Copyright 2026 The rentsim Authors.
// SPDX-License-Identifier: Apache-2.0
#include "rentsim/result.hpp"

namespace rentsim {

std::string_view to_string(Err err)
{
    switch (err) {
    case Err::None:
        return "Success";
    case Err::DuplicateAddress:
        return "DuplicateAddress";
    case Err::UnknownAccount:
        return "UnknownAccount";
    case Err::NegativeDelta:
        return "NegativeDelta";
    case Err::InsufficientGasFunds:
        return "InsufficientGasFunds";
    case Err::AmountOverflow:
        return "AmountOverflow";
    case Err::ReservedAddress:
        return "ReservedAddress";
    case Err::DuplicateTokenId:
        return "DuplicateTokenId";
    case Err::UnknownToken:
        return "UnknownToken";
    case Err::NotOwner:
        return "NotOwner";
    case Err::InsufficientRnt:
        return "InsufficientRnt";
    case Err::UnknownOrder:
        return "UnknownOrder";
    case Err::NonPositivePrice:
        return "NonPositivePrice";
    case Err::NonPositiveDuration:
        return "NonPositiveDuration";
    case Err::DurationExceedsMax:
        return "DurationExceedsMax";
    case Err::NonPositiveMaxLikes:
        return "NonPositiveMaxLikes";
    case Err::NonPositiveIncrement:
        return "NonPositiveIncrement";
    case Err::NotLender:
        return "NotLender";
    case Err::NotRenter:
        return "NotRenter";
    case Err::NotExhibitor:
        return "NotExhibitor";
    case Err::WrongState:
        return "WrongState";
    case Err::Expired:
        return "Expired";
    case Err::LikeLimitReached:
        return "LikeLimitReached";
    case Err::AlreadyClaimed:
        return "AlreadyClaimed";
    case Err::SelfRental:
        return "SelfRental";
    case Err::DepositOverflow:
        return "DepositOverflow";
    case Err::LikesExceedMax:
        return "LikesExceedMax";
    case Err::NonMonotonicTimestamp:
        return "NonMonotonicTimestamp";
    case Err::NonPositiveInput:
        return "NonPositiveInput";
    case Err::InvalidCounts:
        return "InvalidCounts";
    case Err::UnknownOp:
        return "UnknownOp";
    case Err::ParseError:
        return "ParseError";
    }
    return "UnknownError";
}

} // namespace rentsim
