// rentsim: deterministic simulator for NFT rental with pay-per-like pricing
// Copyright 2026 The rentsim Authors.
// SPDX-License-Identifier: Apache-2.0
#include "rentsim/rental.hpp"

#include <limits>

namespace rentsim {

std::string_view to_string(OrderState state)
{
    switch (state) {
    case OrderState::Listed:
        return "Listed";
    case OrderState::Rented:
        return "Rented";
    case OrderState::Completed:
        return "Completed";
    case OrderState::Cancelled:
        return "Cancelled";
    }
    return "Unknown";
}

std::uint64_t LendOrder::end_time() const
{
    return agreement->start_time + agreement->duration_s;
}

LendOrder* RentalContract::mutable_order(std::uint64_t order_id)
{
    auto it = orders_.find(order_id);
    if (it == orders_.end())
        return nullptr;
    return &it->second;
}

const LendOrder* RentalContract::find_order(std::uint64_t order_id) const
{
    auto it = orders_.find(order_id);
    if (it == orders_.end())
        return nullptr;
    return &it->second;
}

void RentalContract::freeze_settlement(LendOrder& order)
{
    Settlement s;
    s.final_rent = order.agreement->like_count * order.price_per_like;
    s.refund = order.agreement->deposit - s.final_rent;
    order.settlement = s;
}

bool RentalContract::expire_if_due(LendOrder& order)
{
    if (order.state != OrderState::Rented)
        return false;
    std::uint64_t end = 0;
    if (__builtin_add_overflow(order.agreement->start_time, order.agreement->duration_s, &end))
        return false; // end time beyond the clock's range; cannot expire
    if (ledger_.now() < end)
        return false;
    order.state = OrderState::Completed;
    freeze_settlement(order);
    return true;
}

Result<std::uint64_t> RentalContract::create_lend_order(const Address& lender,
    std::uint64_t token_id, Rnt price_per_like, std::uint64_t max_days)
{
    return ledger_.transact(lender, ops::create_lend_order, [&]() -> Result<std::uint64_t> {
        const auto owner = tokens_.owner_of(token_id);
        if (!owner)
            return owner.error();
        if (owner.value() != lender)
            return Err::NotOwner;
        if (price_per_like == 0)
            return Err::NonPositivePrice;
        if (max_days == 0)
            return Err::NonPositiveDuration;
        if (max_days > std::numeric_limits<std::uint64_t>::max() / seconds_per_day)
            return Err::AmountOverflow;

        tokens_.contract_transfer(token_id, ledger_.contract_address());

        LendOrder order;
        order.order_id = next_order_id_++;
        order.token_id = token_id;
        order.lender = lender;
        order.price_per_like = price_per_like;
        order.max_duration_s = max_days * seconds_per_day;
        orders_[order.order_id] = order;
        return order.order_id;
    });
}

Result<void> RentalContract::stop_lend_order(const Address& lender, std::uint64_t order_id)
{
    return ledger_.transact(lender, ops::stop_lend_order, [&]() -> Result<void> {
        LendOrder* order = mutable_order(order_id);
        if (order == nullptr)
            return Err::UnknownOrder;
        expire_if_due(*order);
        if (order->state != OrderState::Listed)
            return Err::WrongState;
        if (order->lender != lender)
            return Err::NotLender;

        tokens_.contract_transfer(order->token_id, order->lender);
        order->state = OrderState::Cancelled;
        return {};
    });
}

Result<void> RentalContract::rent(const Address& renter, std::uint64_t order_id,
    std::uint64_t days, std::uint64_t max_like_count)
{
    return ledger_.transact(renter, ops::rent, [&]() -> Result<void> {
        LendOrder* order = mutable_order(order_id);
        if (order == nullptr)
            return Err::UnknownOrder;
        expire_if_due(*order);
        if (order->state != OrderState::Listed)
            return Err::WrongState;
        if (days == 0)
            return Err::NonPositiveDuration;
        if (days > std::numeric_limits<std::uint64_t>::max() / seconds_per_day)
            return Err::DurationExceedsMax;
        const std::uint64_t duration = days * seconds_per_day;
        if (duration > order->max_duration_s)
            return Err::DurationExceedsMax;
        if (max_like_count == 0)
            return Err::NonPositiveMaxLikes;
        if (renter == order->lender)
            return Err::SelfRental;
        Rnt deposit = 0;
        if (__builtin_mul_overflow(max_like_count, order->price_per_like, &deposit))
            return Err::DepositOverflow;
        const Account* acct = ledger_.find_account(renter);
        if (acct->rnt_balance < deposit)
            return Err::InsufficientRnt;

        ledger_.escrow_move(renter, ledger_.contract_address(), deposit);

        RentAgreement agreement;
        agreement.renter = renter;
        agreement.duration_s = duration;
        agreement.max_like_count = max_like_count;
        agreement.deposit = deposit;
        agreement.start_time = ledger_.now();
        order->agreement = agreement;
        order->state = OrderState::Rented;
        return {};
    });
}

Result<std::uint64_t> RentalContract::increase_count(const Address& caller,
    std::uint64_t order_id, std::uint64_t increment)
{
    return ledger_.transact(caller, ops::increase_count, [&]() -> Result<std::uint64_t> {
        LendOrder* order = mutable_order(order_id);
        if (order == nullptr)
            return Err::UnknownOrder;
        const bool just_expired = expire_if_due(*order);
        if (caller != exhibitor_)
            return Err::NotExhibitor;
        if (order->state != OrderState::Rented) {
            if (just_expired)
                return Err::Expired;
            return Err::WrongState;
        }
        if (increment == 0)
            return Err::NonPositiveIncrement;
        RentAgreement& agreement = *order->agreement;
        if (increment > agreement.max_like_count - agreement.like_count)
            return Err::LikeLimitReached;

        agreement.like_count += increment;
        return agreement.like_count;
    });
}

Result<Settlement> RentalContract::stop_rent(const Address& renter, std::uint64_t order_id)
{
    return ledger_.transact(renter, ops::stop_rent, [&]() -> Result<Settlement> {
        LendOrder* order = mutable_order(order_id);
        if (order == nullptr)
            return Err::UnknownOrder;
        expire_if_due(*order);
        if (order->state != OrderState::Rented)
            return Err::WrongState;
        if (order->agreement->renter != renter)
            return Err::NotRenter;

        order->state = OrderState::Completed;
        freeze_settlement(*order);
        return *order->settlement;
    });
}

Result<OrderState> RentalContract::observe_expiry(std::uint64_t order_id)
{
    LendOrder* order = mutable_order(order_id);
    if (order == nullptr)
        return Err::UnknownOrder;
    expire_if_due(*order);
    return order->state;
}

Result<Settlement> RentalContract::claim_nft_and_funds(const Address& lender,
    std::uint64_t order_id)
{
    return ledger_.transact(lender, ops::claim_nft_and_funds, [&]() -> Result<Settlement> {
        LendOrder* order = mutable_order(order_id);
        if (order == nullptr)
            return Err::UnknownOrder;
        expire_if_due(*order);
        if (order->state != OrderState::Completed)
            return Err::WrongState;
        if (order->lender != lender)
            return Err::NotLender;
        if (order->lender_claimed)
            return Err::AlreadyClaimed;

        tokens_.contract_transfer(order->token_id, order->lender);
        ledger_.escrow_move(ledger_.contract_address(), order->lender, order->settlement->final_rent);
        order->lender_claimed = true;
        return *order->settlement;
    });
}

Result<Rnt> RentalContract::claim_refunds(const Address& renter, std::uint64_t order_id)
{
    return ledger_.transact(renter, ops::claim_refunds, [&]() -> Result<Rnt> {
        LendOrder* order = mutable_order(order_id);
        if (order == nullptr)
            return Err::UnknownOrder;
        expire_if_due(*order);
        if (order->state != OrderState::Completed)
            return Err::WrongState;
        if (order->agreement->renter != renter)
            return Err::NotRenter;
        if (order->agreement->renter_refunded)
            return Err::AlreadyClaimed;

        ledger_.escrow_move(ledger_.contract_address(), renter, order->settlement->refund);
        order->agreement->renter_refunded = true;
        return order->settlement->refund;
    });
}

Result<Settlement> RentalContract::settlement_amounts(std::uint64_t like_count,
    std::uint64_t max_like_count, Rnt price_per_like)
{
    if (like_count > max_like_count)
        return Err::LikesExceedMax;
    Rnt deposit = 0;
    if (__builtin_mul_overflow(max_like_count, price_per_like, &deposit))
        return Err::DepositOverflow;

    Settlement s;
    s.final_rent = like_count * price_per_like;
    s.refund = deposit - s.final_rent;
    return s;
}

} // namespace rentsim
