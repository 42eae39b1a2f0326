// rentsim: deterministic simulator for NFT rental with pay-per-like pricing
// Copyright 2026 The rentsim Authors.
// SPDX-License-Identifier: Apache-2.0
#include "rentsim/scenario.hpp"

#include <fstream>
#include <sstream>

namespace rentsim {

std::string_view to_string(StepKind kind)
{
    switch (kind) {
    case StepKind::OpenAccount:
        return "open_account";
    case StepKind::MintNft:
        return "mint_nft";
    case StepKind::MintRnt:
        return "mint_rnt";
    case StepKind::TransferNft:
        return "transfer_nft";
    case StepKind::TransferRnt:
        return "transfer_rnt";
    case StepKind::Lend:
        return "lend";
    case StepKind::StopLend:
        return "stop_lend";
    case StepKind::Rent:
        return "rent";
    case StepKind::Click:
        return "click";
    case StepKind::Increase:
        return "increase_count";
    case StepKind::Flush:
        return "flush";
    case StepKind::StopRent:
        return "stop_rent";
    case StepKind::ClaimLender:
        return "claim_lender";
    case StepKind::ClaimRenter:
        return "claim_renter";
    case StepKind::AdvanceTime:
        return "advance_time";
    }
    return "unknown";
}

namespace {

bool get_string(const nlohmann::json& j, const char* key, std::string& out, bool required = true)
{
    if (!j.contains(key))
        return !required;
    if (!j[key].is_string())
        return false;
    out = j[key].get<std::string>();
    return true;
}

bool get_u64(const nlohmann::json& j, const char* key, std::uint64_t& out, bool required = true)
{
    if (!j.contains(key))
        return !required;
    if (!j[key].is_number_unsigned())
        return false;
    out = j[key].get<std::uint64_t>();
    return true;
}

bool get_i64(const nlohmann::json& j, const char* key, std::int64_t& out)
{
    if (!j.contains(key) || !j[key].is_number_integer())
        return false;
    out = j[key].get<std::int64_t>();
    return true;
}

bool get_bool(const nlohmann::json& j, const char* key, bool& out, bool required = true)
{
    if (!j.contains(key))
        return !required;
    if (!j[key].is_boolean())
        return false;
    out = j[key].get<bool>();
    return true;
}

Result<Step> parse_click(const nlohmann::json& j)
{
    Step s;
    s.kind = StepKind::Click;
    if (!get_string(j, "user", s.user))
        return Err::ParseError;
    if (!get_u64(j, "order", s.order))
        return Err::ParseError;
    if (!get_u64(j, "t", s.t))
        return Err::ParseError;
    if (!get_bool(j, "auth", s.auth, false))
        return Err::ParseError;
    return s;
}

} // namespace

Result<Step> step_from_json(const nlohmann::json& j)
{
    if (!j.is_object())
        return Err::ParseError;

    if (!j.contains("step")) {
        // bare click-stream record
        if (j.contains("user") && j.contains("order") && j.contains("t"))
            return parse_click(j);
        return Err::ParseError;
    }
    if (!j["step"].is_string())
        return Err::ParseError;
    const auto name = j["step"].get<std::string>();

    Step s;
    if (name == "open_account") {
        s.kind = StepKind::OpenAccount;
        if (!get_string(j, "address", s.address))
            return Err::ParseError;
        if (!get_u64(j, "native", s.native, false))
            return Err::ParseError;
        if (!get_u64(j, "rnt", s.rnt, false))
            return Err::ParseError;
        return s;
    }
    if (name == "mint_nft") {
        s.kind = StepKind::MintNft;
        if (!get_string(j, "owner", s.address))
            return Err::ParseError;
        if (!get_u64(j, "token", s.token))
            return Err::ParseError;
        if (!get_string(j, "meta", s.meta, false))
            return Err::ParseError;
        return s;
    }
    if (name == "mint_rnt") {
        s.kind = StepKind::MintRnt;
        if (!get_string(j, "to", s.address))
            return Err::ParseError;
        if (!get_u64(j, "amount", s.amount))
            return Err::ParseError;
        return s;
    }
    if (name == "transfer_nft") {
        s.kind = StepKind::TransferNft;
        if (!get_string(j, "from", s.address))
            return Err::ParseError;
        if (!get_string(j, "to", s.to))
            return Err::ParseError;
        if (!get_u64(j, "token", s.token))
            return Err::ParseError;
        return s;
    }
    if (name == "transfer_rnt") {
        s.kind = StepKind::TransferRnt;
        if (!get_string(j, "from", s.address))
            return Err::ParseError;
        if (!get_string(j, "to", s.to))
            return Err::ParseError;
        if (!get_u64(j, "amount", s.amount))
            return Err::ParseError;
        return s;
    }
    if (name == "lend") {
        s.kind = StepKind::Lend;
        if (!get_string(j, "lender", s.address))
            return Err::ParseError;
        if (!get_u64(j, "token", s.token))
            return Err::ParseError;
        if (!get_u64(j, "price_per_like", s.price_per_like))
            return Err::ParseError;
        if (!get_u64(j, "max_days", s.max_days))
            return Err::ParseError;
        return s;
    }
    if (name == "stop_lend") {
        s.kind = StepKind::StopLend;
        if (!get_string(j, "lender", s.address))
            return Err::ParseError;
        if (!get_u64(j, "order", s.order))
            return Err::ParseError;
        return s;
    }
    if (name == "rent") {
        s.kind = StepKind::Rent;
        if (!get_string(j, "renter", s.address))
            return Err::ParseError;
        if (!get_u64(j, "order", s.order))
            return Err::ParseError;
        if (!get_u64(j, "days", s.days))
            return Err::ParseError;
        if (!get_u64(j, "max_likes", s.max_likes))
            return Err::ParseError;
        return s;
    }
    if (name == "click")
        return parse_click(j);
    if (name == "increase_count") {
        s.kind = StepKind::Increase;
        if (!get_string(j, "caller", s.address))
            return Err::ParseError;
        if (!get_u64(j, "order", s.order))
            return Err::ParseError;
        if (!get_u64(j, "increment", s.increment))
            return Err::ParseError;
        return s;
    }
    if (name == "flush") {
        s.kind = StepKind::Flush;
        if (!get_u64(j, "order", s.order))
            return Err::ParseError;
        return s;
    }
    if (name == "stop_rent") {
        s.kind = StepKind::StopRent;
        if (!get_string(j, "renter", s.address))
            return Err::ParseError;
        if (!get_u64(j, "order", s.order))
            return Err::ParseError;
        return s;
    }
    if (name == "claim_lender") {
        s.kind = StepKind::ClaimLender;
        if (!get_string(j, "lender", s.address))
            return Err::ParseError;
        if (!get_u64(j, "order", s.order))
            return Err::ParseError;
        return s;
    }
    if (name == "claim_renter") {
        s.kind = StepKind::ClaimRenter;
        if (!get_string(j, "renter", s.address))
            return Err::ParseError;
        if (!get_u64(j, "order", s.order))
            return Err::ParseError;
        return s;
    }
    if (name == "advance_time") {
        s.kind = StepKind::AdvanceTime;
        if (!get_i64(j, "delta", s.delta))
            return Err::ParseError;
        return s;
    }
    return Err::ParseError; // unknown step name
}

nlohmann::json step_to_json(const Step& s)
{
    nlohmann::json j;
    j["step"] = std::string(to_string(s.kind));
    switch (s.kind) {
    case StepKind::OpenAccount:
        j["address"] = s.address;
        j["native"] = s.native;
        j["rnt"] = s.rnt;
        break;
    case StepKind::MintNft:
        j["owner"] = s.address;
        j["token"] = s.token;
        j["meta"] = s.meta;
        break;
    case StepKind::MintRnt:
        j["to"] = s.address;
        j["amount"] = s.amount;
        break;
    case StepKind::TransferNft:
        j["from"] = s.address;
        j["to"] = s.to;
        j["token"] = s.token;
        break;
    case StepKind::TransferRnt:
        j["from"] = s.address;
        j["to"] = s.to;
        j["amount"] = s.amount;
        break;
    case StepKind::Lend:
        j["lender"] = s.address;
        j["token"] = s.token;
        j["price_per_like"] = s.price_per_like;
        j["max_days"] = s.max_days;
        break;
    case StepKind::StopLend:
        j["lender"] = s.address;
        j["order"] = s.order;
        break;
    case StepKind::Rent:
        j["renter"] = s.address;
        j["order"] = s.order;
        j["days"] = s.days;
        j["max_likes"] = s.max_likes;
        break;
    case StepKind::Click:
        j["user"] = s.user;
        j["order"] = s.order;
        j["t"] = s.t;
        j["auth"] = s.auth;
        break;
    case StepKind::Increase:
        j["caller"] = s.address;
        j["order"] = s.order;
        j["increment"] = s.increment;
        break;
    case StepKind::Flush:
        j["order"] = s.order;
        break;
    case StepKind::StopRent:
        j["renter"] = s.address;
        j["order"] = s.order;
        break;
    case StepKind::ClaimLender:
        j["lender"] = s.address;
        j["order"] = s.order;
        break;
    case StepKind::ClaimRenter:
        j["renter"] = s.address;
        j["order"] = s.order;
        break;
    case StepKind::AdvanceTime:
        j["delta"] = s.delta;
        break;
    }
    return j;
}

Result<std::vector<Step>> parse_scenario(std::istream& in, std::string* error_detail)
{
    std::vector<Step> steps;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos)
            continue;
        if (line[begin] == '#')
            continue; // comment line

        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded()) {
            if (error_detail != nullptr)
                *error_detail = "line " + std::to_string(line_no) + ": invalid JSON";
            return Err::ParseError;
        }
        auto step = step_from_json(j);
        if (!step) {
            if (error_detail != nullptr)
                *error_detail = "line " + std::to_string(line_no) + ": unknown or malformed step";
            return Err::ParseError;
        }
        steps.push_back(std::move(step).value());
    }
    return steps;
}

Result<std::vector<Step>> load_scenario(const std::string& path, std::string* error_detail)
{
    std::ifstream in(path);
    if (!in) {
        if (error_detail != nullptr)
            *error_detail = "cannot open " + path;
        return Err::ParseError;
    }
    return parse_scenario(in, error_detail);
}

std::string scenario_to_jsonl(const std::vector<Step>& steps)
{
    std::ostringstream out;
    for (const auto& step : steps)
        out << step_to_json(step).dump() << '\n';
    return out.str();
}

namespace steps {

Step open_account(Address address, Wei native, Rnt rnt)
{
    Step s;
    s.kind = StepKind::OpenAccount;
    s.address = std::move(address);
    s.native = native;
    s.rnt = rnt;
    return s;
}

Step mint_nft(Address owner, std::uint64_t token, std::string meta)
{
    Step s;
    s.kind = StepKind::MintNft;
    s.address = std::move(owner);
    s.token = token;
    s.meta = std::move(meta);
    return s;
}

Step mint_rnt(Address to, Rnt amount)
{
    Step s;
    s.kind = StepKind::MintRnt;
    s.address = std::move(to);
    s.amount = amount;
    return s;
}

Step transfer_nft(Address from, Address to, std::uint64_t token)
{
    Step s;
    s.kind = StepKind::TransferNft;
    s.address = std::move(from);
    s.to = std::move(to);
    s.token = token;
    return s;
}

Step transfer_rnt(Address from, Address to, Rnt amount)
{
    Step s;
    s.kind = StepKind::TransferRnt;
    s.address = std::move(from);
    s.to = std::move(to);
    s.amount = amount;
    return s;
}

Step lend(Address lender, std::uint64_t token, Rnt price_per_like, std::uint64_t max_days)
{
    Step s;
    s.kind = StepKind::Lend;
    s.address = std::move(lender);
    s.token = token;
    s.price_per_like = price_per_like;
    s.max_days = max_days;
    return s;
}

Step stop_lend(Address lender, std::uint64_t order)
{
    Step s;
    s.kind = StepKind::StopLend;
    s.address = std::move(lender);
    s.order = order;
    return s;
}

Step rent(Address renter, std::uint64_t order, std::uint64_t days, std::uint64_t max_likes)
{
    Step s;
    s.kind = StepKind::Rent;
    s.address = std::move(renter);
    s.order = order;
    s.days = days;
    s.max_likes = max_likes;
    return s;
}

Step click(std::string user, std::uint64_t order, std::uint64_t t, bool auth)
{
    Step s;
    s.kind = StepKind::Click;
    s.user = std::move(user);
    s.order = order;
    s.t = t;
    s.auth = auth;
    return s;
}

Step increase(Address caller, std::uint64_t order, std::uint64_t increment)
{
    Step s;
    s.kind = StepKind::Increase;
    s.address = std::move(caller);
    s.order = order;
    s.increment = increment;
    return s;
}

Step flush(std::uint64_t order)
{
    Step s;
    s.kind = StepKind::Flush;
    s.order = order;
    return s;
}

Step stop_rent(Address renter, std::uint64_t order)
{
    Step s;
    s.kind = StepKind::StopRent;
    s.address = std::move(renter);
    s.order = order;
    return s;
}

Step claim_lender(Address lender, std::uint64_t order)
{
    Step s;
    s.kind = StepKind::ClaimLender;
    s.address = std::move(lender);
    s.order = order;
    return s;
}

Step claim_renter(Address renter, std::uint64_t order)
{
    Step s;
    s.kind = StepKind::ClaimRenter;
    s.order = order;
    s.address = std::move(renter);
    return s;
}

Step advance_time(std::int64_t delta)
{
    Step s;
    s.kind = StepKind::AdvanceTime;
    s.delta = delta;
    return s;
}

} // namespace steps

} // namespace rentsim
