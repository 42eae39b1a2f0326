// rentsim: deterministic simulator for NFT rental with pay-per-like pricing
// Copyright 2026 The rentsim Authors.
// SPDX-License-Identifier: Apache-2.0
//
// CLI entry points:
//   rentsim run <scenario.jsonl> [--chain p.json] [--gas g.json] [--batch-k N]
//               [--strict] [--clicks stream.jsonl] [--report out.json] [--json]
//   rentsim fuzz --seed S --sequences N --max-ops M
//   rentsim economics break-even|trust-curve|compare [options]
//
// Exit codes: 0 success, 1 violation or strict-mode error, 2 parse/config error.
#include "rentsim/economics.hpp"
#include "rentsim/fuzz.hpp"
#include "rentsim/oracle.hpp"
#include "rentsim/runner.hpp"
#include "rentsim/scenario.hpp"
#include "rentsim/world.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>

namespace {

using namespace rentsim;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitConfig = 2;

struct CommonOptions {
    std::string chain_path;
    std::string gas_path;
    std::uint64_t batch_k = 1;
};

// Loads profile/schedule files when given, falling back to the bundled
// Ethereum calibration. Returns false (after printing) on config errors.
bool resolve_config(const CommonOptions& options, WorldConfig& config)
{
    if (!options.chain_path.empty()) {
        auto profile = load_chain_profile(options.chain_path);
        if (!profile) {
            std::cerr << "error: cannot load chain profile " << options.chain_path << " ("
                      << to_string(profile.error()) << ")\n";
            return false;
        }
        config.profile = std::move(profile).value();
    }
    if (!options.gas_path.empty()) {
        auto schedule = load_gas_schedule(options.gas_path);
        if (!schedule) {
            std::cerr << "error: cannot load gas schedule " << options.gas_path << " ("
                      << to_string(schedule.error()) << ")\n";
            return false;
        }
        config.schedule = std::move(schedule).value();
    }
    config.batch_k = options.batch_k;

    auto valid = validate_world_config(config);
    if (!valid) {
        std::cerr << "error: invalid configuration (" << to_string(valid.error()) << ")\n";
        return false;
    }
    return true;
}

int cmd_run(const std::string& scenario_path, const std::string& clicks_path,
    const CommonOptions& common, bool strict, const std::string& report_path, bool as_json)
{
    WorldConfig config;
    if (!resolve_config(common, config))
        return kExitConfig;

    std::string detail;
    auto steps = load_scenario(scenario_path, &detail);
    if (!steps) {
        std::cerr << "error: " << scenario_path << ": " << detail << "\n";
        return kExitConfig;
    }
    auto scenario = std::move(steps).value();

    if (!clicks_path.empty()) {
        auto clicks = load_scenario(clicks_path, &detail);
        if (!clicks) {
            std::cerr << "error: " << clicks_path << ": " << detail << "\n";
            return kExitConfig;
        }
        for (auto& step : clicks.value()) {
            if (step.kind != StepKind::Click) {
                std::cerr << "error: " << clicks_path << ": not a pure click stream\n";
                return kExitConfig;
            }
            scenario.push_back(std::move(step));
        }
    }

    const RunReport report = run_scenario(scenario, config, RunOptions{strict});

    if (as_json)
        std::cout << report_to_json(report).dump(2) << "\n";
    else
        std::cout << report_to_table(report);

    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) {
            std::cerr << "error: cannot write " << report_path << "\n";
            return kExitConfig;
        }
        out << report_to_json(report).dump(2) << "\n";
    }

    if (strict && report.halted)
        return kExitViolation;
    return kExitOk;
}

int cmd_fuzz(const FuzzOptions& options, const CommonOptions& common)
{
    WorldConfig config;
    if (!resolve_config(common, config))
        return kExitConfig;

    const FuzzReport report = run_fuzz(options, config);
    std::cout << fuzz_report_to_json(report).dump(2) << "\n";
    if (!report.violations.empty()) {
        std::cerr << report.violations.size() << " invariant violation(s) found\n";
        return kExitViolation;
    }
    return kExitOk;
}

int cmd_break_even(const CommonOptions& common, std::uint64_t likes)
{
    WorldConfig config;
    if (!resolve_config(common, config))
        return kExitConfig;

    const auto price = break_even_price_per_like(config.profile, config.schedule, likes);
    if (!price) {
        std::cerr << "error: " << to_string(price.error()) << "\n";
        return kExitConfig;
    }
    const auto lifecycle = order_lifecycle_cost(config.profile, config.schedule, "lender", 0, 1);
    std::cout << std::fixed << std::setprecision(2);
    std::cout << "lender lifecycle cost: $" << lifecycle.value().total_usd << "\n";
    std::cout << "expected likes:        " << likes << "\n";
    std::cout << "rnt_usd:               " << config.profile.rnt_usd << "\n";
    std::cout << "break-even price:      " << price.value() << " RNT per like\n";
    return kExitOk;
}

int cmd_trust_curve(const CommonOptions& common, std::uint64_t clicks, std::uint64_t likes)
{
    WorldConfig config;
    if (!resolve_config(common, config))
        return kExitConfig;

    const auto curve =
        trust_cost_curve(config.profile, config.schedule, clicks, likes, config.batch_k);
    if (!curve) {
        std::cerr << "error: " << to_string(curve.error()) << "\n";
        return kExitConfig;
    }
    std::cout << std::fixed << std::setprecision(2);
    for (const auto& row : curve.value().rows) {
        std::cout << std::left << std::setw(20) << row.mode << std::right << std::setw(14)
                  << row.gas_total << " gas   $" << row.usd << "\n";
    }
    std::cout << "trust cost (full_metadata - counter_batched): $"
              << curve.value().trust_cost_usd << "\n";
    if (curve.value().rows[0].usd > 0.0)
        std::cout << "full_metadata / counter_batched: " << curve.value().metadata_over_batched
                  << "x\n";
    return kExitOk;
}

int cmd_compare(const CommonOptions& common, const std::string& other_path, const std::string& op)
{
    WorldConfig config;
    if (!resolve_config(common, config))
        return kExitConfig;

    ChainProfile other = ChainProfile::binance_like();
    if (!other_path.empty()) {
        auto loaded = load_chain_profile(other_path);
        if (!loaded) {
            std::cerr << "error: cannot load chain profile " << other_path << "\n";
            return kExitConfig;
        }
        other = std::move(loaded).value();
    }

    const auto ratio = compare_chains(config.schedule, config.profile, other, op);
    if (!ratio) {
        std::cerr << "error: " << to_string(ratio.error()) << "\n";
        return kExitConfig;
    }
    const auto gas = config.schedule.units(op).value();
    const auto cost_a = tx_cost_usd(gas, config.profile).value();
    const auto cost_b = tx_cost_usd(gas, other).value();
    std::cout << std::fixed << std::setprecision(4);
    std::cout << op << " on " << config.profile.name << ": $" << cost_a << "\n";
    std::cout << op << " on " << other.name << ": $" << cost_b << "\n";
    std::cout << "cost ratio: " << ratio.value() << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"deterministic NFT rental simulator with pay-per-like pricing"};
    app.require_subcommand(1);

    CommonOptions common;

    // run
    auto* run = app.add_subcommand("run", "run a JSONL scenario");
    std::string scenario_path;
    std::string clicks_path;
    std::string report_path;
    bool strict = false;
    bool as_json = false;
    run->add_option("scenario", scenario_path, "scenario file (one JSON step per line)")
        ->required();
    run->add_option("--chain", common.chain_path, "chain profile JSON");
    run->add_option("--gas", common.gas_path, "gas schedule JSON");
    run->add_option("--batch-k", common.batch_k, "exhibitor batch size k");
    run->add_option("--clicks", clicks_path, "extra click-stream file appended to the scenario");
    run->add_option("--report", report_path, "write the JSON report to a file");
    run->add_flag("--strict", strict, "halt on the first step error");
    run->add_flag("--json", as_json, "print the JSON report instead of the table");

    // fuzz
    auto* fuzz = app.add_subcommand("fuzz", "random op sequences with invariant checks");
    FuzzOptions fuzz_options;
    fuzz->add_option("--seed", fuzz_options.seed, "base seed");
    fuzz->add_option("--sequences", fuzz_options.sequences, "number of sequences");
    fuzz->add_option("--max-ops", fuzz_options.max_ops, "ops per sequence");
    fuzz->add_option("--chain", common.chain_path, "chain profile JSON");
    fuzz->add_option("--gas", common.gas_path, "gas schedule JSON");
    fuzz->add_option("--batch-k", common.batch_k, "exhibitor batch size k");

    // economics
    auto* economics = app.add_subcommand("economics", "cost analyses");
    economics->require_subcommand(1);

    auto* break_even = economics->add_subcommand("break-even", "minimum profitable like price");
    std::uint64_t likes = 10;
    break_even->add_option("--likes", likes, "expected likes over the rental")->required();
    break_even->add_option("--profile", common.chain_path, "chain profile JSON");
    break_even->add_option("--gas", common.gas_path, "gas schedule JSON");

    auto* trust = economics->add_subcommand("trust-curve", "on-chain evidence cost modes");
    std::uint64_t total_clicks = 1000;
    std::uint64_t verified_likes = 100;
    trust->add_option("--clicks", total_clicks, "total clicks incl. fraudulent");
    trust->add_option("--likes", verified_likes, "verified likes");
    trust->add_option("--k", common.batch_k, "batch size");
    trust->add_option("--profile", common.chain_path, "chain profile JSON");
    trust->add_option("--gas", common.gas_path, "gas schedule JSON");

    auto* compare = economics->add_subcommand("compare", "per-op cost ratio of two chains");
    std::string other_profile;
    std::string compare_op = std::string(ops::increase_count);
    compare->add_option("--profile", common.chain_path, "first chain profile JSON");
    compare->add_option("--other", other_profile, "second chain profile JSON (default binance-like)");
    compare->add_option("--op", compare_op, "operation name");
    compare->add_option("--gas", common.gas_path, "gas schedule JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    if (run->parsed())
        return cmd_run(scenario_path, clicks_path, common, strict, report_path, as_json);
    if (fuzz->parsed())
        return cmd_fuzz(fuzz_options, common);
    if (economics->parsed()) {
        if (break_even->parsed())
            return cmd_break_even(common, likes);
        if (trust->parsed())
            return cmd_trust_curve(common, total_clicks, verified_likes);
        if (compare->parsed())
            return cmd_compare(common, other_profile, compare_op);
    }
    return kExitConfig;
}
