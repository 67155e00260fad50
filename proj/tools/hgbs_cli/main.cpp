#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hgbs/analysis.hpp"
#include "hgbs/deployment_io.hpp"
#include "hgbs/keying.hpp"
#include "hgbs/rng.hpp"
#include "hgbs/simulate.hpp"

#include "report.hpp"

namespace {

constexpr const char* kToolVersion = "1.0.0";

using namespace hgbs;
using cli::format_double;
using cli::format_rational;
using cli::OutFormat;
using cli::Table;

/// Bad flag combinations and values: printed to stderr, exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::uint64_t parse_id_value(const std::string& text) {
    try {
        if (text.rfind("0b", 0) == 0 || text.rfind("0B", 0) == 0) {
            if (text.size() == 2) throw UsageError("empty binary literal");
            return std::stoull(text.substr(2), nullptr, 2);
        }
        return std::stoull(text, nullptr, 10);
    } catch (const std::exception&) {
        throw UsageError("--i/--j accept a decimal or 0b-prefixed binary id, got '" +
                         text + "'");
    }
}

DegreeKind parse_policy(const std::string& name) {
    if (name == "flat") return DegreeKind::Flat;
    if (name == "doubling") return DegreeKind::Doubling;
    throw UsageError("--policy accepts flat|doubling, got '" + name + "'");
}

analysis::WordMultModel parse_word_model(const std::string& name) {
    if (name == "schoolbook64") return analysis::WordMultModel::Schoolbook64;
    if (name == "karatsuba64") return analysis::WordMultModel::Karatsuba64;
    if (name == "mixed16x64") return analysis::WordMultModel::Mixed16x64;
    throw UsageError(
        "--word-model accepts schoolbook64|karatsuba64|mixed16x64, got '" + name +
        "'");
}

std::string hex_key(const FieldElement& k) {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "0x%016llx",
                  static_cast<unsigned long long>(k.value()));
    return buf;
}

/// Writes to --out when given, standard output otherwise.
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw IoError("cannot open '" + path + "' for writing");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

Table make_table(const std::string& command,
                 std::vector<std::pair<std::string, std::string>> params,
                 std::vector<std::string> columns) {
    Table t;
    t.meta.emplace_back("format_version",
                        std::to_string(kDeploymentFormatVersion));
    t.meta.emplace_back("tool", std::string("hgbs ") + kToolVersion);
    t.meta.emplace_back("command", command);
    for (auto& kv : params) t.meta.push_back(std::move(kv));
    t.columns = std::move(columns);
    return t;
}

std::string policy_name(DegreeKind k) {
    return k == DegreeKind::Flat ? "flat" : "doubling";
}

void append_sim_row(Table& t, const sim::SimReport& r, const Deployment& dep) {
    t.add_row({r.kind, std::to_string(dep.grid.order),
               std::to_string(dep.grid.unit), format_double(dep.policy.alpha),
               policy_name(dep.policy.kind), r.param, std::to_string(r.trials),
               std::to_string(r.seed), format_double(r.estimate),
               r.closed_form ? format_double(*r.closed_form) : std::string(),
               r.abs_error ? format_double(*r.abs_error) : std::string()});
}

void append_closed_row(Table& t, const std::string& kind, const std::string& param,
                       double value, const Deployment& dep) {
    t.add_row({kind, std::to_string(dep.grid.order), std::to_string(dep.grid.unit),
               format_double(dep.policy.alpha), policy_name(dep.policy.kind), param,
               "0", "", "", format_double(value), ""});
}

const std::vector<std::string> kSimColumns = {
    "sim_kind", "n",    "k",    "alpha",    "policy",      "param",
    "trials",   "seed", "estimate", "closed_form", "abs_error"};

// ---------------------------------------------------------------------------
// deploy
// ---------------------------------------------------------------------------

int run_deploy(unsigned order, unsigned unit, double alpha,
               const std::string& policy_text, std::uint64_t modulus_value,
               std::optional<unsigned> truncate, std::uint64_t seed,
               const std::string& out_path) {
    const GridParams grid = make_grid(order, unit);
    const DegreePolicy policy = make_policy(parse_policy(policy_text), alpha, grid);
    const FieldModulus modulus(modulus_value);
    Deployment dep = assign_keying_material(grid, policy, modulus, seed);
    if (truncate) dep = truncate_rings(dep, *truncate);
    save_deployment_file(dep, out_path);
    std::cout << "N=" << grid.node_count << " t0=" << policy.base_degree
              << " polynomials=" << ((1ull << grid.order) - 1) << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// key
// ---------------------------------------------------------------------------

int run_key(const std::string& dep_path, const std::string& i_text,
            const std::string& j_text, bool relay,
            std::optional<std::uint64_t> seed) {
    const Deployment dep = load_deployment_file(dep_path);
    const NodeId i = decode_id(parse_id_value(i_text), dep.grid);
    const NodeId j = decode_id(parse_id_value(j_text), dep.grid);

    std::cout << "i=" << encode_id(i) << " i_bin=" << id_binary(i) << "\n";
    std::cout << "j=" << encode_id(j) << " j_bin=" << id_binary(j) << "\n";

    if (!relay) {
        const FieldElement key = establish_key(dep, i, j);
        std::cout << "order=" << common_order(i, j) << "\n";
        std::cout << "key=" << key.value() << " key_hex=" << hex_key(key) << "\n";
        return 0;
    }

    // Relay selection is randomized; honor an explicit seed or record the
    // auto-chosen one so the run can be replayed.
    const std::uint64_t relay_seed = seed ? *seed : std::random_device{}();
    std::mt19937_64 rng(relay_seed);
    const PathKeyResult r = establish_path_key(dep, i, j, rng);
    std::cout << "seed=" << relay_seed << "\n";
    std::cout << "relay=" << encode_id(r.relay) << " relay_bin=" << id_binary(r.relay)
              << "\n";
    std::cout << "key=" << r.key.value() << " key_hex=" << hex_key(r.key) << "\n";
    std::cout << "key_i_relay=" << r.key_with_i.value()
              << " key_i_relay_hex=" << hex_key(r.key_with_i) << "\n";
    std::cout << "key_relay_j=" << r.key_with_j.value()
              << " key_relay_j_hex=" << hex_key(r.key_with_j) << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

struct AnalyzeArgs {
    std::string what;
    unsigned order = 0;
    unsigned unit = 0;
    double alpha = 0.0;
    double beta = 1.0;
    std::uint64_t nodes = 0;
    unsigned lg_q = 61;
    std::string model = "all";
    std::string policy = "flat";
    unsigned comparison_cost = 1;
    std::string word_model = "karatsuba64";
    std::uint64_t nc_step = 1;
    std::string format = "csv";
    std::string out;
};

void require_flag(bool present, const std::string& flag, const std::string& what) {
    if (!present)
        throw UsageError("analyze --what " + what + " requires " + flag);
}

int run_analyze(const AnalyzeArgs& a) {
    OutputTarget target(a.out);
    const OutFormat format = cli::parse_format(a.format);

    if (a.what == "connectivity") {
        require_flag(a.order > 0, "--order", a.what);
        Table t = make_table("analyze connectivity",
                             {{"order", std::to_string(a.order)},
                              {"beta", format_double(a.beta)}},
                             {"order", "beta", "connectivity"});
        for (unsigned i = 1; i <= a.order; ++i)
            t.add_row({std::to_string(i), format_double(a.beta),
                       format_double(analysis::connectivity_order(i, a.order, a.beta))});
        cli::emit_report(t, format, target.stream());
        return 0;
    }

    if (a.what == "pz") {
        require_flag(a.order > 0, "--order", a.what);
        require_flag(a.unit > 0, "--unit", a.what);
        const GridParams grid = make_grid(a.order, a.unit);
        Table t = make_table("analyze pz",
                             {{"order", std::to_string(a.order)},
                              {"unit", std::to_string(a.unit)}},
                             {"z", "n", "m", "p_z", "p_z_exact", "bound",
                              "bound_exact"});
        for (unsigned z = 1; z <= a.order; ++z) {
            const auto r = analysis::connectivity_pz(z, a.order, grid.zone_size);
            t.add_row({std::to_string(z), std::to_string(a.order),
                       std::to_string(grid.zone_size), format_double(to_double(r.p_z)),
                       format_rational(r.p_z), format_double(to_double(r.bound)),
                       format_rational(r.bound)});
        }
        cli::emit_report(t, format, target.stream());
        return 0;
    }

    if (a.what == "memory") {
        require_flag(a.order > 0, "--order", a.what);
        require_flag(a.nodes > 0, "--nodes", a.what);
        require_flag(a.alpha > 0, "--alpha", a.what);
        Table t = make_table("analyze memory",
                             {{"nodes", std::to_string(a.nodes)},
                              {"order", std::to_string(a.order)},
                              {"alpha", format_double(a.alpha)},
                              {"lg_q", std::to_string(a.lg_q)}},
                             {"model", "N", "n", "alpha", "lg_q", "bits",
                              "bits_exact"});
        const std::vector<std::pair<std::string, analysis::MemoryModel>> all = {
            {"m1", analysis::MemoryModel::M1},
            {"m2", analysis::MemoryModel::M2},
            {"m3", analysis::MemoryModel::M3},
            {"m3exact", analysis::MemoryModel::M3Exact}};
        bool matched = false;
        for (const auto& [name, model] : all) {
            if (a.model != "all" && a.model != name) continue;
            matched = true;
            const auto c = analysis::memory_cost(a.nodes, a.order, a.alpha, a.lg_q,
                                                 model);
            t.add_row({name, std::to_string(a.nodes), std::to_string(a.order),
                       format_double(a.alpha), std::to_string(a.lg_q),
                       format_double(c.bits), std::to_string(c.bits_exact)});
        }
        if (!matched)
            throw UsageError("--model accepts m1|m2|m3|m3exact|all, got '" +
                             a.model + "'");
        cli::emit_report(t, format, target.stream());
        return 0;
    }

    if (a.what == "cost") {
        require_flag(a.order > 0, "--order", a.what);
        require_flag(a.unit > 0, "--unit", a.what);
        require_flag(a.alpha > 0, "--alpha", a.what);
        const GridParams grid = make_grid(a.order, a.unit);
        const DegreePolicy policy =
            make_policy(parse_policy(a.policy), a.alpha, grid);
        const analysis::TrafficModel traffic = analysis::ctf_weights(a.order, a.beta);
        const analysis::CostModel cost{a.comparison_cost,
                                       parse_word_model(a.word_model)};
        const auto c = analysis::compute_cost(policy, traffic, cost);
        Table t = make_table("analyze cost",
                             {{"order", std::to_string(a.order)},
                              {"unit", std::to_string(a.unit)},
                              {"alpha", format_double(a.alpha)},
                              {"policy", a.policy},
                              {"comparison_cost", std::to_string(a.comparison_cost)},
                              {"word_model", a.word_model}},
                             {"n", "policy", "t0", "comparison_cost", "word_model",
                              "field_mults", "field_mults_exact", "word_mults",
                              "word_mults_exact"});
        t.add_row({std::to_string(a.order), a.policy,
                   std::to_string(policy.base_degree),
                   std::to_string(a.comparison_cost), a.word_model,
                   format_double(to_double(c.field_mults)),
                   format_rational(c.field_mults),
                   format_double(to_double(c.word_mults)),
                   format_rational(c.word_mults)});
        cli::emit_report(t, format, target.stream());
        return 0;
    }

    if (a.what == "resiliency") {
        require_flag(a.order > 0, "--order", a.what);
        require_flag(a.unit > 0, "--unit", a.what);
        require_flag(a.alpha > 0, "--alpha", a.what);
        const GridParams grid = make_grid(a.order, a.unit);
        const DegreePolicy policy =
            make_policy(DegreeKind::Flat, a.alpha, grid);
        const std::uint64_t t0 = policy.base_degree;
        Table t = make_table("analyze resiliency",
                             {{"order", std::to_string(a.order)},
                              {"unit", std::to_string(a.unit)},
                              {"alpha", format_double(a.alpha)},
                              {"nc_step", std::to_string(a.nc_step)}},
                             {"Nc", "m", "N", "t0", "p_paper_literal",
                              "p_binomial_corrected", "p_exact_corrected"});
        for (std::uint64_t nc = 0; nc <= grid.node_count; nc += a.nc_step) {
            t.add_row(
                {std::to_string(nc), std::to_string(grid.zone_size),
                 std::to_string(grid.node_count), std::to_string(t0),
                 format_double(analysis::resiliency_pr(nc, t0, grid.zone_size,
                                                       grid.node_count)),
                 format_double(analysis::resiliency_pr(nc, t0 + 1, grid.zone_size,
                                                       grid.node_count)),
                 format_double(analysis::resiliency_pr_exact(
                     nc, t0 + 1, grid.zone_size, grid.node_count))});
        }
        cli::emit_report(t, format, target.stream());
        return 0;
    }

    if (a.what == "blocked") {
        require_flag(a.order > 0, "--order", a.what);
        const analysis::TrafficModel traffic = analysis::ctf_weights(a.order, a.beta);
        Table t = make_table("analyze blocked",
                             {{"order", std::to_string(a.order)}},
                             {"i", "n", "blocked", "blocked_exact",
                              "blocked_unnormalized_exact"});
        for (unsigned i = 1; i <= a.order; ++i) {
            const Rational b = analysis::blocked_fraction(i, traffic);
            t.add_row({std::to_string(i), std::to_string(a.order),
                       format_double(to_double(b)), format_rational(b),
                       format_rational(
                           analysis::blocked_fraction_unnormalized(i, a.order))});
        }
        cli::emit_report(t, format, target.stream());
        return 0;
    }

    if (a.what == "ctf") {
        require_flag(a.order > 0, "--order", a.what);
        const analysis::TrafficModel traffic = analysis::ctf_weights(a.order, a.beta);
        Table t = make_table("analyze ctf", {{"order", std::to_string(a.order)}},
                             {"i", "p_i", "p_i_exact"});
        for (unsigned i = 1; i <= a.order; ++i)
            t.add_row({std::to_string(i), format_double(to_double(traffic.weight(i))),
                       format_rational(traffic.weight(i))});
        cli::emit_report(t, format, target.stream());
        return 0;
    }

    throw UsageError("--what accepts "
                     "connectivity|pz|memory|cost|resiliency|blocked|ctf, got '" +
                     a.what + "'");
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

struct SimulateArgs {
    std::string what;
    std::string deployment;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 1;
    unsigned zone_order = 1;
    std::uint64_t nc = 0;
    std::uint64_t zone = 0;
    std::uint64_t budget = 0;
    unsigned broken_order = 1;
    double beta = 1.0;
    std::string format = "csv";
    std::string out;
};

int run_simulate(const SimulateArgs& s) {
    OutputTarget target(s.out);
    const OutFormat format = cli::parse_format(s.format);
    const Deployment dep = load_deployment_file(s.deployment);

    std::vector<std::pair<std::string, std::string>> params = {
        {"deployment", s.deployment},
        {"trials", std::to_string(s.trials)},
        {"seed", std::to_string(s.seed)}};

    if (s.what == "same-zone") {
        params.emplace_back("zone_order", std::to_string(s.zone_order));
        Table t = make_table("simulate same-zone", std::move(params), kSimColumns);
        append_sim_row(t, sim::mc_same_zone(dep.grid, s.zone_order, s.trials, s.seed),
                       dep);
        cli::emit_report(t, format, target.stream());
        return 0;
    }

    if (s.what == "compromise-random") {
        params.emplace_back("nc", std::to_string(s.nc));
        Table t = make_table("simulate compromise-random", std::move(params),
                             kSimColumns);
        const auto r = sim::mc_compromise_random(dep, s.nc, s.trials, s.seed);
        append_sim_row(t, r.zone_break, dep);
        append_sim_row(t, r.affected_links, dep);
        append_closed_row(t, "compromise-random-closed-paper-literal",
                          r.zone_break.param, r.closed_paper_literal, dep);
        append_closed_row(t, "compromise-random-closed-binomial-corrected",
                          r.zone_break.param, r.closed_binomial_corrected, dep);
        cli::emit_report(t, format, target.stream());
        return 0;
    }

    if (s.what == "compromise-selective") {
        params.emplace_back("zone", std::to_string(s.zone));
        params.emplace_back("budget", std::to_string(s.budget));
        Table t = make_table("simulate compromise-selective", std::move(params),
                             kSimColumns);
        const auto r =
            sim::mc_compromise_selective(dep, s.zone, s.budget, s.trials, s.seed);
        append_sim_row(t, r.zone_break, dep);
        append_sim_row(t, r.affected_links, dep);
        append_closed_row(t, "compromise-selective-break-budget",
                          r.zone_break.param,
                          static_cast<double>(r.deterministic_break_budget), dep);
        cli::emit_report(t, format, target.stream());
        return 0;
    }

    if (s.what == "blocked") {
        params.emplace_back("broken_order", std::to_string(s.broken_order));
        Table t = make_table("simulate blocked", std::move(params), kSimColumns);
        const analysis::TrafficModel traffic =
            analysis::ctf_weights(dep.grid.order, s.beta);
        const auto r = sim::mc_blocked_traffic(dep, s.broken_order, traffic);
        const double measured = to_double(r.measured);
        const double closed = to_double(r.closed_form);
        t.add_row({"blocked", std::to_string(dep.grid.order),
                   std::to_string(dep.grid.unit), format_double(dep.policy.alpha),
                   policy_name(dep.policy.kind),
                   "i=" + std::to_string(s.broken_order), "0", "",
                   format_double(measured), format_double(closed),
                   r.measured == r.closed_form ? "0"
                                               : format_double(measured - closed)});
        if (s.broken_order < dep.grid.order) {
            const double recovered =
                r.affected_pairs == 0
                    ? 1.0
                    : static_cast<double>(r.reestablished_pairs) /
                          static_cast<double>(r.affected_pairs);
            t.add_row({"blocked-recovery", std::to_string(dep.grid.order),
                       std::to_string(dep.grid.unit),
                       format_double(dep.policy.alpha),
                       policy_name(dep.policy.kind),
                       "i=" + std::to_string(s.broken_order), "0", "",
                       format_double(recovered), "1", ""});
        }
        cli::emit_report(t, format, target.stream());
        return 0;
    }

    if (s.what == "agreement") {
        Table t = make_table("simulate agreement", std::move(params), kSimColumns);
        const auto r = sim::agreement_sweep(dep);
        const double rate = r.pairs == 0 ? 1.0
                                         : static_cast<double>(r.agreements) /
                                               static_cast<double>(r.pairs);
        t.add_row({"agreement", std::to_string(dep.grid.order),
                   std::to_string(dep.grid.unit), format_double(dep.policy.alpha),
                   policy_name(dep.policy.kind),
                   "pairs=" + std::to_string(r.pairs), "0", "",
                   format_double(rate), "1", format_double(rate - 1.0)});
        if (r.oracle_checked) {
            const double oracle = r.pairs == 0 ? 1.0
                                               : static_cast<double>(r.oracle_matches) /
                                                     static_cast<double>(r.pairs);
            t.add_row({"agreement-oracle", std::to_string(dep.grid.order),
                       std::to_string(dep.grid.unit),
                       format_double(dep.policy.alpha),
                       policy_name(dep.policy.kind),
                       "pairs=" + std::to_string(r.pairs), "0", "",
                       format_double(oracle), "1", format_double(oracle - 1.0)});
        }
        for (unsigned o = 1; o <= dep.grid.order; ++o)
            t.add_row({"agreement-pairs-at-order", std::to_string(dep.grid.order),
                       std::to_string(dep.grid.unit),
                       format_double(dep.policy.alpha),
                       policy_name(dep.policy.kind), "o=" + std::to_string(o), "0",
                       "", std::to_string(r.pairs_per_order[o - 1]), "", ""});
        cli::emit_report(t, format, target.stream());
        return 0;
    }

    throw UsageError("--what accepts same-zone|compromise-random|"
                     "compromise-selective|blocked|agreement, got '" +
                     s.what + "'");
}

// ---------------------------------------------------------------------------
// compare
// ---------------------------------------------------------------------------

struct CompareArgs {
    std::string scheme;
    analysis::SchemeParams params;
    std::string format = "csv";
    std::string out;
};

int run_compare(const CompareArgs& c) {
    OutputTarget target(c.out);
    const OutFormat format = cli::parse_format(c.format);

    analysis::Scheme scheme;
    if (c.scheme == "hgbs") scheme = analysis::Scheme::HGBS;
    else if (c.scheme == "gbs") scheme = analysis::Scheme::GBS;
    else if (c.scheme == "gbs3d") scheme = analysis::Scheme::GBS3D;
    else if (c.scheme == "plat") scheme = analysis::Scheme::Plat;
    else if (c.scheme == "eg") scheme = analysis::Scheme::EG;
    else if (c.scheme == "cps") scheme = analysis::Scheme::CPS;
    else if (c.scheme == "ddhv") scheme = analysis::Scheme::DDHV;
    else
        throw UsageError("--scheme accepts hgbs|gbs|gbs3d|plat|eg|cps|ddhv, got '" +
                         c.scheme + "'");

    const double conn = analysis::scheme_connectivity(scheme, c.params);
    const auto opt = [](std::uint64_t v) {
        return v == 0 ? std::string() : std::to_string(v);
    };
    Table t = make_table("compare", {{"scheme", c.scheme}},
                         {"scheme", "N", "P", "k", "m", "omega", "tau",
                          "connectivity"});
    t.add_row({c.scheme, opt(c.params.N), opt(c.params.P), opt(c.params.k),
               opt(c.params.m), opt(c.params.omega), opt(c.params.tau),
               format_double(conn)});
    cli::emit_report(t, format, target.stream());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hierarchical grid-based pairwise key pre-distribution toolkit"};
    app.require_subcommand(1);

    // deploy
    auto* deploy = app.add_subcommand("deploy", "Generate keying material");
    unsigned d_order = 0, d_unit = 0;
    double d_alpha = 0.0;
    std::string d_policy;
    std::uint64_t d_modulus = FieldModulus::default_modulus().value();
    unsigned d_truncate = 0;
    bool d_truncate_set = false;
    std::uint64_t d_seed = 0;
    std::string d_out;
    deploy->add_option("--order", d_order, "network order n")->required();
    deploy->add_option("--unit", d_unit, "distribution unit k")->required();
    deploy->add_option("--alpha", d_alpha, "security parameter in (0,1]")->required();
    deploy->add_option("--policy", d_policy, "flat|doubling")->required();
    deploy->add_option("--modulus", d_modulus, "prime field modulus");
    deploy->add_option("--truncate", d_truncate, "retain orders 1..d only")
        ->each([&](const std::string&) { d_truncate_set = true; });
    deploy->add_option("--seed", d_seed, "master seed")->required();
    deploy->add_option("--out", d_out, "output document path")->required();

    // key
    auto* key = app.add_subcommand("key", "Establish a pairwise key");
    std::string k_dep, k_i, k_j;
    bool k_relay = false;
    std::uint64_t k_seed = 0;
    bool k_seed_set = false;
    key->add_option("--deployment", k_dep, "deployment document")->required();
    key->add_option("--i", k_i, "first node id (decimal or 0b binary)")->required();
    key->add_option("--j", k_j, "second node id")->required();
    key->add_flag("--relay", k_relay, "use a relay-mediated path key");
    key->add_option("--seed", k_seed, "relay selection seed")
        ->each([&](const std::string&) { k_seed_set = true; });

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Evaluate the closed-form models");
    AnalyzeArgs an;
    analyze->add_option("--what", an.what,
                        "connectivity|pz|memory|cost|resiliency|blocked|ctf")
        ->required();
    analyze->add_option("--order", an.order, "network order n");
    analyze->add_option("--unit", an.unit, "distribution unit k");
    analyze->add_option("--alpha", an.alpha, "security parameter");
    analyze->add_option("--beta", an.beta, "traffic pattern exponent in [1,2]");
    analyze->add_option("--nodes", an.nodes, "network size N");
    analyze->add_option("--lgq", an.lg_q, "field element width in bits");
    analyze->add_option("--model", an.model, "memory model m1|m2|m3|m3exact|all");
    analyze->add_option("--policy", an.policy, "flat|doubling");
    analyze->add_option("--comparison-cost", an.comparison_cost,
                        "id comparison cost c");
    analyze->add_option("--word-model", an.word_model,
                        "schoolbook64|karatsuba64|mixed16x64");
    analyze->add_option("--nc-step", an.nc_step, "resiliency sweep step");
    analyze->add_option("--format", an.format, "csv|json|plain");
    analyze->add_option("--out", an.out, "output path (default stdout)");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo validation");
    SimulateArgs si;
    simulate
        ->add_option("--what", si.what,
                     "same-zone|compromise-random|compromise-selective|blocked|"
                     "agreement")
        ->required();
    simulate->add_option("--deployment", si.deployment, "deployment document")
        ->required();
    simulate->add_option("--trials", si.trials, "trial count");
    simulate->add_option("--seed", si.seed, "simulation seed");
    simulate->add_option("--zone-order", si.zone_order, "order z for same-zone");
    simulate->add_option("--nc", si.nc, "compromised node count");
    simulate->add_option("--zone", si.zone, "target zone index");
    simulate->add_option("--budget", si.budget, "selective compromise budget");
    simulate->add_option("--broken-order", si.broken_order, "broken polynomial order");
    simulate->add_option("--beta", si.beta, "traffic pattern exponent");
    simulate->add_option("--format", si.format, "csv|json|plain");
    simulate->add_option("--out", si.out, "output path (default stdout)");

    // compare
    auto* compare = app.add_subcommand("compare", "Cross-scheme connectivity");
    CompareArgs co;
    compare->add_option("--scheme", co.scheme, "hgbs|gbs|gbs3d|plat|eg|cps|ddhv")
        ->required();
    compare->add_option("--nodes", co.params.N, "network size N");
    compare->add_option("--pool", co.params.P, "EG key pool size P");
    compare->add_option("--ring", co.params.k, "EG key ring size k");
    compare->add_option("--zone-size", co.params.m, "CPS zone population m");
    compare->add_option("--spaces", co.params.omega, "DDHV key space count");
    compare->add_option("--picks", co.params.tau, "DDHV spaces per node");
    compare->add_option("--format", co.format, "csv|json|plain");
    compare->add_option("--out", co.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
        if (deploy->parsed())
            return run_deploy(d_order, d_unit, d_alpha, d_policy, d_modulus,
                              d_truncate_set ? std::optional<unsigned>(d_truncate)
                                             : std::nullopt,
                              d_seed, d_out);
        if (key->parsed())
            return run_key(k_dep, k_i, k_j, k_relay,
                           k_seed_set ? std::optional<std::uint64_t>(k_seed)
                                      : std::nullopt);
        if (analyze->parsed()) return run_analyze(an);
        if (simulate->parsed()) return run_simulate(si);
        if (compare->parsed()) return run_compare(co);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
