#include "app.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "bench.hpp"
#include "mhsum/errors.hpp"
#include "mhsum/mhs.hpp"
#include "mhsum/nested_sum.hpp"
#include "mhsum/random_grid.hpp"
#include "mhsum/report.hpp"
#include "mhsum/series_checks.hpp"
#include "mhsum/text_syntax.hpp"
#include "mhsum/verify.hpp"

namespace mhsum::cli {

namespace {

using json = nlohmann::ordered_json;

const std::map<std::string, Identity> kIdentities{
    {"mhs-duality", Identity::mhs_duality},   {"c-duality", Identity::c_duality},
    {"difference-formula", Identity::difference_formula}, {"recurrence", Identity::recurrence},
    {"shift", Identity::shift},               {"egf-suite", Identity::egf_suite},
};

const std::map<std::string, Format> kFormats{
    {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

std::string vector_text(const std::vector<Rational>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].to_string();
    return out + ")";
}

json vector_json(const std::vector<Rational>& v) {
    json arr = json::array();
    for (const auto& r : v) arr.push_back(r.to_string());
    return arr;
}

MultiIndex require_mu(const RunConfig& cfg) {
    if (!cfg.mu) throw std::invalid_argument("--mu is required");
    return MultiIndex::parse(*cfg.mu);
}

std::uint64_t require_single_n(const RunConfig& cfg) {
    if (!cfg.n) throw std::invalid_argument("--n is required");
    const auto values = parse_natural_list(*cfg.n);
    if (values.size() != 1) throw std::invalid_argument("--n must be a single natural here");
    return values.front();
}

std::vector<std::uint64_t> box_for(std::size_t arity, const std::optional<std::string>& extents,
                                   const std::optional<std::uint64_t>& nmax, std::uint64_t default_nmax,
                                   const char* flag) {
    if (extents) {
        auto box = parse_natural_list(*extents);
        if (box.size() != arity)
            throw std::invalid_argument(std::string(flag) + " needs " + std::to_string(arity) + " extents");
        for (auto e : box)
            if (e == 0) throw std::invalid_argument(std::string(flag) + " extents must be >= 1");
        return box;
    }
    return uniform_box(arity, nmax.value_or(default_nmax));
}

std::vector<NestedSumSpec> specs_for(const RunConfig& cfg) {
    if (cfg.x) return {parse_spec(*cfg.x, cfg.t)};
    GridRandom rng(cfg.seed);
    std::vector<NestedSumSpec> specs;
    for (std::uint64_t i = 0; i < cfg.count; ++i) specs.push_back(rng.spec_up_to(3, 3));
    return specs;
}

std::vector<Report> shift_reports(const RunConfig& cfg, const SweepOptions& opts) {
    std::vector<Report> reports;
    if (cfg.x) {
        const auto spec = parse_spec(*cfg.x, cfg.t);
        if (!cfg.subset) throw std::invalid_argument("--subset is required with --x for the shift identity");
        std::vector<std::size_t> subset;
        for (auto s : parse_natural_list(*cfg.subset)) {
            if (s == 0) throw std::invalid_argument("--subset slots are 1-based");
            subset.push_back(static_cast<std::size_t>(s - 1));
        }
        reports.push_back(verify_shift_identity(spec, subset, Rational::parse(cfg.shift),
                                                box_for(spec.slots(), cfg.box, cfg.nmax, 3, "--box"), opts));
        return reports;
    }
    GridRandom rng(cfg.seed);
    for (std::uint64_t i = 0; i < cfg.count; ++i) {
        if (i % 2 == 0) {
            // Slot pairs (i, r+i) of the complemented spec sum to (1, ..., 1).
            const std::size_t r = 1 + rng.below(2);
            const auto doubled = with_complements(rng.spec(r, 1 + rng.below(2)));
            const std::size_t slot = rng.below(r);
            reports.push_back(verify_shift_identity(doubled, {slot, slot + r}, Rational(1),
                                                    uniform_box(2 * r, cfg.nmax.value_or(2)), opts));
        } else {
            const std::size_t r = 1 + rng.below(3);
            std::vector<std::size_t> subset;
            for (std::size_t s = 0; s < r; ++s)
                if (rng.below(2) == 0 || (s + 1 == r && subset.empty())) subset.push_back(s);
            const Rational total = rng.small_rational();
            const auto spec = rng.spec_with_constant_sum(r, 1 + rng.below(3), subset, total);
            reports.push_back(verify_shift_identity(spec, subset, total, uniform_box(r, cfg.nmax.value_or(3)), opts));
        }
    }
    return reports;
}

std::vector<Report> verify_reports(const RunConfig& cfg) {
    const SweepOptions opts{cfg.guard, cfg.workers};
    std::vector<Report> reports;
    switch (cfg.identity) {
        case Identity::mhs_duality:
            if (cfg.mu) {
                reports.push_back(verify_mhs_duality(MultiIndex::parse(*cfg.mu), cfg.nmax.value_or(8)));
            } else {
                for (std::uint64_t w = 1; w <= cfg.weight; ++w)
                    for (const auto& mu : multi_indices_of_weight(w))
                        reports.push_back(verify_mhs_duality(mu, cfg.nmax.value_or(8)));
            }
            break;
        case Identity::c_duality:
            for (const auto& spec : specs_for(cfg))
                reports.push_back(verify_duality(spec, box_for(spec.slots(), cfg.box, cfg.nmax, 3, "--box"), opts));
            break;
        case Identity::difference_formula:
            for (const auto& spec : specs_for(cfg))
                reports.push_back(verify_difference_formula(spec, box_for(spec.slots(), cfg.box, cfg.nmax, 2, "--box"),
                                                            box_for(spec.slots(), cfg.kbox, cfg.kmax, 2, "--kbox"), opts));
            break;
        case Identity::recurrence:
            for (const auto& spec : specs_for(cfg))
                reports.push_back(verify_recurrence(spec, box_for(spec.slots(), cfg.box, cfg.nmax, 4, "--box"), opts));
            break;
        case Identity::shift:
            reports = shift_reports(cfg, opts);
            break;
        case Identity::egf_suite:
            reports = run_series_suite(cfg.seed, cfg.degree, static_cast<unsigned>(cfg.count));
            break;
    }
    return reports;
}

int emit_reports(const RunConfig& cfg, const std::vector<Report>& reports, std::ostream& out, std::ostream& err) {
    std::size_t total = 0, failures = 0;
    for (const auto& r : reports) {
        total += r.comparisons.size();
        failures += r.failures();
    }
    switch (cfg.format) {
        case Format::text:
            for (const auto& r : reports) out << report_to_text(r);
            out << (failures == 0 ? "all " : "") << (total - failures) << "/" << total
                << " comparisons equal across " << reports.size() << " report(s)\n";
            break;
        case Format::json:
            out << reports_to_json(reports) << "\n";
            break;
        case Format::csv:
            for (std::size_t i = 0; i < reports.size(); ++i) out << report_to_csv(reports[i], i == 0);
            break;
    }
    if (failures == 0) return kExitOk;
    for (const auto& r : reports)
        for (const auto& c : r.comparisons)
            if (!c.equal())
                err << "FAIL [" << r.identity << "] " << r.subject << " at " << format_index(c.index) << ": "
                    << c.lhs << " != " << c.rhs << "\n";
    return kExitIdentityFailure;
}

std::vector<std::uint64_t> bench_ladder(const RunConfig& cfg) {
    if (cfg.ladder) return parse_natural_list(*cfg.ladder);
    const std::uint64_t top = cfg.nmax.value_or(40);
    std::vector<std::uint64_t> ladder;
    for (std::uint64_t step = 1; step <= 4; ++step) ladder.push_back(std::max<std::uint64_t>(1, top * step / 4));
    ladder.erase(std::unique(ladder.begin(), ladder.end()), ladder.end());
    return ladder;
}

int run_bench_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    NestedSumSpec spec = [&] {
        if (cfg.x) return parse_spec(*cfg.x, cfg.t);
        if (cfg.depth == 0) throw std::invalid_argument("--depth must be positive");
        GridRandom rng(cfg.seed);
        return NestedSumSpec(rng.spec(1, cfg.depth).xblocks(), ParamVector(cfg.depth - 1, Rational(1)));
    }();
    const auto rows = run_bench(spec, bench_ladder(cfg), cfg.repeats, cfg.guard);
    if (cfg.format == Format::json) {
        json j;
        j["spec"] = spec.to_string();
        auto& arr = j["rows"] = json::array();
        for (const auto& r : rows)
            arr.push_back({{"n", r.n}, {"direct_seconds", r.direct_seconds}, {"recursive_seconds", r.recursive_seconds},
                           {"speedup", r.speedup()}, {"summands", r.summands}, {"memo_entries", r.memo_entries},
                           {"equal", r.equal}});
        out << j.dump(2) << "\n";
    } else {
        out << bench_to_csv(spec, rows);
    }
    bool ok = true;
    for (const auto& r : rows)
        if (!r.equal) {
            err << "FAIL [bench] direct and recursive values differ at n=" << r.n << "\n";
            ok = false;
        }
    return ok ? kExitOk : kExitIdentityFailure;
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    switch (cfg.command) {
        case Command::value: {
            const auto mu = require_mu(cfg);
            const auto n = require_single_n(cfg);
            const auto value = mhs_value(mu, n, cfg.guard);
            if (cfg.format == Format::json)
                out << json{{"mu", mu.to_string()}, {"n", n}, {"value", value.to_string()}}.dump() << "\n";
            else if (cfg.format == Format::csv)
                out << "mu,n,value\n\"" << mu.to_string() << "\"," << n << ',' << value << "\n";
            else
                out << value << "\n";
            return kExitOk;
        }
        case Command::dual: {
            const auto mu = require_mu(cfg);
            const auto dual = dual_index(mu);
            if (cfg.format == Format::json)
                out << json{{"mu", mu.to_string()}, {"dual", dual.to_string()}}.dump() << "\n";
            else if (cfg.format == Format::csv)
                out << "mu,dual\n\"" << mu.to_string() << "\",\"" << dual.to_string() << "\"\n";
            else
                out << dual.to_string() << "\n";
            return kExitOk;
        }
        case Command::embed: {
            const auto mu = require_mu(cfg);
            const auto e1 = embed_type1(mu), e2 = embed_type2(mu);
            if (cfg.format == Format::json)
                out << json{{"mu", mu.to_string()}, {"type1", vector_json(e1)}, {"type2", vector_json(e2)}}.dump()
                    << "\n";
            else if (cfg.format == Format::csv)
                out << "mu,type1,type2\n\"" << mu.to_string() << "\",\"" << vector_text(e1) << "\",\""
                    << vector_text(e2) << "\"\n";
            else
                out << "type1 " << vector_text(e1) << "\ntype2 " << vector_text(e2) << "\n";
            return kExitOk;
        }
        case Command::c: {
            if (!cfg.x) throw std::invalid_argument("--x is required");
            if (!cfg.n) throw std::invalid_argument("--n is required");
            const auto spec = parse_spec(*cfg.x, cfg.t);
            const Index n = parse_natural_list(*cfg.n);
            if (n.size() != spec.slots())
                throw std::invalid_argument("--n needs " + std::to_string(spec.slots()) + " entries");
            Rational value;
            if (cfg.method == "direct") {
                value = c_direct(spec, n, cfg.guard);
            } else if (cfg.method == "recursive") {
                value = c_recursive(spec, n);
            } else {
                value = c_direct(spec, n, cfg.guard);
                if (c_recursive(spec, n) != value) {
                    err << "FAIL [recurrence] " << spec.to_string() << " at " << format_index(n) << "\n";
                    return kExitIdentityFailure;
                }
            }
            if (cfg.format == Format::json)
                out << json{{"spec", spec.to_string()}, {"index", n}, {"value", value.to_string()}}.dump() << "\n";
            else if (cfg.format == Format::csv)
                out << "spec,index,value\n\"" << spec.to_string() << "\",\"" << format_index(n) << "\"," << value
                    << "\n";
            else
                out << value << "\n";
            return kExitOk;
        }
        case Command::verify:
            return emit_reports(cfg, verify_reports(cfg), out, err);
        case Command::bench:
            return run_bench_command(cfg, out, err);
    }
    return kExitUsage;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
    sub->add_option("--guard", cfg.guard, "Summand limit for direct enumeration");
}

}  // namespace

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(config, out, err);
    } catch (const GuardExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Exact multiple harmonic sums, nested-sum duality and difference identities", "mhsum"};
    app.require_subcommand(1);

    auto* s = app.add_subcommand("s", "Multiple harmonic sum s_mu(n)");
    s->add_option("--mu", cfg.mu, "Multi-index, e.g. \"(1,2,3)\"")->required();
    s->add_option("--n", cfg.n, "Upper index n")->required();
    add_common(s, cfg);

    auto* dual = app.add_subcommand("dual", "Dual multi-index mu*");
    dual->add_option("--mu", cfg.mu, "Multi-index")->required();
    add_common(dual, cfg);

    auto* embed = app.add_subcommand("embed", "0/1 KT parameter vectors reproducing s_mu");
    embed->add_option("--mu", cfg.mu, "Multi-index")->required();
    add_common(embed, cfg);

    auto* c = app.add_subcommand("c", "Nested sum c^{t}_{x_1;...;x_r}(n_1,...,n_r)");
    c->add_option("--x", cfg.x, "x-blocks, e.g. \"1/2,1/3;0,1\"")->required();
    c->add_option("--t", cfg.t, "Shifts t_1..t_{p-1}, e.g. \"2\"");
    c->add_option("--n", cfg.n, "Index vector, e.g. \"2,1\"")->required();
    c->add_option("--method", cfg.method, "direct | recursive | both")
        ->check(CLI::IsMember({"direct", "recursive", "both"}));
    add_common(c, cfg);

    auto* verify = app.add_subcommand("verify", "Check an identity on a box of indices");
    verify->add_option("--identity", cfg.identity, "Identity to check")
        ->required()
        ->transform(CLI::CheckedTransformer(kIdentities));
    verify->add_option("--mu", cfg.mu, "Multi-index (mhs-duality); default sweeps all weights <= --weight");
    verify->add_option("--weight", cfg.weight, "Largest weight for the mhs-duality sweep");
    verify->add_option("--x", cfg.x, "x-blocks; default draws --count random specs from --seed");
    verify->add_option("--t", cfg.t, "Shifts");
    verify->add_option("--nmax", cfg.nmax, "Largest index on every axis");
    verify->add_option("--box", cfg.box, "Box extents per axis, e.g. \"4,3\"");
    verify->add_option("--kmax", cfg.kmax, "Largest difference order (difference-formula)");
    verify->add_option("--kbox", cfg.kbox, "Difference-order extents (difference-formula)");
    verify->add_option("--subset", cfg.subset, "1-based slots for the shift identity, e.g. \"1,3\"");
    verify->add_option("--c", cfg.shift, "Constant c of the shift identity");
    verify->add_option("--seed", cfg.seed, "Seed for random parameter grids");
    verify->add_option("--count", cfg.count, "Number of random specs / suite trials");
    verify->add_option("--degree", cfg.degree, "Truncation degree for egf-suite");
    verify->add_option("--workers", cfg.workers, "Worker threads per sweep");
    add_common(verify, cfg);

    auto* bench = app.add_subcommand("bench", "Time direct enumeration against the depth recurrence");
    bench->add_option("--x", cfg.x, "x-blocks (default: random, r=1)");
    bench->add_option("--t", cfg.t, "Shifts");
    bench->add_option("--depth", cfg.depth, "Depth p of the random spec");
    bench->add_option("--nmax", cfg.nmax, "Top of the n ladder (default 40)");
    bench->add_option("--ladder", cfg.ladder, "Explicit n ladder, e.g. \"10,20,40\"");
    bench->add_option("--repeats", cfg.repeats, "Timing repetitions (best is kept)");
    bench->add_option("--seed", cfg.seed, "Seed for the random x");
    add_common(bench, cfg);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return kExitUsage;
    }

    if (app.got_subcommand(s)) cfg.command = Command::value;
    else if (app.got_subcommand(dual)) cfg.command = Command::dual;
    else if (app.got_subcommand(embed)) cfg.command = Command::embed;
    else if (app.got_subcommand(c)) cfg.command = Command::c;
    else if (app.got_subcommand(verify)) cfg.command = Command::verify;
    else cfg.command = Command::bench;

    return execute(cfg, out, err);
}

}  // namespace mhsum::cli
