#include "cli.hpp"

#include "rhnn/dynamics.hpp"
#include "rhnn/io.hpp"
#include "rhnn/synthesis.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <sstream>

namespace rhnn::cli {

namespace {

struct usage_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct verification_failed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ScheduleFlags {
    std::string mode = "parallel";
    std::string order = "cyclic";
    std::uint64_t seed = 0;
    std::string layers;
    std::uint64_t max_steps = default_max_steps;

    void add_to(CLI::App& cmd) {
        cmd.add_option("--mode", mode, "Update mode")->check(CLI::IsMember({"serial", "parallel", "layered"}));
        cmd.add_option("--order", order, "Serial visiting order")->check(CLI::IsMember({"cyclic", "random"}));
        cmd.add_option("--seed", seed, "Seed for random serial order and sampling");
        cmd.add_option("--layers", layers, "Layer partition, e.g. 1-3,4-7 (1-based)");
        cmd.add_option("--max-steps", max_steps, "Tick budget per trajectory")->check(CLI::PositiveNumber);
    }

    io::ScheduleInfo build(std::size_t n) const {
        try {
            switch (parse_update_mode(mode)) {
                case UpdateMode::parallel:
                    return {UpdateSchedule::parallel(), ""};
                case UpdateMode::serial:
                    if (order == "random") return {UpdateSchedule::serial_random(n, seed), "random"};
                    return {UpdateSchedule::serial_cyclic(n), "cyclic"};
                case UpdateMode::layered:
                    if (layers.empty()) throw usage_failure("--mode layered requires --layers");
                    return {UpdateSchedule::layered(LayerPartition::parse(layers, n)), ""};
            }
        } catch (const std::logic_error& e) {
            throw usage_failure(e.what());
        }
        throw usage_failure("unknown mode");
    }
};

std::string kind_of(const io::NetworkFile& file) {
    if (std::holds_alternative<IntegerNetwork>(file.network)) return "integer";
    if (std::holds_alternative<Network>(file.network)) return "real";
    return "complex";
}

std::vector<Label> parse_label_list(const std::string& text) {
    std::vector<Label> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(tok, &pos);
        } catch (const std::exception&) {
            pos = std::string::npos;
        }
        if (pos != tok.size() || tok.empty() || tok.front() == '-')
            throw io::malformed_input("bad state label '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

void print_trajectory_summary(std::ostream& out, std::size_t tail, std::size_t ticks_per_round,
                              const std::optional<Cycle>& cycle, std::uint64_t max_steps) {
    out << "tail: " << tail << " ticks";
    if (ticks_per_round > 1) out << " (" << tail / ticks_per_round << " rounds of " << ticks_per_round << ")";
    out << "\n";
    if (cycle) {
        out << "cycle: " << cycle->str() << "\n";
        out << "cycle length: " << cycle->length() << "\n";
    } else {
        out << "cycle: none (budget of " << max_steps << " ticks exhausted)\n";
    }
}

// ---- run -----------------------------------------------------------------

struct RunArgs {
    std::string network;
    std::string init;
    ScheduleFlags schedule;
    std::string trace;
};

int cmd_run(const RunArgs& a, std::ostream& out) {
    const io::NetworkFile file = io::load_network_file(a.network);
    const std::size_t n = file.order();
    const io::ScheduleInfo sched = a.schedule.build(n);
    out << "network: " << a.network << " (n=" << n << ", " << kind_of(file) << ")\n";
    out << "schedule: " << sched.schedule.describe() << "\n";

    if (const auto* cnet = std::get_if<ComplexNetwork>(&file.network)) {
        const auto labels = parse_label_list(a.init);
        if (labels.size() != 1) throw io::malformed_input("complex runs take a single decimal --init label");
        const ComplexBipolarState v0 = [&] {
            try {
                return decode_complex_state(labels.front(), n);
            } catch (const std::out_of_range& e) {
                throw io::malformed_input(e.what());
            }
        }();
        const auto traj = iterate_until_cycle(*cnet, v0, sched.schedule, a.schedule.max_steps);
        out << "initial: " << labels.front() << "\n";
        print_trajectory_summary(out, traj.tail_length, traj.ticks_per_round, traj.cycle, a.schedule.max_steps);
        if (!a.trace.empty()) {
            // Complex energy is a nonstandard diagnostic: Re(v^H W v).
            std::string csv = "tick,state_decimal,energy\n";
            for (std::size_t t = 0; t < traj.states.size(); ++t)
                csv += std::to_string(t) + "," + std::to_string(traj.labels[t]) + "," +
                       io::format_number(complex_energy_diagnostic(*cnet, traj.states[t])) + "\n";
            io::write_text_file(a.trace, csv);
        }
        return ok;
    }

    BipolarState v0;
    try {
        if (a.init.find(',') != std::string::npos) {
            v0 = parse_bipolar(a.init);
        } else {
            const auto labels = parse_label_list(a.init);
            v0 = encode_state(labels.front(), n, file.bit_order);
        }
    } catch (const std::logic_error& e) {
        throw io::malformed_input(std::string("--init: ") + e.what());
    }
    if (v0.size() != n) throw io::malformed_input("initial state length does not match n=" + std::to_string(n));

    std::visit(
        [&](const auto& net) {
            using N = std::decay_t<decltype(net)>;
            if constexpr (!std::is_same_v<N, ComplexNetwork>) {
                const auto traj = iterate_until_cycle(net, v0, sched.schedule, a.schedule.max_steps, file.bit_order);
                out << "initial: " << decode_state(v0, file.bit_order) << "\n";
                print_trajectory_summary(out, traj.tail_length, traj.ticks_per_round, traj.cycle,
                                         a.schedule.max_steps);
                if (!a.trace.empty()) io::write_text_file(a.trace, io::trace_csv(energy_trace(net, traj)));
            }
        },
        file.network);
    if (!a.trace.empty()) out << "trace: " << a.trace << "\n";
    return ok;
}

// ---- sweep ---------------------------------------------------------------

struct SweepArgs {
    std::string network;
    ScheduleFlags schedule;
    std::string init = "auto";
    Label cap = default_initial_cap;
    Label lo = 0;
    std::string out;
    bool members = false;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
    const io::NetworkFile file = io::load_network_file(a.network);
    const std::size_t n = file.order();
    const std::size_t width = file.is_complex() ? 2 * n : n;
    if (width > max_label_width) throw io::malformed_input("network too large for decimal state labels");
    const io::ScheduleInfo sched = a.schedule.build(n);

    SweepConfig config;
    config.schedule = sched.schedule;
    config.max_steps = a.schedule.max_steps;
    config.bit_order = file.bit_order;
    const Label space = state_space_size(width);
    if (a.init == "all") config.initials = Exhaustive{};
    else if (a.init == "range") config.initials = LabelRange{a.lo, std::min(space, a.lo + a.cap)};
    else if (a.init == "sample") config.initials = RandomSample{static_cast<std::size_t>(std::min(a.cap, space)), a.schedule.seed};
    else config.initials = space <= a.cap ? InitialSource{Exhaustive{}} : InitialSource{LabelRange{0, a.cap}};
    if (const auto* r = std::get_if<LabelRange>(&config.initials); r && r->lo >= space)
        throw io::malformed_input("--lo " + std::to_string(r->lo) + " is outside the state space");

    io::SweepResult result;
    result.network_path = a.network;
    result.network_checksum = io::network_checksum(file);
    result.n = n;
    result.kind = kind_of(file);
    result.bit_order = file.bit_order;
    result.schedule = sched;
    result.initials = describe(config.initials);
    result.max_steps = config.max_steps;
    result.include_members = a.members;

    if (const auto* cnet = std::get_if<ComplexNetwork>(&file.network)) {
        result.inventory = sweep(*cnet, config);
        result.profiles.assign(result.inventory.cycles.size(), std::nullopt);
    } else {
        std::visit(
            [&](const auto& net) {
                using N = std::decay_t<decltype(net)>;
                if constexpr (!std::is_same_v<N, ComplexNetwork>) {
                    result.inventory = sweep(net, config);
                    for (const auto& c : result.inventory.cycles)
                        result.profiles.push_back(cycle_energy_profile(net, c, config.schedule, file.bit_order));
                }
            },
            file.network);
    }
    result.locality = hamming_locality(result.inventory, width);

    const auto& inv = result.inventory;
    out << "network: " << a.network << " (n=" << n << ", " << result.kind << ")\n";
    out << "schedule: " << sched.schedule.describe() << "\n";
    out << "initials: " << result.initials << "\n";
    out << "cycles: " << inv.cycles.size() << "\n";
    for (const auto& [len, count] : inv.length_histogram()) out << "  length " << len << ": " << count << "\n";
    for (std::size_t k = 0; k < inv.cycles.size(); ++k) {
        out << "  " << inv.cycles[k].str() << "  basin=" << inv.basins[k].size();
        if (result.profiles[k]) out << "  energy=" << result.profiles[k]->str();
        out << "\n";
    }
    out << "unresolved: " << inv.unresolved.size() << "\n";
    if (!a.out.empty()) {
        io::write_text_file(a.out, io::serialize_sweep_result(result));
        out << "wrote: " << a.out << "\n";
    }
    return ok;
}

// ---- synthesize ----------------------------------------------------------

int cmd_synthesize(const std::string& spec_path, const std::string& out_path, std::ostream& out, std::ostream& err) {
    const io::PatternSpecFile spec = io::load_pattern_spec_file(spec_path);
    Matrix<Rational> w;
    try {
        w = synthesize_mixed(spec.stable, spec.antistable, spec.n);
    } catch (const not_orthogonal_error& e) {
        auto label = [&](std::size_t k) {
            const auto& p = k < spec.stable.size() ? spec.stable[k].pattern : spec.antistable[k - spec.stable.size()].pattern;
            return (k < spec.stable.size() ? "stable[" + std::to_string(k) : "antistable[" + std::to_string(k - spec.stable.size())) +
                   "]=" + p.str();
        };
        throw io::malformed_input("non-orthogonal patterns " + label(e.first()) + " and " + label(e.second()) +
                                  " (dot product " + std::to_string(e.dot()) + ")");
    } catch (const std::invalid_argument& e) {
        throw io::malformed_input(e.what());
    }

    std::vector<BipolarState> stable, anti;
    for (const auto& s : spec.stable) stable.push_back(s.pattern);
    for (const auto& s : spec.antistable) anti.push_back(s.pattern);
    const LandscapeReport report = verify_landscape(w, stable, anti);

    io::NetworkFile file{std::visit([](auto&& net) -> io::LoadedNetwork { return net; }, to_network(w)),
                         spec.bit_order};
    const std::string text = io::serialize_network_file(file);
    if (out_path.empty()) out << text;
    else io::write_text_file(out_path, text);

    std::ostream& log = out_path.empty() ? err : out;
    for (const auto& e : report.entries) {
        log << (e.role == PatternRole::stable ? "stable " : "antistable ") << e.pattern.str();
        if (e.label && spec.n <= max_label_width) log << " label=" << *e.label;
        log << " " << (e.verified ? "verified" : "FAILED");
        if (e.eigenvalue) log << " eigenvalue=" << io::format_number(*e.eigenvalue);
        log << "\n";
    }
    if (!report.all_verified()) throw verification_failed("synthesized matrix does not realize every pattern");
    return ok;
}

// ---- gen -----------------------------------------------------------------

struct GenArgs {
    std::size_t n = 0;
    std::string polarity = "mixed";
    std::int64_t magnitude = 20;
    std::uint64_t seed = 0;
    std::string out;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
    io::NetworkFile file{random_network(a.n, parse_polarity(a.polarity), a.magnitude, a.seed), BitOrder::msb_first};
    const std::string text = io::serialize_network_file(file);
    if (a.out.empty()) out << text;
    else io::write_text_file(a.out, text);
    return ok;
}

// ---- verify --------------------------------------------------------------

int cmd_verify(const std::string& path, const std::string& stable_arg, const std::string& anti_arg,
               std::ostream& out) {
    const io::NetworkFile file = io::load_network_file(path);
    if (file.is_complex()) throw io::malformed_input("verify supports real networks only");
    const std::size_t n = file.order();
    auto states = [&](const std::string& arg) {
        std::vector<BipolarState> v;
        if (arg.empty()) return v;
        for (Label l : parse_label_list(arg)) {
            try {
                v.push_back(encode_state(l, n, file.bit_order));
            } catch (const std::out_of_range& e) {
                throw io::malformed_input(e.what());
            }
        }
        return v;
    };
    const auto stable = states(stable_arg);
    const auto anti = states(anti_arg);
    if (stable.empty() && anti.empty()) throw usage_failure("verify needs --stable and/or --antistable labels");

    bool all = true;
    std::visit(
        [&](const auto& net) {
            using N = std::decay_t<decltype(net)>;
            if constexpr (!std::is_same_v<N, ComplexNetwork>) {
                LandscapeReport report = verify_landscape(net.weights(), stable, anti);
                for (auto& e : report.entries) {
                    // Stable claims honour the file's thresholds.
                    if (e.role == PatternRole::stable) e.verified = is_stable(net, e.pattern);
                    all = all && e.verified;
                    out << (e.role == PatternRole::stable ? "stable " : "antistable ")
                        << decode_state(e.pattern, file.bit_order) << ": " << (e.verified ? "verified" : "FAILED");
                    if (e.eigenvalue) out << " (eigenvector, lambda=" << io::format_number(*e.eigenvalue) << ")";
                    out << "\n";
                }
            }
        },
        file.network);
    return all ? ok : verification_failure;
}

// ---- polarity ------------------------------------------------------------

struct PolarityArgs {
    std::size_t n = 7;
    std::string polarity = "nonneg";
    std::size_t trials = 100;
    std::int64_t magnitude = 20;
    ScheduleFlags schedule;
    std::string counterexamples;
};

int cmd_polarity(const PolarityArgs& a, std::ostream& out) {
    const io::ScheduleInfo sched = a.schedule.build(a.n);
    const PolarityReport r = polarity_experiment(a.n, parse_polarity(a.polarity), a.trials, sched.schedule,
                                                 a.schedule.seed, a.magnitude, a.schedule.max_steps);
    out << "polarity: " << to_string(r.polarity) << "  n=" << r.n << "  trials=" << r.trials << "\n";
    out << "schedule: " << sched.schedule.describe() << "\n";
    for (const auto& [len, count] : r.cycle_length_histogram) out << "  length " << len << ": " << count << "\n";
    out << "networks with max cycle length <= 2: " << r.networks_max_len_le2 << "/" << r.trials << "\n";
    out << "networks with a cycle of length >= 2: " << r.networks_with_long_cycles << "/" << r.trials << "\n";
    out << "networks with unresolved initials: " << r.networks_with_unresolved << "\n";
    out << "violations: " << r.violations.size() << "\n";
    if (!a.counterexamples.empty()) {
        io::write_text_file(a.counterexamples, io::serialize_counterexamples(r));
        out << "wrote: " << a.counterexamples << "\n";
    }
    return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Recurrent Hopfield network dynamics toolkit", "rhnn"};
    app.require_subcommand(1);

    RunArgs run_args;
    auto* run_cmd = app.add_subcommand("run", "Iterate one initial state until it enters a cycle");
    run_cmd->add_option("network", run_args.network, "Network file")->required();
    run_cmd->add_option("--init", run_args.init, "Decimal label or +1/-1 vector")->required();
    run_args.schedule.add_to(*run_cmd);
    run_cmd->add_option("--trace", run_args.trace, "Write tick,state_decimal,energy CSV");

    SweepArgs sweep_args;
    auto* sweep_cmd = app.add_subcommand("sweep", "Build the cycle inventory over a set of initial states");
    sweep_cmd->add_option("network", sweep_args.network, "Network file")->required();
    sweep_args.schedule.add_to(*sweep_cmd);
    sweep_cmd->add_option("--init", sweep_args.init, "Initial states")
        ->check(CLI::IsMember({"auto", "all", "range", "sample"}));
    sweep_cmd->add_option("--cap", sweep_args.cap, "Initial-state cap (range/sample size)")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--lo", sweep_args.lo, "First label for --init range");
    sweep_cmd->add_option("--out", sweep_args.out, "Write sweep result JSON");
    sweep_cmd->add_flag("--members", sweep_args.members, "Include basin members in the result file");

    std::string spec_path, synth_out;
    auto* synth_cmd = app.add_subcommand("synthesize", "Build a weight matrix from stable/anti-stable patterns");
    synth_cmd->add_option("spec", spec_path, "Pattern spec file")->required();
    synth_cmd->add_option("--out", synth_out, "Network file to write (stdout if omitted)");

    GenArgs gen_args;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random zero-diagonal integer network");
    gen_cmd->add_option("--n", gen_args.n, "Order")->required()->check(CLI::Range(1, int(max_label_width)));
    gen_cmd->add_option("--polarity", gen_args.polarity, "mixed | nonneg | nonpos")
        ->check(CLI::IsMember({"mixed", "nonneg", "nonpos"}));
    gen_cmd->add_option("--magnitude", gen_args.magnitude, "Largest |weight|")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--seed", gen_args.seed, "Seed");
    gen_cmd->add_option("--out", gen_args.out, "Network file to write (stdout if omitted)");

    std::string verify_path, verify_stable, verify_anti;
    auto* verify_cmd = app.add_subcommand("verify", "Check stable / anti-stable claims");
    verify_cmd->add_option("network", verify_path, "Network file")->required();
    verify_cmd->add_option("--stable", verify_stable, "Comma-separated decimal labels");
    verify_cmd->add_option("--antistable", verify_anti, "Comma-separated decimal labels");

    PolarityArgs pol_args;
    auto* pol_cmd = app.add_subcommand("polarity", "Cycle statistics over random networks of one polarity");
    pol_cmd->add_option("--n", pol_args.n, "Order")->check(CLI::Range(1, 20));
    pol_cmd->add_option("--polarity", pol_args.polarity, "mixed | nonneg | nonpos")
        ->check(CLI::IsMember({"mixed", "nonneg", "nonpos"}));
    pol_cmd->add_option("--trials", pol_args.trials, "Number of networks")->check(CLI::PositiveNumber);
    pol_cmd->add_option("--magnitude", pol_args.magnitude, "Largest |weight|")->check(CLI::PositiveNumber);
    pol_args.schedule.add_to(*pol_cmd);
    pol_cmd->add_option("--counterexamples", pol_args.counterexamples, "Write violating networks as JSON");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (*run_cmd) return cmd_run(run_args, out);
        if (*sweep_cmd) return cmd_sweep(sweep_args, out);
        if (*synth_cmd) return cmd_synthesize(spec_path, synth_out, out, err);
        if (*gen_cmd) return cmd_gen(gen_args, out);
        if (*verify_cmd) return cmd_verify(verify_path, verify_stable, verify_anti, out);
        if (*pol_cmd) return cmd_polarity(pol_args, out);
    } catch (const usage_failure& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const verification_failed& e) {
        err << "error: " << e.what() << "\n";
        return verification_failure;
    } catch (const io::malformed_input& e) {
        err << "error: " << e.what() << "\n";
        return malformed_input;
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << "\n";
        return malformed_input;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return malformed_input;
    }
    return usage_error;
}

}  // namespace rhnn::cli
