/*
   Copyright 2026 the spirs authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SPIRS_CLI_HPP
#define SPIRS_CLI_HPP

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "spirs/analysis.hpp"
#include "spirs/io.hpp"
#include "spirs/irs.hpp"
#include "spirs/spi_solver.hpp"

namespace spirs::cli {

// exit codes: 0 success, 1 decoding failure (a legitimate outcome),
// 2 usage / parse / input errors
inline constexpr int kOk = 0;
inline constexpr int kDecodingFailure = 1;
inline constexpr int kUsage = 2;

namespace detail {

using nlohmann::json;

inline std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Errc::IoError, "cannot open '" + path + "'");
    return in;
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) raise(Errc::IoError, "cannot write '" + path.string() + "'");
    out << content;
}

inline SolverVariant parse_variant(const std::string& s) {
    if (s == "rbm") return SolverVariant::rbm;
    if (s == "monomial") return SolverVariant::monomial;
    if (s == "qs") return SolverVariant::quotient_saving;
    if (s == "rs") return SolverVariant::remainder_saving;
    raise(Errc::ParseError, "unknown variant '" + s + "' (rbm|monomial|qs|rs|auto)");
}

inline LocateStrategy parse_strategy(const std::string& s) {
    if (s == "spi-general") return LocateStrategy::spi_general;
    if (s == "spi-monomial") return LocateStrategy::spi_monomial;
    if (s == "fixed-general") return LocateStrategy::fixed_iterations_general;
    if (s == "fixed-monomial") return LocateStrategy::fixed_iterations_monomial;
    raise(Errc::ParseError,
          "unknown strategy '" + s + "' (spi-general|spi-monomial|fixed-general|fixed-monomial)");
}

inline std::vector<long> parse_long_list(const std::string& s) {
    std::vector<long> out;
    for (const std::string& part : spirs::detail::split(s, ','))
        out.push_back(static_cast<long>(spirs::detail::parse_uint(part, "list entry")));
    return out;
}

inline json poly_json(const Polynomial& p) {
    json a = json::array();
    for (std::uint32_t c : p.coeffs()) a.push_back(c);
    return a;
}

inline json rows_json(const ArrayWord& w) {
    json a = json::array();
    for (const auto& row : w.rows) a.push_back(row);
    return a;
}

struct SpiSolveArgs {
    std::string instance_path;
    std::string variant = "auto";
    std::string format = "text";
    bool trace = false;
    bool check_assertions = false;
};

inline int cmd_spi_solve(const SpiSolveArgs& args, std::ostream& out, std::ostream& err) {
    auto in = open_input(args.instance_path);
    SpiInstance inst = parse_spi_instance(in);
    SolveOptions opts;
    opts.check_assertions = args.check_assertions;
    if (args.trace) opts.trace = &err;
    SpiSolution sol =
        args.variant == "auto"
            ? (opts.variant = SolverVariant::monomial, solve_auto(inst, opts))
            : (opts.variant = parse_variant(args.variant), solve_spi(inst, opts));
    if (args.format == "json") {
        json j{{"lambda", poly_json(sol.lambda)},
               {"deg_lambda", sol.lambda.is_zero() ? -1 : sol.lambda.deg().value()},
               {"n_it", *sol.iterations},
               {"variant", args.variant}};
        out << j.dump() << '\n';
    } else {
        out << "lambda " << format_poly(sol.lambda) << '\n';
        out << "n_it " << *sol.iterations << '\n';
    }
    return kOk;
}

struct SpiMonomializeArgs {
    std::string instance_path;
    long u = -1;  // default: max(D, 1)
    std::string format = "text";
};

inline int cmd_spi_monomialize(const SpiMonomializeArgs& args, std::ostream& out, std::ostream&) {
    auto in = open_input(args.instance_path);
    SpiInstance inst = parse_spi_instance(in);
    long u = args.u >= 0 ? args.u : spi_default_u(inst);
    Monomialized mono = spi_monomialize(inst, u);
    if (args.format == "json") {
        json entries = json::array();
        for (const SpiEntry& e : mono.inst.entries)
            entries.push_back(json{{"b", poly_json(e.b)}, {"m", poly_json(e.m)}, {"tau", e.tau}});
        json j{{"field", format_field_spec(inst.field().spec())}, {"u", u}, {"entries", entries}};
        out << j.dump() << '\n';
    } else {
        out << "# monomialized with u=" << u << '\n' << format_spi_instance(mono.inst);
    }
    return kOk;
}

struct RsEncodeArgs {
    std::string code_path;
    std::string messages_path;
    std::string format = "text";
};

inline int cmd_rs_encode(const RsEncodeArgs& args, std::ostream& out, std::ostream&) {
    auto cin_ = open_input(args.code_path);
    CodeSpec code = parse_code_config(cin_);
    auto min_ = open_input(args.messages_path);
    std::vector<Polynomial> msgs = parse_messages(min_, code);
    ArrayWord w = encode(code, msgs);
    if (args.format == "json")
        out << json{{"codeword", rows_json(w)}}.dump() << '\n';
    else
        out << format_word(w);
    return kOk;
}

struct RsDecodeArgs {
    std::string code_path;
    std::string received_path;
    std::string strategy = "fixed-monomial";
    std::string recovery = "interp";
    std::string format = "text";
    bool check_assertions = false;
};

inline int cmd_rs_decode(const RsDecodeArgs& args, std::ostream& out, std::ostream&) {
    auto cin_ = open_input(args.code_path);
    CodeSpec code = parse_code_config(cin_);
    auto rin = open_input(args.received_path);
    ArrayWord received = parse_word(rin, code, WordRole::received);
    DecodeOptions opts;
    opts.strategy = parse_strategy(args.strategy);
    opts.check_assertions = args.check_assertions;
    if (args.recovery == "interp")
        opts.recovery = DecodeOptions::Recovery::interpolation;
    else if (args.recovery == "forney")
        opts.recovery = DecodeOptions::Recovery::forney;
    else
        raise(Errc::ParseError, "unknown recovery '" + args.recovery + "' (interp|forney)");

    ErrorReport rep = decode(code, received, opts);
    const bool ok = rep.status == ErrorReport::Status::corrected;
    if (args.format == "json") {
        json j{{"status", ok ? "corrected" : "decoding_failure"},
               {"lambda", poly_json(rep.locator)},
               {"support", rep.support},
               {"iterations", rep.iterations}};
        if (!ok) j["reason"] = rep.reason;
        if (ok) {
            j["corrected"] = rows_json(rep.corrected);
            json errs = json::array();
            for (const auto& [pos, v] : rep.error_values)
                errs.push_back(json{{"row", pos.first}, {"col", pos.second}, {"value", v}});
            j["errors"] = errs;
        }
        out << j.dump() << '\n';
    } else {
        out << "status " << (ok ? "corrected" : "decoding_failure") << '\n';
        if (!ok) out << "reason " << rep.reason << '\n';
        out << "lambda " << format_poly(rep.locator) << '\n';
        out << "support";
        for (long l : rep.support) out << ' ' << l;
        out << '\n';
        out << "iterations " << rep.iterations << '\n';
        if (ok) out << "corrected\n" << format_word(rep.corrected);
    }
    return ok ? kOk : kDecodingFailure;
}

struct RsSimulateArgs {
    std::string code_path;
    std::string t_list;
    long trials = 1000;
    std::uint64_t seed = 0;
    std::string error_model = "uniform";
    std::vector<std::string> strategies{"fixed-monomial"};
    std::string recovery = "interp";
    bool check_condition = false;
    bool zero_codeword = false;
    std::string format = "text";
};

inline int cmd_rs_simulate(const RsSimulateArgs& args, std::ostream& out, std::ostream&) {
    auto cin_ = open_input(args.code_path);
    CodeSpec code = parse_code_config(cin_);
    SimOptions base;
    base.trials = args.trials;
    base.seed = args.seed;
    base.check_condition = args.check_condition;
    base.zero_codeword = args.zero_codeword;
    if (args.recovery == "forney")
        base.recovery = DecodeOptions::Recovery::forney;
    else if (args.recovery != "interp")
        raise(Errc::ParseError, "unknown recovery '" + args.recovery + "'");
    if (args.error_model == "uniform") {
        base.model = ErrorModel::uniform;
    } else if (args.error_model.rfind("rank:", 0) == 0) {
        base.model = ErrorModel::rank_constrained;
        base.rank_r =
            static_cast<int>(spirs::detail::parse_uint(args.error_model.substr(5), "rank"));
    } else {
        raise(Errc::ParseError, "unknown error model '" + args.error_model + "' (uniform|rank:<r>)");
    }

    json jrows = json::array();
    if (args.format != "json")
        out << "t,strategy,trials,failures_condition,failures_decode,miscorrections,"
               "empirical_rate,ssb_bound,rv_radius_r1,seed,runtime_s\n";
    long total_decode_failures = 0, total_condition_failures = 0, total_miscorrections = 0;
    for (long t : parse_long_list(args.t_list)) {
        for (const std::string& sname : args.strategies) {
            SimOptions opts = base;
            opts.t = t;
            opts.strategy = parse_strategy(sname);
            SimReport rep = simulate(code, opts);
            total_decode_failures += rep.failures_decode;
            total_condition_failures += rep.failures_condition;
            total_miscorrections += rep.miscorrections;
            if (args.format == "json") {
                jrows.push_back(json{{"t", t},
                                     {"strategy", sname},
                                     {"trials", rep.trials},
                                     {"failures_condition", rep.failures_condition},
                                     {"failures_decode", rep.failures_decode},
                                     {"miscorrections", rep.miscorrections},
                                     {"empirical_rate", rep.empirical_rate},
                                     {"ssb_bound", rep.bound_applicable ? json(rep.bound_value) : json()},
                                     {"rv_radius_r1", rep.rv_radius_rank1},
                                     {"seed", rep.seed},
                                     {"runtime_s", rep.runtime_s}});
            } else {
                out << t << ',' << sname << ',' << rep.trials << ',' << rep.failures_condition
                    << ',' << rep.failures_decode << ',' << rep.miscorrections << ','
                    << rep.empirical_rate << ',';
                if (rep.bound_applicable)
                    out << rep.bound_value;
                else
                    out << "n/a";
                out << ',' << rep.rv_radius_rank1 << ',' << rep.seed << ',' << rep.runtime_s << '\n';
            }
        }
    }
    if (args.format == "json") {
        json j{{"rows", jrows},
               {"summary",
                json{{"failures_decode", total_decode_failures},
                     {"failures_condition", total_condition_failures},
                     {"miscorrections", total_miscorrections}}}};
        out << j.dump() << '\n';
    } else {
        out << "# summary: failures_decode=" << total_decode_failures
            << " failures_condition=" << total_condition_failures
            << " miscorrections=" << total_miscorrections << '\n';
    }
    return kOk;
}

struct GenFixturesArgs {
    std::string family;
    std::string out_dir;
    std::uint64_t seed = 1;
    long count = 100;
    std::string code_path;  // optional override for halfdist
};

inline CodeSpec default_gf8_code() {
    Field f(FieldSpec::binary_ext(3, 0xb));
    std::vector<std::uint32_t> beta;
    std::uint32_t a = 1;
    for (int l = 0; l < 7; ++l) {
        beta.push_back(a);
        a = (f.elem(a) * f.elem(2)).value();
    }
    return make_code(f, 7, 2, {3, 3}, std::move(beta));
}

inline CodeSpec default_gf16_code() {
    Field f(FieldSpec::binary_ext(4, 0x13));
    std::vector<std::uint32_t> beta;
    std::uint32_t a = 1;
    for (int l = 0; l < 15; ++l) {
        beta.push_back(a);
        a = (f.elem(a) * f.elem(2)).value();
    }
    return make_code(f, 15, 2, {7, 7}, std::move(beta));
}

inline int cmd_gen_fixtures(const GenFixturesArgs& args, std::ostream& out, std::ostream&) {
    namespace fs = std::filesystem;
    fs::path dir(args.out_dir);
    fs::create_directories(dir);

    if (args.family == "spi-small") {
        Field f5(FieldSpec::prime(5)), f7(FieldSpec::prime(7));
        std::string answers;
        for (long j = 0; j < args.count; ++j) {
            Rng rng = Rng::for_trial(args.seed, static_cast<std::uint64_t>(j));
            const Field& f = (j % 2 == 0) ? f5 : f7;
            SpiInstance inst = random_spi_instance(rng, f);
            char name[64];
            std::snprintf(name, sizeof name, "spi_small_%04ld.spi", j);
            write_file(dir / name, format_spi_instance(inst));
            answers += std::to_string(j) + " " + format_poly(spi_oracle(inst).lambda) + "\n";
        }
        write_file(dir / "spi_small_answers.txt", answers);
        out << "wrote " << args.count << " instances + answers to " << dir.string() << '\n';
        return kOk;
    }

    if (args.family == "halfdist") {
        CodeSpec code = default_gf8_code();
        if (!args.code_path.empty()) {
            auto in = open_input(args.code_path);
            code = parse_code_config(in);
        }
        write_file(dir / "halfdist_code.cfg", format_code_config(code));
        const FieldImpl* f = code.field.impl();
        long case_no = 0;
        const long tmax = (code.n - code.k_max) / 2;
        // every support of size <= tmax, a couple of value assignments each
        std::vector<std::vector<long>> supports{{}};
        for (long a = 0; a < code.n; ++a) {
            if (tmax >= 1) supports.push_back({a});
            for (long b = a + 1; b < code.n && tmax >= 2; ++b) supports.push_back({a, b});
        }
        for (const auto& sup : supports) {
            for (int rep = 0; rep < 2; ++rep) {
                Rng rng = Rng::for_trial(args.seed, static_cast<std::uint64_t>(case_no));
                std::vector<Polynomial> msgs;
                for (int i = 0; i < code.L; ++i) {
                    std::vector<std::uint32_t> c(
                        static_cast<std::size_t>(code.k[static_cast<std::size_t>(i)]));
                    for (auto& v : c) v = rng.field_elem(code.field);
                    msgs.emplace_back(code.field, std::move(c));
                }
                ArrayWord cw = encode(code, msgs);
                ArrayWord y = cw;
                y.role = WordRole::received;
                for (long l : sup) {
                    for (;;) {
                        bool nz = false;
                        for (int i = 0; i < code.L; ++i) {
                            std::uint32_t v = rng.field_elem(code.field);
                            auto& cell = y.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
                            cell = f->add(cw.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)], v);
                            if (v != 0) nz = true;
                        }
                        if (nz) break;
                    }
                }
                char rname[64], cname[64];
                std::snprintf(rname, sizeof rname, "halfdist_%04ld_received.txt", case_no);
                std::snprintf(cname, sizeof cname, "halfdist_%04ld_codeword.txt", case_no);
                write_file(dir / rname, format_word(y));
                write_file(dir / cname, format_word(cw));
                ++case_no;
            }
        }
        out << "wrote " << case_no << " half-distance cases to " << dir.string() << '\n';
        return kOk;
    }

    if (args.family == "ssb-grid") {
        CodeSpec code = default_gf16_code();
        write_file(dir / "ssb_code.cfg", format_code_config(code));
        std::string grid = "# t,trials,seed\n";
        for (long t = 1; t <= max_radius(code.n, code.L, code.k_max, code.k_sum); ++t)
            grid += std::to_string(t) + ",100000," + std::to_string(args.seed + static_cast<std::uint64_t>(t)) + "\n";
        write_file(dir / "ssb_grid.csv", grid);
        out << "wrote SSB sweep configs to " << dir.string() << '\n';
        return kOk;
    }

    raise(Errc::ParseError, "unknown fixture family '" + args.family + "' (spi-small|halfdist|ssb-grid)");
}

}  // namespace detail

/// Parse argv (without the program name) and dispatch. Structured output
/// goes to `out`, diagnostics to `err`.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"simultaneous partial-inverse solvers and interleaved Reed-Solomon decoding"};
    app.require_subcommand(1);

    auto* spi = app.add_subcommand("spi", "SPI problem tools");
    spi->require_subcommand(1);
    detail::SpiSolveArgs solve_args;
    auto* solve = spi->add_subcommand("solve", "solve an SPI instance");
    solve->add_option("--instance", solve_args.instance_path, "instance file")->required();
    solve->add_option("--variant", solve_args.variant, "rbm|monomial|qs|rs|auto");
    solve->add_flag("--trace", solve_args.trace, "dump per-iteration state to stderr");
    solve->add_flag("--check-assertions", solve_args.check_assertions, "verify loop invariants");
    solve->add_option("--format", solve_args.format, "text|json");

    detail::SpiMonomializeArgs mono_args;
    auto* mono = spi->add_subcommand("monomialize", "transform an instance to monomial moduli");
    mono->add_option("--instance", mono_args.instance_path, "instance file")->required();
    mono->add_option("--u", mono_args.u, "degree bound (default max(D,1))");
    mono->add_option("--format", mono_args.format, "text|json");

    auto* rs = app.add_subcommand("rs", "interleaved Reed-Solomon codec");
    rs->require_subcommand(1);
    detail::RsEncodeArgs enc_args;
    auto* enc = rs->add_subcommand("encode", "encode message rows");
    enc->add_option("--code", enc_args.code_path, "code config file")->required();
    enc->add_option("--messages", enc_args.messages_path, "message rows file")->required();
    enc->add_option("--format", enc_args.format, "text|json");

    detail::RsDecodeArgs dec_args;
    auto* dec = rs->add_subcommand("decode", "decode a received word");
    dec->add_option("--code", dec_args.code_path, "code config file")->required();
    dec->add_option("--received", dec_args.received_path, "received word file")->required();
    dec->add_option("--strategy", dec_args.strategy,
                    "spi-general|spi-monomial|fixed-general|fixed-monomial");
    dec->add_option("--recovery", dec_args.recovery, "interp|forney");
    dec->add_flag("--check-assertions", dec_args.check_assertions, "verify solver invariants");
    dec->add_option("--format", dec_args.format, "text|json");

    detail::RsSimulateArgs sim_args;
    auto* sim = rs->add_subcommand("simulate", "Monte Carlo failure-rate harness");
    sim->add_option("--code", sim_args.code_path, "code config file")->required();
    sim->add_option("--t", sim_args.t_list, "error-column counts, comma separated")->required();
    sim->add_option("--trials", sim_args.trials, "trials per (t, strategy)");
    sim->add_option("--seed", sim_args.seed, "base seed")->required();
    sim->add_option("--error-model", sim_args.error_model, "uniform|rank:<r>");
    sim->add_option("--strategy", sim_args.strategies, "one or more locate strategies");
    sim->add_option("--recovery", sim_args.recovery, "interp|forney");
    sim->add_flag("--check-condition", sim_args.check_condition,
                  "run the partial-inverse-condition checker per trial");
    sim->add_flag("--zero-codeword", sim_args.zero_codeword, "transmit the zero codeword");
    sim->add_option("--format", sim_args.format, "text|json");

    detail::GenFixturesArgs gen_args;
    auto* gen = app.add_subcommand("gen-fixtures", "write deterministic test fixtures");
    gen->add_option("--family", gen_args.family, "spi-small|halfdist|ssb-grid")->required();
    gen->add_option("--out", gen_args.out_dir, "output directory")->required();
    gen->add_option("--seed", gen_args.seed, "base seed");
    gen->add_option("--count", gen_args.count, "number of fixtures (spi-small)");
    gen->add_option("--code", gen_args.code_path, "code config override (halfdist)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (solve->parsed()) return detail::cmd_spi_solve(solve_args, out, err);
        if (mono->parsed()) return detail::cmd_spi_monomialize(mono_args, out, err);
        if (enc->parsed()) return detail::cmd_rs_encode(enc_args, out, err);
        if (dec->parsed()) return detail::cmd_rs_decode(dec_args, out, err);
        if (sim->parsed()) return detail::cmd_rs_simulate(sim_args, out, err);
        if (gen->parsed()) return detail::cmd_gen_fixtures(gen_args, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    err << "error: no subcommand\n";
    return kUsage;
}

inline int run(int argc, const char* const* argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(std::move(args), std::cout, std::cerr);
}

}  // namespace spirs::cli

#endif  // SPIRS_CLI_HPP
