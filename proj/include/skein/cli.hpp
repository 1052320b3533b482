#pragma once

// Command-line front end. Exit codes: 0 success, 1 user error, 2 a
// verification sweep found a counterexample.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "skein/bracket_planar.hpp"
#include "skein/errors.hpp"
#include "skein/json_io.hpp"
#include "skein/oriented.hpp"
#include "skein/skein_element.hpp"
#include "skein/smoothing_oracle.hpp"
#include "skein/text_io.hpp"
#include "skein/verify.hpp"

namespace skein::cli {

struct CliConfig {
    std::string subcommand;
    std::string basis = "standard";
    bool json = false;
    long budget = kDefaultCrossingBudget;
    unsigned workers = 1;
    long max_coord = 3;
    long max_det = 10;
    long max_multiplicity = 3;
    std::string dump_states;
    std::string pd;
    bool use_oracle = false;
    std::vector<std::string> operands;
};

namespace detail {

inline bool looks_like_json(const std::string& s) {
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{';
    }
    return false;
}

inline Basis basis_from_flag(const std::string& b) { return b == "chebyshev" ? Basis::ChebyshevT : Basis::Standard; }

inline SkeinElement read_skein(const std::string& s, Basis default_basis) {
    return looks_like_json(s) ? skein_from_json(Json::parse(s)) : parse_skein(s, default_basis);
}

inline OrientedElement read_oriented(const std::string& s) {
    return looks_like_json(s) ? oriented_from_json(Json::parse(s)) : parse_oriented(s);
}

inline PDCode read_pd(const std::string& s) { return looks_like_json(s) ? pd_from_json(Json::parse(s)) : parse_pd(s); }

template <class T>
void emit(std::ostream& out, const T& value, bool json) {
    if (json)
        out << to_json(value).dump() << '\n';
    else
        out << format(value) << '\n';
}

/// Prints sweep results; returns 2 if any check found a counterexample.
inline int report_verification(const std::vector<CheckResult>& results, bool json, std::ostream& out,
                               std::ostream& err) {
    bool ok = true;
    Json report = Json::array();
    for (const auto& r : results) {
        ok = ok && r.passed();
        if (json)
            report.push_back(
                {{"check", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"counterexample", r.first_counterexample}});
        else
            out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)\n";
        if (!r.passed()) err << "counterexample (" << r.name << "): " << r.first_counterexample << '\n';
    }
    if (json) out << report.dump() << '\n';
    return ok ? 0 : 2;
}

inline int dispatch(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const Basis basis = basis_from_flag(cfg.basis);
    const auto& ops = cfg.operands;

    if (cfg.subcommand == "mul") {
        const SkeinElement x = read_skein(ops.at(0), basis);
        const SkeinElement y = read_skein(ops.at(1), basis);
        emit(out, x.basis() == Basis::ChebyshevT ? mul_T(x, y) : mul(x, y), cfg.json);
        return 0;
    }
    if (cfg.subcommand == "oracle-mul") {
        OracleOptions opts;
        opts.budget = cfg.budget;
        opts.workers = cfg.workers;
        std::ofstream dump;
        if (!cfg.dump_states.empty()) {
            dump.open(cfg.dump_states);
            if (!dump) throw std::invalid_argument("cannot open dump file " + cfg.dump_states);
            opts.observer = [&dump](const StateRecord& r) { dump << format_state_record(r) << '\n'; };
        }
        const SkeinElement x = read_skein(ops.at(0), Basis::Standard);
        const SkeinElement y = read_skein(ops.at(1), Basis::Standard);
        emit(out, oracle_mul(x, y, opts), cfg.json);
        return 0;
    }
    if (cfg.subcommand == "gamma-mul") {
        const OrientedElement x = read_oriented(ops.at(0));
        const OrientedElement y = read_oriented(ops.at(1));
        emit(out, cfg.use_oracle ? oracle_mul(x, y, cfg.budget) : mul(x, y), cfg.json);
        return 0;
    }
    if (cfg.subcommand == "cheb") {
        emit(out, chebyshev_of(parse_vec(ops.at(0))), cfg.json);
        return 0;
    }
    if (cfg.subcommand == "convert") {
        const SkeinElement x = read_skein(ops.at(0), basis);
        emit(out, x.basis() == Basis::Standard ? to_T_basis(x) : from_T_basis(x), cfg.json);
        return 0;
    }
    if (cfg.subcommand == "psi") {
        const SkeinElement x = read_skein(ops.at(0), basis);
        emit(out, x.basis() == Basis::Standard ? psi(x) : psi_T(x), cfg.json);
        return 0;
    }
    if (cfg.subcommand == "psi-inv") {
        emit(out, psi_inverse(read_oriented(ops.at(0))), cfg.json);
        return 0;
    }
    if (cfg.subcommand == "bracket") {
        BracketOptions opts;
        opts.budget = cfg.budget;
        opts.workers = cfg.workers;
        emit(out, kauffman_bracket(read_pd(cfg.pd), opts), cfg.json);
        return 0;
    }
    if (cfg.subcommand == "verify") {
        SweepBounds b;
        b.max_coord = cfg.max_coord;
        b.max_det = cfg.max_det;
        b.max_multiplicity = cfg.max_multiplicity;
        b.budget = cfg.budget;
        b.workers = cfg.workers;
        return report_verification(run_verification(b), cfg.json, out, err);
    }
    err << "unknown subcommand\n";
    return 1;
}

}  // namespace detail

/// Runs one command line (args excludes the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CliConfig cfg;
    CLI::App app{"Exact computations in the Kauffman bracket skein algebra of the torus", "skein"};
    app.require_subcommand(1);

    auto add_json = [&](CLI::App* s) { s->add_flag("--json", cfg.json, "Print JSON instead of text"); };
    auto add_basis = [&](CLI::App* s) {
        s->add_option("--basis", cfg.basis, "Basis of unsuffixed curves")
            ->check(CLI::IsMember({"standard", "chebyshev"}));
    };
    auto add_budget = [&](CLI::App* s) {
        s->add_option("--budget", cfg.budget, "Crossing budget for state sums")->check(CLI::Range(1L, kMaxCrossingBudget));
    };
    auto add_workers = [&](CLI::App* s) {
        s->add_option("--workers", cfg.workers, "Worker threads for state enumeration")->check(CLI::Range(1u, 256u));
    };
    auto add_operands = [&](CLI::App* s, int n, const std::string& what) {
        s->add_option("operands", cfg.operands, what)->expected(n)->required();
    };

    auto* mul_cmd = app.add_subcommand("mul", "Fast product of two elements");
    add_basis(mul_cmd);
    add_json(mul_cmd);
    add_operands(mul_cmd, 2, "Two elements");

    auto* oracle_cmd = app.add_subcommand("oracle-mul", "Product by exhaustive smoothing of the superposition");
    add_json(oracle_cmd);
    add_budget(oracle_cmd);
    add_workers(oracle_cmd);
    oracle_cmd->add_option("--dump-states", cfg.dump_states, "Write one line per smoothing state to this file");
    add_operands(oracle_cmd, 2, "Two standard-basis elements");

    auto* gamma_cmd = app.add_subcommand("gamma-mul", "Product in the oriented algebra");
    add_json(gamma_cmd);
    add_budget(gamma_cmd);
    gamma_cmd->add_flag("--oracle", cfg.use_oracle, "Compute by oriented smoothing instead of the monomial rule");
    add_operands(gamma_cmd, 2, "Two oriented elements");

    auto* cheb_cmd = app.add_subcommand("cheb", "Expand (a,b)_T in the multicurve basis");
    add_json(cheb_cmd);
    add_operands(cheb_cmd, 1, "A class (a,b)");

    auto* convert_cmd = app.add_subcommand("convert", "Change basis (standard <-> chebyshev)");
    add_basis(convert_cmd);
    add_json(convert_cmd);
    add_operands(convert_cmd, 1, "An element");

    auto* psi_cmd = app.add_subcommand("psi", "Sum over orientations, into the oriented algebra");
    add_basis(psi_cmd);
    add_json(psi_cmd);
    add_operands(psi_cmd, 1, "An element");

    auto* psi_inv_cmd = app.add_subcommand("psi-inv", "Inverse of psi on symmetric oriented elements");
    add_json(psi_inv_cmd);
    add_operands(psi_inv_cmd, 1, "An orientation-symmetric oriented element");

    auto* bracket_cmd = app.add_subcommand("bracket", "Kauffman bracket of a planar PD code");
    add_json(bracket_cmd);
    add_budget(bracket_cmd);
    add_workers(bracket_cmd);
    bracket_cmd->add_option("--pd", cfg.pd, "PD code, text X(i,j,k,l)... or JSON")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Sweep fast products against the smoothing oracle");
    add_json(verify_cmd);
    add_budget(verify_cmd);
    add_workers(verify_cmd);
    verify_cmd->add_option("--max-coord", cfg.max_coord, "Bound on class coordinates")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--max-det", cfg.max_det, "Bound on |det| of pairs")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--max-multiplicity", cfg.max_multiplicity, "Multiplicity bound for the psi sweep")
        ->check(CLI::NonNegativeNumber);

    std::vector<const char*> argv{"skein"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    for (auto* s : app.get_subcommands()) cfg.subcommand = s->get_name();

    try {
        return detail::dispatch(cfg, out, err);
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    } catch (const Json::exception& e) {
        err << "error: bad JSON input: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace skein::cli
