#include "ffq/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ffq/algorithms.hpp"
#include "ffq/cardinal.hpp"
#include "ffq/errors.hpp"
#include "ffq/gfield.hpp"
#include "ffq/modal.hpp"
#include "ffq/numtheory.hpp"
#include "ffq/ordered.hpp"

namespace ffq::cli {

namespace nt = ffq::numtheory;
using nlohmann::json;
using u64 = std::uint64_t;
using i64 = std::int64_t;

namespace {

constexpr unsigned kMaxOracleBits = 12; // dense dimension capped at 2^13

// Internal signal for exit code 4.
struct BudgetExhausted {
    u64 k;
    u64 budget;
};

std::string bitstring(std::size_t x, unsigned width) {
    std::string s(width, '0');
    for (unsigned i = 0; i < width; ++i)
        if (x >> (width - 1 - i) & 1) s[i] = '1';
    return s;
}

std::string amp_string(i64 a, i64 b) {
    if (b == 0) return std::to_string(a);
    const i64 m = b < 0 ? -b : b;
    std::string imag = (m == 1 ? "i" : std::to_string(m) + "i");
    if (a == 0) return (b < 0 ? "-" : "") + imag;
    return std::to_string(a) + (b < 0 ? "-" : "+") + imag;
}

std::string set_string(const std::vector<std::string>& items) {
    std::string s = "{";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) s += ", ";
        s += items[i];
    }
    return s + "}";
}

json state_json(const la::Vec<gf::GaussianElem>& v) {
    json arr = json::array();
    for (const auto& amp : v.a) arr.push_back(gf::to_string(amp, true));
    return arr;
}

std::vector<std::string> outcome_strings(const std::vector<std::size_t>& outcomes,
                                         unsigned width) {
    std::vector<std::string> out;
    out.reserve(outcomes.size());
    for (std::size_t idx : outcomes) out.push_back(bitstring(idx, width));
    return out;
}

modal::Oracle load_oracle(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open oracle file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::invalid_argument("oracle file is not valid JSON: " + std::string(e.what()));
    }
    auto f = modal::oracle_from_json(j);
    if (f.n > kMaxOracleBits)
        throw std::invalid_argument("oracle arity " + std::to_string(f.n) +
                                    " exceeds the CLI cap of " + std::to_string(kMaxOracleBits));
    return f;
}

void emit(std::ostream& out, bool as_json, const json& j, const std::string& text) {
    if (as_json)
        out << j.dump(2) << "\n";
    else
        out << text;
}

json resources_json(const alg::ResourceEstimate& est, const char* schema) {
    json j{{"schema", schema}, {"n", est.n},     {"d", est.d},
           {"k_bound", est.k_bound},             {"k", est.k},
           {"pi_k", est.pi_k}};
    j["p"] = est.p ? json(*est.p) : json(nullptr);
    if (est.j) j["j"] = *est.j;
    return j;
}

std::string resources_text(const alg::ResourceEstimate& est) {
    std::ostringstream t;
    t << "n=" << est.n << " d=" << est.d;
    if (est.j) t << " j=" << *est.j;
    t << " k_bound=" << est.k_bound << " k=" << est.k << " pi(k)=" << est.pi_k;
    if (est.p)
        t << " p=" << *est.p;
    else
        t << " p=(beyond search budget)";
    t << "\n";
    return t.str();
}

// ---- nt --------------------------------------------------------------------

void cmd_nt_table(u64 rows, u64 budget, unsigned threads, bool as_json, std::ostream& out) {
    if (rows == 0 || rows > 12)
        throw std::invalid_argument("nt table: --rows must be in 1..12");
    json jrows = json::array();
    std::ostringstream text;
    text << std::setw(12) << "p" << std::setw(8) << "k" << std::setw(8) << "pi(k)" << "\n";
    for (u64 i = 1; i <= rows; ++i) {
        const u64 k = nt::nth_prime(i);
        auto p = nt::a000229_search(k, budget, threads);
        if (!p) throw BudgetExhausted{k, budget};
        jrows.push_back(json{{"k", k}, {"p", *p}, {"pi_k", i}});
        text << std::setw(12) << *p << std::setw(8) << k << std::setw(8) << i << "\n";
    }
    emit(out, as_json, json{{"schema", "ffq/nt-table/1"}, {"rows", jrows}}, text.str());
}

void cmd_nt_find_p(u64 k, u64 budget, unsigned threads, bool as_json, std::ostream& out) {
    auto p = nt::a000229_search(k, budget, threads);
    if (!p) throw BudgetExhausted{k, budget};
    emit(out, as_json,
         json{{"schema", "ffq/nt-find-p/1"}, {"k", k}, {"p", *p}, {"budget", budget}},
         "p = " + std::to_string(*p) + "\n");
}

void cmd_nt_verify(u64 p, u64 k, bool as_json, std::ostream& out) {
    const bool ok = nt::a000229_verify(p, k);
    emit(out, as_json,
         json{{"schema", "ffq/nt-verify/1"}, {"p", p}, {"k", k}, {"verified", ok}},
         "verify p=" + std::to_string(p) + " k=" + std::to_string(k) + ": " +
             (ok ? "true" : "false") + "\n");
}

// ---- amplitudes -------------------------------------------------------------

void cmd_amplitudes(u64 k, u64 d, bool as_json, std::ostream& out) {
    const auto amps = ordered::allowed_amplitudes_k(k, d);
    std::vector<std::string> rendered;
    rendered.reserve(amps.size());
    for (const auto& [a, b] : amps) rendered.push_back(amp_string(a, b));
    const std::string name = "F^" + std::to_string(d) + "(" + std::to_string(k) + ")";
    std::ostringstream text;
    text << name << " = " << set_string(rendered) << "\n";
    text << "|" << name << "| = " << amps.size() << "\n";
    emit(out, as_json,
         json{{"schema", "ffq/amplitudes/1"},
              {"k", k},
              {"d", d},
              {"amplitudes", rendered},
              {"count", amps.size()}},
         text.str());
}

// ---- modal -----------------------------------------------------------------

void cmd_modal_usat(const std::string& oracle_path, bool sample, u64 seed, bool as_json,
                    std::ostream& out) {
    const auto f = load_oracle(oracle_path);
    const auto state = modal::usat_run(f);
    const auto outcomes = modal::measure_outcomes(state);
    const auto verdict = modal::usat_decide(f);
    const unsigned width = f.n + 1;
    const auto strings = outcome_strings(outcomes, width);

    json j{{"schema", "ffq/modal-usat/1"},
           {"oracle", modal::oracle_to_json(f)},
           {"verdict", verdict == modal::SatVerdict::satisfiable ? "satisfiable"
                                                                 : "unsatisfiable"},
           {"outcomes", strings}};
    std::ostringstream text;
    text << "verdict: "
         << (verdict == modal::SatVerdict::satisfiable ? "satisfiable" : "unsatisfiable")
         << "\n";
    text << "outcomes: " << set_string(strings) << "\n";
    if (sample) {
        std::mt19937_64 rng(seed);
        const auto pick = strings[rng() % strings.size()];
        j["sample"] = pick;
        j["sample_note"] = "extrapolation: the theory assigns no distribution";
        text << "sampled outcome: " << pick
             << " (extrapolation: the theory assigns no distribution)\n";
    }
    emit(out, as_json, j, text.str());
}

void cmd_modal_exhaustive(unsigned n, bool as_json, std::ostream& out) {
    if (n < 1 || n > kMaxOracleBits)
        throw std::invalid_argument("modal usat: --exhaustive must be in 1..12");
    const u64 total = (u64{1} << n) + 1;
    u64 correct = 0;
    std::vector<std::string> failures;
    for (u64 i = 0; i < total; ++i) {
        // i == 0 is the unsatisfiable table; i-1 indexes the one-hot tables.
        const auto f = (i == 0) ? modal::oracle_from_ones(n, {})
                                : modal::oracle_from_ones(n, {i - 1});
        const bool expect_sat = i != 0;
        const bool got_sat = modal::usat_decide(f) == modal::SatVerdict::satisfiable;
        if (expect_sat == got_sat)
            ++correct;
        else
            failures.push_back(i == 0 ? "f=0" : "one-hot " + bitstring(i - 1, n));
    }
    json j{{"schema", "ffq/modal-exhaustive/1"},
           {"n", n},
           {"total", total},
           {"correct", correct},
           {"failures", failures}};
    std::ostringstream text;
    text << "exhaustive n=" << n << ": " << correct << "/" << total
         << " decisions match brute-force satisfiability\n";
    for (const auto& fl : failures) text << "MISMATCH: " << fl << "\n";
    emit(out, as_json, j, text.str());
}

// ---- dqc1 ------------------------------------------------------------------

void cmd_dqc1_usat(const std::string& oracle_path, u64 p, bool as_json, std::ostream& out) {
    const auto f = load_oracle(oracle_path);
    const auto ctx = gf::make_field(p);
    const auto res = alg::dqc1_usat_run(f, ctx);
    const auto outcomes = la::support(res.state);
    const bool zero_in_support =
        std::find(outcomes.begin(), outcomes.end(), std::size_t{0}) != outcomes.end();
    const unsigned width = f.n + 1;
    const auto strings = outcome_strings(outcomes, width);
    std::string verdict = "indeterminate";
    if (res.supernatural)
        verdict = zero_in_support ? "unsatisfiable" : "satisfiable";

    json j{{"schema", "ffq/dqc1-usat/1"},
           {"p", p},
           {"oracle", modal::oracle_to_json(f)},
           {"supernatural", res.supernatural},
           {"zero_state_in_support", zero_in_support},
           {"verdict", verdict},
           {"outcomes", strings}};
    std::ostringstream text;
    text << "p=" << p << " n=" << f.n << " supernatural="
         << (res.supernatural ? "true" : "false") << " (p "
         << (res.supernatural ? "divides" : "does not divide") << " 2^n - 1 = "
         << ((u64{1} << f.n) - 1) << ")\n";
    text << "outcomes: " << set_string(strings) << "\n";
    text << "verdict: " << verdict << "\n";
    emit(out, as_json, j, text.str());
}

// ---- dj --------------------------------------------------------------------

void cmd_dj_run(const std::string& oracle_path, u64 p, bool as_json, std::ostream& out) {
    const auto f = load_oracle(oracle_path);
    const auto ctx = gf::make_field(p);
    const auto res = alg::dj_decide(f, ctx);
    json j{{"schema", "ffq/dj-run/1"},
           {"p", p},
           {"oracle", modal::oracle_to_json(f)},
           {"verdict", res.verdict == alg::DjVerdict::constant ? "constant" : "balanced"},
           {"promise_consistent", res.promise_consistent}};
    if (res.state.dim() <= 256) j["state"] = state_json(res.state);
    std::ostringstream text;
    text << "verdict: "
         << (res.verdict == alg::DjVerdict::constant ? "constant" : "balanced") << "\n";
    if (!res.promise_consistent)
        text << "warning: final state matches neither pattern; "
                "the constant-or-balanced promise was violated\n";
    emit(out, as_json, j, text.str());
}

void cmd_dj_resources(unsigned n, u64 budget, bool as_json, std::ostream& out) {
    const auto est = alg::dj_resources(n, budget);
    emit(out, as_json, resources_json(est, "ffq/dj-resources/1"), resources_text(est));
}

// ---- grover ----------------------------------------------------------------

void cmd_grover_trace(unsigned n, u64 target, bool as_json, std::ostream& out) {
    if (n < 2 || n > kMaxOracleBits)
        throw std::invalid_argument("grover trace: --n must be in 2..12");
    const u64 N = u64{1} << n;
    const auto tr = alg::grover_trace(N, target);
    json raw = json::array();
    for (const auto& [a, b] : tr.raw) raw.push_back(json::array({a, b}));
    json j{{"schema", "ffq/grover-trace/1"},
           {"N", tr.N},
           {"j", tr.j},
           {"target", tr.target},
           {"raw", raw},
           {"mu", tr.mu},
           {"target_probs", tr.target_probs},
           {"other_probs", tr.other_probs}};
    std::ostringstream text;
    text << "N=" << tr.N << " j=" << tr.j << " target=" << tr.target << " mu=" << tr.mu
         << "\n";
    for (std::size_t l = 0; l < tr.raw.size(); ++l) {
        text << "step " << l << ": raw=(" << tr.raw[l].first << "," << tr.raw[l].second
             << ") weight=" << tr.weights[l] << " P(target)=" << tr.target_probs[l] << "/"
             << tr.mu << " P(other)=" << tr.other_probs[l] << "/" << tr.mu << "\n";
    }
    emit(out, as_json, j, text.str());
}

void cmd_grover_resources(unsigned n, u64 budget, bool as_json, std::ostream& out) {
    if (n < 2)
        throw std::invalid_argument("grover resources: --n must be >= 2");
    const auto est = alg::grover_resources(u64{1} << n, budget);
    emit(out, as_json, resources_json(est, "ffq/grover-resources/1"), resources_text(est));
}

// ---- cardinal --------------------------------------------------------------

void cmd_cardinal_rescale(const std::vector<u64>& norms, u64 target, unsigned precision,
                          bool as_json, std::ostream& out) {
    if (norms.empty())
        throw std::invalid_argument("cardinal rescale: --norms must be non-empty");
    u64 t = target;
    if (t == 0) {
        t = 1;
        for (u64 m : norms) {
            if (m == 0) throw std::invalid_argument("cardinal rescale: norms must be positive");
            t = std::lcm(t, m);
        }
    }

    // The worked examples attach amplitude profiles to the norms 1..4 via
    // the canonical one-qubit states; other norms re-weight only.
    const bool canonical =
        std::all_of(norms.begin(), norms.end(), [](u64 m) { return m >= 1 && m <= 4; });

    json jstates = json::array();
    std::ostringstream text;
    text << "target T=" << t << ", precision t=" << precision << "\n";

    if (canonical) {
        const auto ctx = gf::make_field(311);
        std::vector<la::Vec<gf::GaussianElem>> states;
        states.reserve(norms.size());
        for (u64 m : norms)
            states.push_back(cardinal::canonical_state(ctx, static_cast<unsigned>(m)));
        const auto scaled = cardinal::rescale_states(states, t, precision);
        const auto real = cardinal::realization_of(scaled);
        const auto ref = cardinal::reference_probabilities(states);
        const auto report = cardinal::validate_realization(real, ref);

        for (std::size_t s = 0; s < scaled.size(); ++s) {
            json jp = json::array();
            std::string probs_text;
            for (std::size_t i = 0; i < real.probs[s].size(); ++i) {
                jp.push_back(real.probs[s][i]);
                probs_text += (i ? ", " : "") + std::to_string(real.probs[s][i]);
            }
            jstates.push_back(json{{"m", scaled[s].m},
                                   {"weight", scaled[s].weight},
                                   {"mu", scaled[s].mu},
                                   {"probs", jp}});
            text << "m=" << scaled[s].m << ": weight=" << scaled[s].weight
                 << " mu=" << scaled[s].mu << " probs={" << probs_text << "}\n";
        }
        std::vector<std::string> mus;
        for (u64 mu : real.mu) mus.push_back(std::to_string(mu));
        text << "mu set: " << set_string(mus) << "\n";
        const std::string verdict =
            !report.valid() ? "invalid" : (report.strict() ? "strict" : "valid");
        text << "validation: preserved=" << report.preserved
             << " collapsed=" << report.collapsed << " reversed=" << report.reversed
             << " verdict=" << verdict << "\n";
        json j{{"schema", "ffq/cardinal-rescale/1"},
               {"target", t},
               {"precision", precision},
               {"states", jstates},
               {"mu_set", real.mu},
               {"validation",
                json{{"preserved", report.preserved},
                     {"collapsed", report.collapsed},
                     {"reversed", report.reversed},
                     {"verdict", verdict}}}};
        emit(out, as_json, j, text.str());
        return;
    }

    const auto weights = cardinal::rescale_norms(norms, t, precision);
    std::vector<u64> mus;
    for (const auto& w : weights) {
        jstates.push_back(json{{"m", w.m}, {"weight", w.weight}, {"mu", w.mu}});
        text << "m=" << w.m << ": weight=" << w.weight << " mu=" << w.mu << "\n";
        mus.push_back(w.mu);
    }
    std::vector<std::string> mu_strings;
    for (u64 mu : mus) mu_strings.push_back(std::to_string(mu));
    text << "mu set: " << set_string(mu_strings) << "\n";
    json j{{"schema", "ffq/cardinal-rescale/1"},
           {"target", t},
           {"precision", precision},
           {"states", jstates},
           {"mu_set", mus}};
    emit(out, as_json, j, text.str());
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact simulator for quantum theories over finite fields"};
    app.require_subcommand(1);

    bool as_json = false;
    unsigned threads = 1;
    u64 rows = 10, k = 0, p = 0, d = 1;
    u64 budget = nt::kDefaultSearchBudget;
    u64 target = 0;
    unsigned precision = 0, n_bits = 1, exhaustive_n = 0;
    std::vector<u64> norms;
    std::string oracle_path;
    u64 sample_seed = 0;

    const auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", as_json, "emit JSON"); };

    auto* nt_cmd = app.add_subcommand("nt", "number-theory tables and the A000229 sequence");
    auto* nt_table = nt_cmd->add_subcommand("table", "least prime p per least non-residue k");
    nt_table->add_option("--rows", rows, "number of rows")->default_val(10);
    nt_table->add_option("--budget", budget, "search budget");
    nt_table->add_option("--threads", threads, "search threads (deterministic)");
    add_json(nt_table);
    auto* nt_find = nt_cmd->add_subcommand("find-p", "search the least p for a given k");
    nt_find->add_option("--k", k, "least quadratic non-residue")->required();
    nt_find->add_option("--budget", budget, "search budget");
    nt_find->add_option("--threads", threads, "search threads (deterministic)");
    add_json(nt_find);
    auto* nt_verify = nt_cmd->add_subcommand("verify", "check least_qnr(p) == k without search");
    nt_verify->add_option("--p", p, "prime to check")->required();
    nt_verify->add_option("--k", k, "expected least non-residue")->required();
    add_json(nt_verify);

    auto* amps = app.add_subcommand("amplitudes", "allowed amplitude set F^d(k)");
    amps->add_option("--k", k, "ordered-range length")->required();
    amps->add_option("--d", d, "vector space dimension")->required();
    add_json(amps);

    auto* modal_cmd = app.add_subcommand("modal", "modal theory over F_2");
    auto* modal_usat = modal_cmd->add_subcommand("usat", "UNIQUE-SAT decision circuit");
    modal_usat->add_option("--oracle", oracle_path, "oracle JSON file");
    modal_usat->add_option("--exhaustive", exhaustive_n,
                           "run every admissible oracle for n bits");
    auto* sample_opt = modal_usat->add_option(
        "--sample", sample_seed,
        "sample one outcome with this seed (extrapolation: the theory assigns no distribution)");
    add_json(modal_usat);

    auto* dqc1_cmd = app.add_subcommand("dqc1", "UNIQUE-SAT over a complexified field");
    auto* dqc1_usat = dqc1_cmd->add_subcommand("usat", "run the divisibility-driven circuit");
    dqc1_usat->add_option("--oracle", oracle_path, "oracle JSON file")->required();
    dqc1_usat->add_option("--p", p, "field characteristic")->required();
    add_json(dqc1_usat);

    auto* dj_cmd = app.add_subcommand("dj", "discrete Deutsch-Jozsa");
    auto* dj_run = dj_cmd->add_subcommand("run", "decide constant vs balanced");
    dj_run->add_option("--oracle", oracle_path, "oracle JSON file")->required();
    dj_run->add_option("--p", p, "field characteristic")->required();
    add_json(dj_run);
    auto* dj_res = dj_cmd->add_subcommand("resources", "field-size requirements");
    dj_res->add_option("--n", n_bits, "input bits")->required();
    dj_res->add_option("--budget", budget, "search budget");
    add_json(dj_res);

    auto* grover_cmd = app.add_subcommand("grover", "discrete Grover search");
    auto* grover_trace = grover_cmd->add_subcommand("trace", "integer amplitude evolution");
    grover_trace->add_option("--n", n_bits, "qubits (database size 2^n)")->required();
    grover_trace->add_option("--target", target, "marked index");
    add_json(grover_trace);
    auto* grover_res = grover_cmd->add_subcommand("resources", "field-size requirements");
    grover_res->add_option("--n", n_bits, "qubits (database size 2^n)")->required();
    grover_res->add_option("--budget", budget, "search budget");
    add_json(grover_res);

    auto* cardinal_cmd = app.add_subcommand("cardinal", "cardinal probability rescaling");
    auto* rescale = cardinal_cmd->add_subcommand("rescale", "re-weight states to a common scale");
    rescale->add_option("--norms", norms, "norm-squared list")->required()->delimiter(',');
    rescale->add_option("--target", target, "common target (default: lcm of the norms)");
    rescale->add_option("--precision", precision, "sqrt' precision digits");
    add_json(rescale);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);

        if (nt_table->parsed()) {
            cmd_nt_table(rows, budget, threads, as_json, out);
        } else if (nt_find->parsed()) {
            cmd_nt_find_p(k, budget, threads, as_json, out);
        } else if (nt_verify->parsed()) {
            cmd_nt_verify(p, k, as_json, out);
        } else if (amps->parsed()) {
            cmd_amplitudes(k, d, as_json, out);
        } else if (modal_usat->parsed()) {
            if (exhaustive_n > 0)
                cmd_modal_exhaustive(exhaustive_n, as_json, out);
            else if (!oracle_path.empty())
                cmd_modal_usat(oracle_path, sample_opt->count() > 0, sample_seed, as_json, out);
            else
                throw std::invalid_argument("modal usat: need --oracle or --exhaustive");
        } else if (dqc1_usat->parsed()) {
            cmd_dqc1_usat(oracle_path, p, as_json, out);
        } else if (dj_run->parsed()) {
            cmd_dj_run(oracle_path, p, as_json, out);
        } else if (dj_res->parsed()) {
            cmd_dj_resources(n_bits, budget, as_json, out);
        } else if (grover_trace->parsed()) {
            cmd_grover_trace(n_bits, target, as_json, out);
        } else if (grover_res->parsed()) {
            cmd_grover_resources(n_bits, budget, as_json, out);
        } else if (rescale->parsed()) {
            cmd_cardinal_rescale(norms, target, precision, as_json, out);
        } else {
            err << app.help();
            return kExitUsage;
        }
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BudgetExhausted& b) {
        err << "not found within budget " << b.budget << " (k = " << b.k << ")\n";
        return kExitBudgetExhausted;
    } catch (const RangeOverflow& e) {
        err << "error: " << e.what() << "\n";
        return kExitRangeOverflow;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace ffq::cli
