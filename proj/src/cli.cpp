#include "turansw/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "turansw/census.hpp"
#include "turansw/io.hpp"
#include "turansw/paley.hpp"
#include "turansw/report.hpp"
#include "turansw/special.hpp"

namespace turansw {

namespace {

using nlohmann::json;

struct GlobalOpts {
    bool as_json = false;
    bool stable = false;  // omit the runtime field for byte-stable output
    std::string out_file;
    int threads = 0;
    long long seed = -1;
    bool seed_set = false;
};

class Timer {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
    }

private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
};

int emit(const VerificationReport& rep, const GlobalOpts& opt, std::ostream& out) {
    std::string text = opt.as_json ? rep.to_json(!opt.stable).dump(2) + "\n"
                                   : rep.to_text(!opt.stable);
    if (!opt.out_file.empty()) {
        std::ofstream f(opt.out_file);
        if (!f) throw CLI::ValidationError("--out", "cannot open " + opt.out_file);
        f << text;
    } else {
        out << text;
    }
    return rep.overall_pass() ? 0 : 1;
}

int emit_plain(const std::string& text, const GlobalOpts& opt, std::ostream& out) {
    if (!opt.out_file.empty()) {
        std::ofstream f(opt.out_file);
        if (!f) throw CLI::ValidationError("--out", "cannot open " + opt.out_file);
        f << text;
    } else {
        out << text;
    }
    return 0;
}

std::string read_first_line(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw CLI::ValidationError("--input", "cannot open " + path);
    std::string line;
    std::getline(f, line);
    return line;
}

// ---------------------------------------------------------------------- census

int cmd_census(int n, const GlobalOpts& opt, std::ostream& out) {
    Timer timer;
    const auto rep = census_report(n);  // throws if a counting identity fails
    if (opt.as_json) {
        json j;
        j["n"] = rep.n;
        j["tournaments"] = rep.tournament_iso_count;
        j["switching_classes"] = rep.switching_class_iso_count;
        j["aut_histogram"] = json::array();
        for (auto [order, count] : rep.aut_order_histogram)
            j["aut_histogram"].push_back({{"order", order}, {"count", count}});
        if (!opt.stable) j["runtime_ms"] = timer.ms();
        return emit_plain(j.dump(2) + "\n", opt, out);
    }
    std::ostringstream text;
    text << rep.tournament_iso_count << " tournament isomorphism classes\n"
         << rep.switching_class_iso_count << " switching classes\n"
         << "class aut order histogram:";
    for (auto [order, count] : rep.aut_order_histogram) text << " " << order << "x" << count;
    text << "\nmass formula: ok\n";
    if (!opt.stable) text << "runtime_ms: " << timer.ms() << "\n";
    return emit_plain(text.str(), opt, out);
}

// --------------------------------------------------------------------- special

int cmd_special(int r, bool all_aut, const GlobalOpts& opt, std::ostream& out) {
    Timer timer;
    const auto res = find_special(r, all_aut, opt.threads);
    if (opt.as_json) {
        json j;
        j["r"] = res.r;
        j["classes_scanned"] = res.classes_scanned;
        j["scanned_all_classes"] = res.scanned_all;
        j["trivial_aut_classes"] = res.trivial_aut_classes;
        j["trivial_aut_specials"] = res.trivial_aut_specials;
        j["special"] = json::array();
        for (const auto& sc : res.specials)
            j["special"].push_back({{"two_graph", to_line(sc.rep)},
                                    {"aut_order", sc.aut_order},
                                    {"bound", to_string(sc.lower_bound)},
                                    {"best", sc.is_best}});
        if (!opt.stable) j["runtime_ms"] = timer.ms();
        return emit_plain(j.dump(2) + "\n", opt, out);
    }
    std::ostringstream text;
    text << res.specials.size() << " special classes at r=" << r << " ("
         << res.classes_scanned << " classes, "
         << (res.scanned_all ? "all scanned" : "trivial-aut scan") << ", "
         << res.trivial_aut_classes << " with trivial aut of which "
         << res.trivial_aut_specials << " special)\n";
    for (const auto& sc : res.specials)
        text << "  " << to_line(sc.rep) << "  |Aut|=" << sc.aut_order
             << "  bound=" << to_string(sc.lower_bound) << (sc.is_best ? "  (best)" : "") << "\n";
    if (!opt.stable) text << "runtime_ms: " << timer.ms() << "\n";
    return emit_plain(text.str(), opt, out);
}

// ----------------------------------------------------------------------- paley

int cmd_paley(int q, const std::string& model, const GlobalOpts& opt, std::ostream& out) {
    std::ostringstream text;
    if (model == "projective") {
        text << to_line(projective_two_graph(q)) << "\n";
    } else {
        text << to_line(paley_tournament(q)) << "\n" << to_line(paley_two_graph(q)) << "\n";
    }
    return emit_plain(text.str(), opt, out);
}

// -------------------------------------------------------------- paley-extremal

int cmd_paley_extremal(int q, int r, const GlobalOpts& opt, std::ostream& out) {
    Timer timer;
    VerificationReport rep;
    rep.command = "paley-extremal";
    rep.inputs["q"] = std::to_string(q);
    rep.inputs["r"] = std::to_string(r);

    Hypergraph h = r == 4 ? hypergraph_from_admissible(character_function(q))
                          : pattern_hypergraph(paley_two_graph(q),
                                               two_graph_of(special_example_tournament(6)));
    const int n = q + 1;
    rep.note("vertices", std::to_string(n));
    const auto dc = decaen_check(h);
    if (r == 4) {
        // (q+1)/16 * C(q+1,3), integral for q ≡ 3 (mod 4)
        const Rational cnt = Rational(n, 16) * Rational(binomial(n, 3));
        rep.expect_eq("edge_count", to_string(cnt), std::to_string(h.edge_count()));
        auto lambda = design_parameters(h, 3);
        rep.expect_eq("edges_per_3_set", std::to_string(n / 4),
                      lambda ? std::to_string(*lambda) : "nonuniform");
    } else {
        rep.expect_eq("edge_count", "264", std::to_string(h.edge_count()));
        auto lambda = design_parameters(h, 5);
        rep.expect_eq("edges_per_5_set", "2", lambda ? std::to_string(*lambda) : "nonuniform");
        auto profile = span_profile(h, 7);
        bool zero_or_two = true;
        std::string support;
        for (auto [k, cnt] : profile) {
            support += (support.empty() ? "" : ",") + std::to_string(k);
            if (k != 0 && k != 2) zero_or_two = false;
        }
        rep.expect_true("7_sets_span_0_or_2 (support " + support + ")", zero_or_two);
    }
    rep.expect_true("triangle_free", triangle_free_check(h).triangle_free);
    rep.expect_true("decaen_tight (bound " + to_string(dc.bound) + ")", dc.tight);
    rep.runtime_ms = timer.ms();
    return emit(rep, opt, out);
}

// ----------------------------------------------------------------------- turan

int cmd_turan(const std::string& path, const GlobalOpts& opt, std::ostream& out) {
    std::ifstream f(path);
    if (!f) throw CLI::ValidationError("--input", "cannot open " + path);
    json j;
    f >> j;
    const Hypergraph h = hypergraph_from_json(j);

    Timer timer;
    VerificationReport rep;
    rep.command = "turan";
    rep.inputs["input"] = path;
    rep.note("n", std::to_string(h.vertex_count()));
    rep.note("r", std::to_string(h.uniformity()));
    rep.note("edges", std::to_string(h.edge_count()));

    const auto tf = triangle_free_check(h);
    if (tf.witness) {
        std::string w;
        for (int v : *tf.witness) w += (w.empty() ? "" : " ") + std::to_string(v);
        rep.expect_eq("triangle_free", "true", "witness {" + w + "}");
    } else {
        rep.expect_true("triangle_free", tf.triangle_free);
    }
    const auto dc = decaen_check(h);
    rep.expect_true("edges_within_decaen_bound (" + std::to_string(dc.edge_count) + " <= " +
                        to_string(dc.bound) + ")",
                    Rational(dc.edge_count) <= dc.bound);
    rep.note("decaen_tight", dc.tight ? "true" : "false");
    rep.note("design_ok", dc.design_ok ? "true" : "false");
    if (dc.tight) {
        auto lambda = design_parameters(h, h.uniformity() - 1);
        rep.expect_true("tightness_forces_design", lambda.has_value());
    }
    rep.runtime_ms = timer.ms();
    return emit(rep, opt, out);
}

// ------------------------------------------------------------------ uniqueness

int cmd_uniqueness(int p, const GlobalOpts& opt, std::ostream& out) {
    Timer timer;
    const auto res = verify_uniqueness_theorem(p, opt.threads);
    VerificationReport rep;
    rep.command = "uniqueness";
    rep.inputs["p"] = std::to_string(p);
    rep.note("candidates", std::to_string(res.candidates));
    rep.expect_eq("convolution_matches", "2", std::to_string(res.convolution_matches.size()));
    rep.expect_true("convolution_matches_are_pm_chi", res.convolution_matches_pm_chi);
    rep.expect_eq("extremal_count", "2", std::to_string(res.extremal.size()));
    rep.expect_true("extremal_are_pm_chi", res.extremal_is_pm_chi);
    rep.expect_true("extremal_implies_convolution", res.implication_ok);
    rep.expect_true("self_convolution_at_zero_is_minus_p_minus_1", res.zero_value_ok);
    rep.expect_true("chi_hypergraph_matches_pattern_construction", res.chi_hypergraph_equal);
    rep.expect_true("minus_chi_gives_same_hypergraph", res.minus_chi_hypergraph_match);
    rep.runtime_ms = timer.ms();
    return emit(rep, opt, out);
}

// ---------------------------------------------------------------------- expect

int cmd_expect(const OrientedTwoGraph& g, int n, long long samples, const GlobalOpts& opt,
               std::ostream& out) {
    Timer timer;
    VerificationReport rep;
    rep.command = "expect";
    rep.inputs["pattern"] = to_line(g);
    rep.inputs["n"] = std::to_string(n);
    const Rational exact = expected_class_subtournaments(g, n);
    rep.note("exact", to_string(exact));
    if (samples > 0) {
        rep.inputs["samples"] = std::to_string(samples);
        rep.inputs["seed"] = std::to_string(opt.seed);
        const auto est = sample_class_subtournaments(g, n, samples,
                                                     static_cast<uint64_t>(opt.seed), opt.threads);
        std::ostringstream mc;
        mc << est.mean << " +- " << est.std_error;
        rep.note("monte_carlo", mc.str());
        const double exact_value = static_cast<double>(exact.numerator()) /
                                   static_cast<double>(exact.denominator());
        rep.expect_true("mean_within_5_standard_errors",
                        std::abs(est.mean - exact_value) <= 5.0 * est.std_error);
    }
    rep.runtime_ms = timer.ms();
    return emit(rep, opt, out);
}

// ------------------------------------------------------------------- tri-count

int cmd_tri_count(const ThreeTournament& g, const std::string& command, const GlobalOpts& opt,
                  std::ostream& out) {
    Timer timer;
    VerificationReport rep;
    rep.command = command;
    rep.inputs["three_tournament"] = to_line(g);
    const auto h = coherent_quadruples(g);
    rep.note("coherent_quadruples", std::to_string(h.edge_count()));
    rep.note("class_aut_order", std::to_string(tri_automorphism_group(g).size()));
    const long long formula = count_tri_iso_classes(g);
    rep.note("iso_classes_by_formula", std::to_string(formula));
    if (g.size() <= 5) {
        const auto brute = brute_force_tri_count(g);  // also re-checks the coset identity
        rep.expect_eq("brute_force_count", std::to_string(brute.count), std::to_string(formula));
        std::string orders;
        for (const auto& [rep_g, aut] : brute.reps)
            orders += (orders.empty() ? "" : ",") + std::to_string(aut);
        rep.note("member_aut_orders", orders);
    }
    rep.runtime_ms = timer.ms();
    return emit(rep, opt, out);
}

// -------------------------------------------------------------------- fixtures

int cmd_fixtures(const std::string& out_dir, const GlobalOpts& opt, std::ostream& out) {
    std::ostringstream text;
    for (int r : {6, 7, 8}) {
        const auto t = special_example_tournament(r);
        text << to_line(t) << "\n";
        if (!out_dir.empty()) {
            std::string path = out_dir + "/special_r" + std::to_string(r) + ".txt";
            std::ofstream f(path);
            if (!f) throw CLI::ValidationError("--out-dir", "cannot open " + path);
            f << to_line(t) << "\n";
        }
    }
    return emit_plain(text.str(), opt, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"tournament switching classes, oriented two-graphs and extremal hypergraphs"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts opt;
    app.add_flag("--json", opt.as_json, "emit machine-readable JSON");
    app.add_flag("--stable-output", opt.stable, "omit the runtime field");
    app.add_option("--out", opt.out_file, "write output to a file");
    app.add_option("--threads", opt.threads, "worker threads (0 = all cores; never changes results)");
    auto* seed_opt = app.add_option("--seed", opt.seed, "seed for randomized paths");

    auto* census = app.add_subcommand("census", "enumerate tournaments and switching classes");
    int census_n = 4;
    census->add_option("--n", census_n, "vertex count")->required()->check(CLI::Range(1, 8));

    auto* special = app.add_subcommand("special", "search for special oriented two-graphs");
    int special_r = 4;
    bool all_aut = false;
    special->add_option("--r", special_r, "pattern size")->required()->check(CLI::Range(4, 8));
    special->add_flag("--all-aut", all_aut, "at r=8 scan every class, not only trivial-aut ones");

    auto* paley = app.add_subcommand("paley", "emit the quadratic-residue tournament/two-graph");
    int paley_q = 7;
    std::string paley_model = "augmented";
    paley->add_option("--q", paley_q, "field size (prime, 3 mod 4)")->required();
    paley->add_option("--model", paley_model, "augmented | projective")
        ->check(CLI::IsMember({"augmented", "projective"}));

    auto* pex = app.add_subcommand("paley-extremal", "build and verify the extremal hypergraphs");
    int pex_q = 7, pex_r = 4;
    pex->add_option("--q", pex_q, "field size (prime, 3 mod 4)")->required();
    pex->add_option("--r", pex_r, "uniformity, 4 or 6")->check(CLI::IsMember({4, 6}));

    auto* turan = app.add_subcommand("turan", "verify a hypergraph from a JSON file");
    std::string turan_input;
    turan->add_option("--input", turan_input, "hypergraph JSON file")->required();

    auto* uniq = app.add_subcommand("uniqueness", "exhaustive admissible-function verification");
    int uniq_p = 7;
    uniq->add_option("--p", uniq_p, "prime modulus in {3,7,11,19,23}")->required();

    auto* expect = app.add_subcommand("expect", "expected subtournament counts for a class");
    std::string expect_input;
    int expect_paley = 0, expect_special = 0, expect_n = 0;
    long long expect_samples = 0;
    expect->add_option("--input", expect_input, "file with a G line");
    expect->add_option("--paley", expect_paley, "use the two-graph of the Paley tournament");
    expect->add_option("--special", expect_special, "use a bundled special class, r in {6,7,8}");
    expect->add_option("--n", expect_n, "host tournament size")->required();
    expect->add_option("--samples", expect_samples, "Monte Carlo sample count");

    auto* tric = app.add_subcommand("tri-count", "isomorphism classes in a 3-tournament class");
    std::string tric_input;
    tric->add_option("--input", tric_input, "file with a D line")->required();

    auto* trid = app.add_subcommand("tri-demo", "random 3-tournament class statistics");
    int trid_n = 5;
    trid->add_option("--n", trid_n, "vertex count")->required()->check(CLI::Range(4, 8));

    auto* fixtures = app.add_subcommand("fixtures", "emit the bundled special tournaments");
    std::string fixtures_dir;
    fixtures->add_option("--out-dir", fixtures_dir, "also write one file per tournament");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        opt.seed_set = seed_opt->count() > 0;

        if (census->parsed()) return cmd_census(census_n, opt, out);
        if (special->parsed()) return cmd_special(special_r, all_aut, opt, out);
        if (paley->parsed()) return cmd_paley(paley_q, paley_model, opt, out);
        if (pex->parsed()) {
            if (pex_r == 6 && pex_q != 11)
                throw CLI::ValidationError("--r", "the r=6 construction is built at q=11");
            return cmd_paley_extremal(pex_q, pex_r, opt, out);
        }
        if (turan->parsed()) return cmd_turan(turan_input, opt, out);
        if (uniq->parsed()) return cmd_uniqueness(uniq_p, opt, out);
        if (expect->parsed()) {
            int sources = (!expect_input.empty()) + (expect_paley > 0) + (expect_special > 0);
            if (sources != 1)
                throw CLI::ValidationError("expect",
                                           "give exactly one of --input, --paley, --special");
            if (expect_samples > 0 && !opt.seed_set)
                throw CLI::ValidationError("--samples", "randomized runs need an explicit --seed");
            OrientedTwoGraph g = !expect_input.empty()
                                     ? parse_two_graph_line(read_first_line(expect_input))
                                 : expect_paley > 0
                                     ? paley_two_graph(expect_paley)
                                     : two_graph_of(special_example_tournament(expect_special));
            return cmd_expect(g, expect_n, expect_samples, opt, out);
        }
        if (tric->parsed())
            return cmd_tri_count(parse_three_tournament_line(read_first_line(tric_input)),
                                 "tri-count", opt, out);
        if (trid->parsed()) {
            if (!opt.seed_set)
                throw CLI::ValidationError("tri-demo", "randomized runs need an explicit --seed");
            return cmd_tri_count(random_three_tournament(trid_n, static_cast<uint64_t>(opt.seed)),
                                 "tri-demo", opt, out);
        }
        if (fixtures->parsed()) return cmd_fixtures(fixtures_dir, opt, out);
        err << app.help();
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace turansw
