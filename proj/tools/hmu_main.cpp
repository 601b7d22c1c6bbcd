// hmu: moment Hankel operators on Hardy spaces, batch front-end.
//
// Subcommands: moments, classify, apply, schatten, verify.  All numerics
// live in the header library; this file only parses options, moves data
// between JSON/CSV and the library types, and sets exit codes.
//
// Exit codes: 0 success (and, for verify, all checks pass), 1 usage or
// input error, 2 a numeric invariant failed.

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hilbertmu/hilbertmu.hpp"

namespace {

using hmu::json;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct CommonOpts {
    std::string measure_path;
    std::string out_path;
    std::string format = "json";
    double p = 0.0, q = 0.0, s = 1.0, alpha = 0.0;
    bool p_set = false, q_set = false, alpha_set = false;
    int N = 0;
    int grid_levels = 14;
    unsigned seed = hmu::kDefaultVerifySeed;
};

void write_output(const CommonOpts& opts, const std::string& text) {
    if (opts.out_path.empty() || opts.out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + opts.out_path + "'");
    out << text;
}

json complex_pair(const std::complex<double>& z) {
    return json::array({z.real(), z.imag()});
}

json carleson_report_json(const hmu::CarlesonReport& rep) {
    json j;
    j["s"] = rep.s;
    j["alpha"] = rep.alpha;
    j["grid"] = rep.grid;
    j["values"] = rep.values;
    j["sup"] = rep.sup;
    j["argmax"] = rep.argmax;
    j["slope"] = rep.slope;
    j["verdict"] = rep.verdict;
    j["vanishing"] = rep.vanishing;
    return j;
}

json prediction_json(const hmu::Prediction& pr) {
    json j;
    j["p"] = pr.p;
    j["q"] = pr.q;
    j["verdict"] = pr.verdict;
    j["hypothesis"] = pr.hypothesis;
    j["hypothesisHolds"] = pr.hypothesis_holds;
    j["criterion"] = pr.criterion;
    j["criterionHolds"] = pr.criterion_holds;
    j["sRequired"] = pr.s_required;
    j["notes"] = pr.notes;
    return j;
}

// complete-monotonicity summary used by the moments subcommand
json monotonicity_summary(const hmu::Measure& mu, int count) {
    constexpr int kmax = 8;
    const auto ms = hmu::moments_up_to(mu, count - 1 + kmax);
    std::vector<double> d(ms.values.begin(), ms.values.end());
    double min_signed = d[0];
    for (int n = 0; n < count; ++n) min_signed = std::min(min_signed, d[n]);
    for (int k = 1; k <= kmax; ++k) {
        for (std::size_t n = 0; n + 1 < d.size(); ++n) d[n] -= d[n + 1];
        d.pop_back();
        for (int n = 0; n < count; ++n) min_signed = std::min(min_signed, d[n]);
    }
    json j;
    j["maxOrder"] = kmax;
    j["minSignedDifferenceOverMass"] = min_signed / ms.values[0];
    j["completelyMonotone"] = (min_signed >= -1e-12 * ms.values[0]);
    return j;
}

int cmd_moments(const CommonOpts& opts) {
    const auto mu = hmu::load_measure(opts.measure_path);
    const int top = opts.N > 0 ? opts.N : 64;
    const auto ms = hmu::moments_up_to(mu, top);
    const json cm = monotonicity_summary(mu, top + 1);

    if (opts.format == "csv") {
        std::string text = "n,mu_n\n";
        for (std::size_t n = 0; n < ms.values.size(); ++n)
            text += std::to_string(n) + "," + fmt17(ms.values[n]) + "\n";
        json trailer;
        trailer["completeMonotonicity"] = cm;
        text += trailer.dump() + "\n";
        write_output(opts, text);
    } else {
        json j;
        j["command"] = "moments";
        j["measure"] = hmu::measure_to_json(mu);
        j["count"] = ms.values.size();
        j["moments"] = ms.values;
        j["errorBound"] = ms.error_bound;
        j["completeMonotonicity"] = cm;
        write_output(opts, j.dump(2) + "\n");
    }
    return cm["completelyMonotone"].get<bool>() ? 0 : 2;
}

int cmd_classify(const CommonOpts& opts) {
    const auto mu = hmu::load_measure(opts.measure_path);
    const hmu::GridSpec grid{opts.grid_levels};
    const auto rep = hmu::carleson_sup(mu, opts.s, grid);
    std::optional<hmu::CarlesonReport> logrep;
    if (opts.alpha_set) logrep = hmu::log_carleson_sup(mu, opts.alpha, opts.s, grid);
    std::optional<hmu::Prediction> pred;
    if (opts.p_set && opts.q_set) pred = hmu::predict(opts.p, opts.q, mu);

    if (opts.format == "csv") {
        std::string text = "j,a_j,value\n";
        for (std::size_t j = 0; j < rep.grid.size(); ++j)
            text += std::to_string(j) + "," + fmt17(rep.grid[j]) + "," +
                    fmt17(rep.values[j]) + "\n";
        json trailer;
        trailer["verdict"] = rep.verdict;
        trailer["sup"] = rep.sup;
        trailer["slope"] = rep.slope;
        trailer["vanishing"] = rep.vanishing;
        if (logrep) trailer["logVerdict"] = logrep->verdict;
        if (pred) trailer["prediction"] = prediction_json(*pred);
        text += trailer.dump() + "\n";
        write_output(opts, text);
    } else {
        json j;
        j["command"] = "classify";
        j["measure"] = hmu::measure_to_json(mu);
        j["gridLevels"] = opts.grid_levels;
        j["report"] = carleson_report_json(rep);
        if (logrep) j["logReport"] = carleson_report_json(*logrep);
        if (pred) j["prediction"] = prediction_json(*pred);
        write_output(opts, j.dump(2) + "\n");
    }
    return 0;
}

int cmd_apply(const CommonOpts& opts, const std::string& coeffs_path) {
    const auto mu = hmu::load_measure(opts.measure_path);
    const int N = opts.N > 0 ? opts.N : 4096;
    std::vector<std::complex<double>> a = {1.0};
    if (!coeffs_path.empty()) a = hmu::load_coefficients(coeffs_path);
    if (a.empty() || static_cast<int>(a.size()) > N)
        throw std::runtime_error("apply: need 1.." + std::to_string(N) +
                                 " input coefficients");

    const hmu::HankelTruncation T(mu, N);
    const auto image = hmu::hankel_apply_fast(T, a);
    std::optional<double> residual;
    if (N <= 1024) {
        const auto naive = hmu::hankel_apply_naive(T, a);
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < naive.size(); ++i) {
            num = std::max(num, std::abs(image[i] - naive[i]));
            den = std::max(den, std::abs(naive[i]));
        }
        residual = den > 0.0 ? num / den : num;
    }

    const hmu::Polynomial f(a);
    const auto grid = hmu::default_agreement_grid();
    json points = json::array();
    double max_err = 0.0;
    for (const auto& z : grid) {
        std::complex<double> series = 0.0;
        for (std::size_t n = image.size(); n-- > 0;) series = series * z + image[n];
        const auto integral = hmu::integral_apply(mu, f, z);
        max_err = std::max(max_err,
                           std::abs(series - integral) / (1.0 + std::abs(integral)));
        json pt;
        pt["z"] = complex_pair(z);
        pt["series"] = complex_pair(series);
        pt["integral"] = complex_pair(integral);
        points.push_back(pt);
    }

    if (opts.format == "csv") {
        std::string text = "n,re,im\n";
        for (std::size_t n = 0; n < image.size(); ++n)
            text += std::to_string(n) + "," + fmt17(image[n].real()) + "," +
                    fmt17(image[n].imag()) + "\n";
        json trailer;
        if (residual) trailer["residualFastVsNaive"] = *residual;
        trailer["agreementMaxError"] = max_err;
        text += trailer.dump() + "\n";
        write_output(opts, text);
    } else {
        json j;
        j["command"] = "apply";
        j["measure"] = hmu::measure_to_json(mu);
        j["N"] = N;
        j["inputDegree"] = f.degree();
        if (residual)
            j["residualFastVsNaive"] = *residual;
        else
            j["residualFastVsNaive"] = nullptr;
        j["agreement"] = json{{"maxError", max_err}, {"points", points}};
        j["image"] = hmu::coefficients_to_json(image);
        write_output(opts, j.dump(2) + "\n");
    }
    return 0;
}

int cmd_schatten(const CommonOpts& opts) {
    const auto mu = hmu::load_measure(opts.measure_path);
    const double p = opts.p_set ? opts.p : 2.0;
    const int top = opts.N > 0 ? opts.N : 1024;
    if (top % 8 != 0 || top < 8)
        throw std::runtime_error("schatten: N must be a multiple of 8 (ladder N/8..N)");
    const std::vector<int> ladder = {top / 8, top / 4, top / 2, top};
    const auto v = hmu::membership_verdict(mu, p, ladder);

    if (opts.format == "csv") {
        std::string text = "N,schattenPartial,criterionPartial\n";
        for (const auto& ev : v.evidence)
            text += std::to_string(ev.N) + "," + fmt17(ev.schatten_partial) + "," +
                    fmt17(ev.criterion_partial) + "\n";
        json trailer;
        trailer["verdict"] = v.verdict;
        trailer["spectralSlope"] = v.spectral_slope;
        trailer["criterionSlope"] = v.criterion_slope;
        text += trailer.dump() + "\n";
        write_output(opts, text);
    } else {
        json j;
        j["command"] = "schatten";
        j["measure"] = hmu::measure_to_json(mu);
        j["p"] = p;
        j["ladder"] = ladder;
        j["verdict"] = v.verdict;
        j["spectralSlope"] = v.spectral_slope;
        j["criterionSlope"] = v.criterion_slope;
        j["spectralIncrement"] = v.spectral_increment;
        j["criterionIncrement"] = v.criterion_increment;
        json evidence = json::array();
        for (const auto& ev : v.evidence) {
            json e;
            e["N"] = ev.N;
            e["schattenPartial"] = ev.schatten_partial;
            e["criterionPartial"] = ev.criterion_partial;
            e["singularValues"] = ev.singular_values;
            evidence.push_back(e);
        }
        j["evidence"] = evidence;
        write_output(opts, j.dump(2) + "\n");
    }
    return 0;
}

int cmd_verify(const CommonOpts& opts, int corrupt_moment) {
    hmu::VerifyOptions vo;
    vo.seed = opts.seed;
    vo.corrupt_moment = corrupt_moment;
    const auto rep = hmu::run_verify(vo);

    if (opts.format == "csv") {
        std::string text = "id,pass,name\n";
        for (const auto& c : rep.checks)
            text += std::to_string(c.id) + "," + (c.pass ? "1" : "0") + "," + c.name + "\n";
        json trailer;
        trailer["allPass"] = rep.all_pass;
        trailer["seed"] = rep.seed;
        text += trailer.dump() + "\n";
        write_output(opts, text);
    } else {
        json j;
        j["command"] = "verify";
        j["seed"] = rep.seed;
        j["corruptMoment"] = rep.corrupt_moment;
        json checks = json::array();
        for (const auto& c : rep.checks) {
            json cj;
            cj["id"] = c.id;
            cj["name"] = c.name;
            cj["pass"] = c.pass;
            json details;
            for (const auto& [k, val] : c.details) details[k] = val;
            cj["details"] = details;
            cj["notes"] = c.notes;
            checks.push_back(cj);
        }
        j["checks"] = checks;
        j["allPass"] = rep.all_pass;
        write_output(opts, j.dump(2) + "\n");
    }
    return rep.all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"moment Hankel operators on Hardy spaces"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string coeffs_path;
    int corrupt_moment = -1;

    auto add_common = [&](CLI::App* sub, bool needs_measure) {
        auto* m = sub->add_option("--measure", opts.measure_path,
                                  "path to a measure spec (JSON)");
        if (needs_measure) m->required();
        sub->add_option("--p", opts.p, "source-space exponent p")
            ->each([&](const std::string&) { opts.p_set = true; });
        sub->add_option("--q", opts.q, "target-space exponent q")
            ->each([&](const std::string&) { opts.q_set = true; });
        sub->add_option("--s", opts.s, "Carleson exponent s (default 1)");
        sub->add_option("--alpha", opts.alpha, "logarithmic exponent alpha")
            ->each([&](const std::string&) { opts.alpha_set = true; });
        sub->add_option("--N", opts.N, "truncation size / moment count");
        sub->add_option("--grid-levels", opts.grid_levels,
                        "dyadic grid levels (default 14)");
        sub->add_option("--format", opts.format, "output format: json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", opts.out_path, "output path (default stdout)");
        sub->add_option("--seed", opts.seed, "seed for randomized checks");
    };

    auto* moments = app.add_subcommand(
        "moments", "moment sequence of a measure with a monotonicity summary");
    add_common(moments, true);
    auto* classify =
        app.add_subcommand("classify", "Carleson classification and, with --p/--q, the "
                                       "boundedness prediction");
    add_common(classify, true);
    auto* apply = app.add_subcommand(
        "apply", "apply the moment Hankel matrix to a coefficient vector");
    add_common(apply, true);
    apply->add_option("--coeffs", coeffs_path,
                      "path to input coefficients (JSON array; default [1])");
    auto* schatten = app.add_subcommand(
        "schatten", "Schatten membership ladder for the moment Hankel operator");
    add_common(schatten, true);
    auto* verify = app.add_subcommand("verify", "run the full self-verification suite");
    add_common(verify, false);
    verify->add_option("--corrupt-moment", corrupt_moment,
                       "perturb this moment index inside the agreement check");

    CLI11_PARSE(app, argc, argv);

    try {
        if (moments->parsed()) return cmd_moments(opts);
        if (classify->parsed()) return cmd_classify(opts);
        if (apply->parsed()) return cmd_apply(opts, coeffs_path);
        if (schatten->parsed()) return cmd_schatten(opts);
        if (verify->parsed()) return cmd_verify(opts, corrupt_moment);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
