#include "tndeform/cache.hpp"
#include "tndeform/composition.hpp"
#include "tndeform/enclosure.hpp"
#include "tndeform/maps.hpp"
#include "tndeform/rational.hpp"
#include "tndeform/tn.hpp"
#include "tndeform/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace tnd;

// exit codes: 0 ok, 1 verification failure, 2 usage error
struct ExitError : std::runtime_error {
    ExitError(const std::string& msg, int c) : std::runtime_error(msg), code(c) {}
    int code;
};

std::string enclosure_value(const Enclosure& e) {
    return to_fraction_string(e.lo) + ";" + to_fraction_string(e.hi);
}

Enclosure parse_enclosure_value(const std::string& s) {
    auto semi = s.find(';');
    if (semi == std::string::npos) throw std::invalid_argument("bad cached enclosure");
    return {parse_rational(s.substr(0, semi)), parse_rational(s.substr(semi + 1))};
}

// Cached evaluation: the key embeds the engine version and every budget that
// affects the value, so a hit is bit-identical to a recompute.
Enclosure cached_enclosure(const std::string& key_body,
                           const std::function<Enclosure()>& compute) {
    auto store = CacheStore::from_env();
    std::string key = std::string(CacheStore::engine_version()) + "|" + key_body;
    if (store) {
        if (auto hit = store->get(key)) return parse_enclosure_value(*hit);
    }
    Enclosure e = compute();
    if (store) store->put(key, enclosure_value(e));
    return e;
}

void print_enclosure(const Enclosure& e, const std::string& format) {
    if (format == "json") {
        nlohmann::ordered_json j;
        j["lo"] = to_fraction_string(e.lo);
        j["hi"] = to_fraction_string(e.hi);
        j["lo_decimal"] = decimal_floor(e.lo, 15);
        j["hi_decimal"] = decimal_ceil(e.hi, 15);
        j["width_upper"] = sci_upper(e.width());
        std::cout << j.dump() << "\n";
    } else {
        std::cout << format_enclosure(e) << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"exact deformation values, limit-map enclosures, and claim verification"};
    app.require_subcommand(1);

    // tn ---------------------------------------------------------------
    auto* tn_cmd = app.add_subcommand("tn", "exact deformation value T_n");
    int tn_n = 1;
    std::string tn_k;
    tn_cmd->add_option("-n,--level", tn_n, "deformation level")->required();
    tn_cmd->add_option("-k,--composition", tn_k, "comma-separated parts, e.g. 2,1,3")
        ->required();
    tn_cmd->callback([&] {
        Composition c = Composition::parse(tn_k);
        std::string key = "tn|n=" + std::to_string(tn_n) + "|k=" + c.str();
        Rational v;
        auto store = CacheStore::from_env();
        std::string full_key = std::string(CacheStore::engine_version()) + "|" + key;
        std::optional<std::string> hit = store ? store->get(full_key) : std::nullopt;
        if (hit)
            v = parse_rational(*hit);
        else {
            v = tn_exact({tn_n, c});
            if (store) store->put(full_key, to_fraction_string(v));
        }
        std::cout << to_fraction_string(v) << "\n";
        std::cout << "decimal: " << decimal_floor(v, 12) << " (exact)\n";
    });

    // eta ---------------------------------------------------------------
    auto* eta_cmd = app.add_subcommand("eta", "limit-map enclosure for a tailed sequence");
    int eta_n = 1, eta_order = 60;
    std::string eta_k, eta_tail_s = "ones", eta_fmt = "text";
    eta_cmd->add_option("-n,--level", eta_n, "deformation level")->required();
    eta_cmd->add_option("-k,--prefix", eta_k, "prefix composition (may be empty)");
    eta_cmd->add_option("--tail", eta_tail_s, "ones|twos")
        ->check(CLI::IsMember({"ones", "twos"}));
    eta_cmd->add_option("--order", eta_order, "series truncation order");
    eta_cmd->add_option("--format", eta_fmt, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    eta_cmd->callback([&] {
        TailSpec t{Composition::parse(eta_k),
                   eta_tail_s == "ones" ? Tail::Ones : Tail::Twos};
        Enclosure e = cached_enclosure(
            "eta|n=" + std::to_string(eta_n) + "|t=" + t.str() +
                "|M=" + std::to_string(eta_order),
            [&] { return eta_tail(eta_n, t, eta_order); });
        print_enclosure(e, eta_fmt);
    });

    // fn ----------------------------------------------------------------
    auto* fn_cmd = app.add_subcommand("fn", "deformation-map enclosure at a point");
    int fn_n = 1, fn_depth = 24, fn_order = 60;
    std::string fn_x, fn_fmt = "text";
    fn_cmd->add_option("-n,--level", fn_n, "deformation level")->required();
    fn_cmd->add_option("-x,--point", fn_x, "rational in (0,1], e.g. 1/3")->required();
    fn_cmd->add_option("--depth", fn_depth, "expansion depth");
    fn_cmd->add_option("--order", fn_order, "series truncation order");
    fn_cmd->add_option("--format", fn_fmt, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    fn_cmd->callback([&] {
        Rational x = parse_rational(fn_x);
        Enclosure e = cached_enclosure(
            "fn|n=" + std::to_string(fn_n) + "|x=" + to_fraction_string(x) +
                "|d=" + std::to_string(fn_depth) + "|M=" + std::to_string(fn_order),
            [&] { return fn_enclosure(fn_n, x, fn_depth, fn_order); });
        print_enclosure(e, fn_fmt);
    });

    // hn ----------------------------------------------------------------
    auto* hn_cmd = app.add_subcommand("hn", "jump height at a site");
    int hn_n = 1, hn_order = 60;
    std::string hn_site, hn_fmt = "text";
    hn_cmd->add_option("-n,--level", hn_n, "deformation level")->required();
    hn_cmd->add_option("--site", hn_site, "site composition, e.g. 2,1")->required();
    hn_cmd->add_option("--order", hn_order, "series truncation order");
    hn_cmd->add_option("--format", hn_fmt, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    hn_cmd->callback([&] {
        JumpSite site = make_jump_site(Composition::parse(hn_site));
        Enclosure e = cached_enclosure(
            "hn|n=" + std::to_string(hn_n) + "|k=" + site.composition.str() +
                "|M=" + std::to_string(hn_order),
            [&] { return hn_value(hn_n, site, hn_order); });
        std::cout << "site point " << to_fraction_string(site.point) << "\n";
        print_enclosure(e, hn_fmt);
    });

    // gn ----------------------------------------------------------------
    auto* gn_cmd = app.add_subcommand("gn", "continuous-part enclosure at a point");
    int gn_n = 1, gn_depth = 24, gn_w = 14, gn_order = 60;
    std::string gn_x, gn_fmt = "text";
    gn_cmd->add_option("-n,--level", gn_n, "deformation level")->required();
    gn_cmd->add_option("-x,--point", gn_x, "rational in (0,1]")->required();
    gn_cmd->add_option("--depth", gn_depth, "expansion depth");
    gn_cmd->add_option("--weight-cutoff", gn_w, "site weight cutoff");
    gn_cmd->add_option("--order", gn_order, "series truncation order");
    gn_cmd->add_option("--format", gn_fmt, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    gn_cmd->callback([&] {
        Rational x = parse_rational(gn_x);
        Enclosure e = cached_enclosure(
            "gn|n=" + std::to_string(gn_n) + "|x=" + to_fraction_string(x) +
                "|d=" + std::to_string(gn_depth) + "|W=" + std::to_string(gn_w) +
                "|M=" + std::to_string(gn_order),
            [&] { return Gn_value(gn_n, x, gn_depth, gn_w, gn_order); });
        print_enclosure(e, gn_fmt);
    });

    // curve ---------------------------------------------------------------
    auto* curve_cmd = app.add_subcommand("curve", "sweep a map over a dyadic grid to CSV");
    std::string curve_fn = "fn", curve_out;
    int curve_n = 1, curve_pts = 100, curve_depth = 24, curve_w = 14, curve_order = 60;
    curve_cmd->add_option("--function", curve_fn, "fn|hn|gn")
        ->check(CLI::IsMember({"fn", "hn", "gn"}));
    curve_cmd->add_option("-n,--level", curve_n, "deformation level")->required();
    curve_cmd->add_option("--points", curve_pts, "grid size (x = j/points)");
    curve_cmd->add_option("--depth", curve_depth, "expansion depth");
    curve_cmd->add_option("--weight-cutoff", curve_w, "site weight cutoff");
    curve_cmd->add_option("--order", curve_order, "series truncation order");
    curve_cmd->add_option("--out", curve_out, "output path")->required();
    curve_cmd->callback([&] {
        std::ofstream out(curve_out);
        if (!out) throw ExitError("cannot write '" + curve_out + "'", 2);
        out << "x,x_decimal,lo,hi,lo_decimal,hi_decimal\n";
        for (int j = 1; j <= curve_pts; ++j) {
            Rational x = make_rational(j, curve_pts);
            Enclosure e;
            if (curve_fn == "fn")
                e = fn_enclosure(curve_n, x, curve_depth, curve_order);
            else if (curve_fn == "hn")
                e = Hn_value(curve_n, x, curve_w, curve_order);
            else
                e = Gn_value(curve_n, x, curve_depth, curve_w, curve_order);
            out << to_fraction_string(x) << "," << decimal_floor(x, 9) << ","
                << to_fraction_string(e.lo) << "," << to_fraction_string(e.hi) << ","
                << decimal_floor(e.lo, 12) << "," << decimal_ceil(e.hi, 12) << "\n";
        }
    });

    // preimage -------------------------------------------------------------
    auto* pre_cmd = app.add_subcommand("preimage", "bracket a preimage of the deformation map");
    int pre_n = 1, pre_depth = 24, pre_order = 60;
    std::string pre_y, pre_tol = "1/4194304";
    pre_cmd->add_option("-n,--level", pre_n, "deformation level")->required();
    pre_cmd->add_option("-y,--target", pre_y, "target value in (1, e^{1+...+1/n})")
        ->required();
    pre_cmd->add_option("--tol", pre_tol, "bracket width tolerance (rational)");
    pre_cmd->add_option("--depth", pre_depth, "expansion depth");
    pre_cmd->add_option("--order", pre_order, "series truncation order");
    pre_cmd->callback([&] {
        PreimageResult res = fn_preimage(pre_n, parse_rational(pre_y),
                                         parse_rational(pre_tol), pre_depth, pre_order);
        std::cout << "x in [" << to_fraction_string(res.x_interval.lo) << ", "
                  << to_fraction_string(res.x_interval.hi) << "]\n";
        std::cout << "achieved width " << sci_upper(res.achieved_width)
                  << (res.met_tolerance ? "" : " (tolerance not met)") << "\n";
    });

    // verify ------------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    VerifyBudgets budgets;
    int v_n = -1, v_order = -1, v_depth = -1, v_w = -1, v_weight = -1, v_count = -1;
    verify_cmd->add_option("suite", suite, "suite name or 'all'")->required();
    verify_cmd->add_option("-n,--level", v_n, "deformation level override");
    verify_cmd->add_option("--order", v_order, "series truncation order override");
    verify_cmd->add_option("--depth", v_depth, "expansion depth override");
    verify_cmd->add_option("-W,--weight-cutoff", v_w, "site weight cutoff override");
    verify_cmd->add_option("--weight", v_weight, "composition weight bound override");
    verify_cmd->add_option("--count", v_count, "sample count override");
    verify_cmd->callback([&] {
        if (!is_suite(suite)) throw ExitError("unknown suite '" + suite + "'", 2);
        if (v_n > 0) budgets.level = v_n;
        if (v_order > 0) budgets.order = v_order;
        if (v_depth > 0) budgets.depth = v_depth;
        if (v_w > 0) budgets.weight_cutoff = v_w;
        if (v_weight > 0) budgets.max_weight = v_weight;
        if (v_count > 0) budgets.count = v_count;
        auto reports = run_suite(suite, budgets);
        for (const auto& r : reports)
            std::cout << "[" << status_name(r.status) << "] " << r.name << ": "
                      << r.witness << " (" << r.tolerance << ")\n";
        if (!all_passed(reports)) throw ExitError("verification failed", 1);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help exits clean, usage errors exit 2
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ExitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
