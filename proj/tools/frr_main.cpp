#include "frr/errors.hpp"
#include "frr/fleet.hpp"
#include "frr/io.hpp"
#include "frr/metrics.hpp"
#include "frr/parallel.hpp"
#include "frr/reserve.hpp"
#include "frr/schedule.hpp"
#include "frr/simulate.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunConfig {
    std::string fleet_path;
    std::string scenario_path;
    std::string profile_path;
    std::string prices_path;
    std::string curve_path;
    std::string trace_path;
    std::string out_dir = ".";
    std::vector<double> grid;
    std::vector<double> thresholds;
    double tolerance_mw = 1.0;
    std::optional<double> dt_s;
    std::optional<double> horizon_s;
    std::optional<double> bau_frr_mw;
    std::optional<double> frr_scale;
    double pv_capacity_mw = 0.0;
    double rocof_window_s = 0.5;
    std::vector<double> b_window{20.0, 52.0};
    int jobs = 1;
};

std::string num(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.10g", value);
    return buffer;
}

std::string out_file(const RunConfig& cfg, const std::string& name) {
    fs::create_directories(cfg.out_dir);
    return (fs::path(cfg.out_dir) / name).string();
}

frr::Fleet load_fleet(const RunConfig& cfg) {
    if (cfg.fleet_path.empty()) {
        throw frr::ParseError("missing --fleet");
    }
    return frr::load_fleet_csv(cfg.fleet_path);
}

frr::SystemCondition load_condition(const RunConfig& cfg, frr::Fleet* fleet) {
    if (cfg.scenario_path.empty()) {
        throw frr::ParseError("missing --scenario");
    }
    frr::Scenario scenario = frr::load_scenario_json(cfg.scenario_path);
    if (fleet != nullptr) {
        frr::apply_scenario_governors(*fleet, scenario);
    }
    frr::SystemCondition cond = scenario.condition;
    if (cfg.dt_s) {
        cond.dt_s = *cfg.dt_s;
    }
    if (cfg.horizon_s) {
        cond.horizon_s = *cfg.horizon_s;
    }
    frr::validate(cond);
    return cond;
}

frr::MetricsReport trace_metrics(const frr::FrequencyTrace& trace,
                                 const frr::SystemCondition* cond,
                                 double rocof_window_s,
                                 const frr::BWindow& requested) {
    const double horizon_s = static_cast<double>(trace.samples() - 1) * trace.dt_s;

    // Fall back to the tail of a short trace so a quick run still reports a
    // settling value.
    frr::BWindow window = requested;
    if (window.end_s > horizon_s) {
        window.start_s = 2.0 * horizon_s / 3.0;
        window.end_s = horizon_s;
    }
    const frr::AbcPoints abc = frr::abc_points(trace, window);

    frr::MetricsReport report;
    report.value_a_hz = abc.value_a_hz;
    report.value_b_hz = abc.value_b_hz;
    report.point_c_hz = abc.point_c_hz;
    report.c_to_b_ratio = abc.c_to_b_ratio;

    double window_s = rocof_window_s;
    if (window_s >= horizon_s) {
        window_s = horizon_s / 2.0;
    }
    if (window_s >= trace.dt_s) {
        const double slope = frr::rocof_initial(trace, window_s);
        report.rocof_hzps = slope;
        if (cond != nullptr && cond->contingency_mw > 0.0 && slope != 0.0) {
            report.inertia_estimate_mvas = frr::estimate_inertia(
                std::abs(slope), cond->contingency_mw, cond->nominal_freq_hz);
        }
    }
    return report;
}

int cmd_simulate(const RunConfig& cfg) {
    frr::Fleet fleet = load_fleet(cfg);
    const frr::SystemCondition cond = load_condition(cfg, &fleet);
    if (cfg.frr_scale) {
        fleet = frr::scale_headroom(fleet, *cfg.frr_scale);
    }
    const frr::FrequencyTrace trace = frr::simulate(fleet, cond);

    const std::string trace_path = out_file(cfg, "trace.csv");
    frr::save_trace_csv(trace_path, trace);
    const frr::MetricsReport report =
        trace_metrics(trace, &cond, cfg.rocof_window_s, frr::BWindow{});
    const std::string metrics_path = out_file(cfg, "metrics.json");
    frr::save_metrics_json(metrics_path, report);

    const auto crossing = frr::ufls_crossing_time(trace, cond.ufls_threshold_hz);
    std::cout << "nadir_hz=" << num(frr::nadir(trace))
              << " ufls_crossing_s=" << (crossing ? num(*crossing) : "none") << "\n";
    std::cout << "wrote " << trace_path << " " << metrics_path << "\n";
    return 0;
}

int cmd_min_frr(const RunConfig& cfg) {
    frr::Fleet fleet = load_fleet(cfg);
    const frr::SystemCondition cond = load_condition(cfg, &fleet);
    frr::MinFrrOptions options;
    options.tolerance_mw = cfg.tolerance_mw;
    const double result_mw = frr::min_frr(fleet, cond, options);
    const double full_mw = frr::total_frr(fleet);

    const json obj{{"min_frr_mw", result_mw},
                   {"total_frr_mw", full_mw},
                   {"scale", full_mw > 0.0 ? result_mw / full_mw : 0.0},
                   {"ufls_threshold_hz", cond.ufls_threshold_hz},
                   {"tolerance_mw", options.tolerance_mw},
                   {"scenario_hash", frr::scenario_hash(fleet, cond)}};
    const std::string path = out_file(cfg, "min_frr.json");
    std::ofstream out(path);
    out << obj.dump(2) << "\n";

    std::cout << "min_frr_mw=" << num(result_mw) << " total_frr_mw=" << num(full_mw) << "\n";
    std::cout << "wrote " << path << "\n";
    return 0;
}

frr::CurveMode parse_mode(const std::string& name) {
    const auto mode = frr::curve_mode_from_string(name);
    if (!mode) {
        throw frr::ParseError("unknown --mode '" + name + "'");
    }
    return *mode;
}

int cmd_curve(const RunConfig& cfg, const std::string& mode_name) {
    frr::Fleet fleet = load_fleet(cfg);
    const frr::SystemCondition cond = load_condition(cfg, &fleet);
    if (cfg.grid.empty()) {
        throw frr::ParseError("missing --grid");
    }
    frr::MinFrrOptions options;
    options.tolerance_mw = cfg.tolerance_mw;
    const frr::ReserveCurve curve =
        frr::build_curve(fleet, cond, cfg.grid, parse_mode(mode_name), options, cfg.jobs,
                         frr::scenario_hash(fleet, cond));

    const std::string path = out_file(cfg, "curve.csv");
    frr::save_curve(path, curve);
    for (const frr::CurvePoint& point : curve.points()) {
        std::cout << "inertia_mvas=" << num(point.inertia_mvas)
                  << " min_frr_mw=" << num(point.min_frr_mw) << "\n";
    }
    for (const double k : curve.infeasible_inertia_mvas()) {
        std::cout << "infeasible inertia_mvas=" << num(k) << "\n";
    }
    std::cout << "wrote " << path << "\n";
    return 0;
}

frr::ReserveSchedule build_schedule(const RunConfig& cfg) {
    if (cfg.profile_path.empty()) {
        throw frr::ParseError("missing --profile");
    }
    if (cfg.curve_path.empty()) {
        throw frr::ParseError("missing --curve");
    }
    const frr::InertiaProfile profile = frr::load_profile_csv(cfg.profile_path);
    const frr::ReserveCurve curve = frr::load_curve(cfg.curve_path);

    std::optional<frr::DisplacementContext> context;
    if (profile.form == frr::ProfileForm::pv_capacity_factor) {
        if (cfg.fleet_path.empty() || cfg.scenario_path.empty() || !(cfg.pv_capacity_mw > 0.0)) {
            throw frr::ParseError(
                "a pv_capacity_factor profile needs --fleet, --scenario and --pv-capacity-mw");
        }
        frr::DisplacementContext ctx;
        ctx.fleet = load_fleet(cfg);
        ctx.load_mw = load_condition(cfg, &ctx.fleet).load_mw;
        ctx.pv_capacity_mw = cfg.pv_capacity_mw;
        context = std::move(ctx);
    }
    return frr::make_schedule(profile, curve, context, cfg.jobs);
}

int cmd_schedule(const RunConfig& cfg) {
    const frr::ReserveSchedule schedule = build_schedule(cfg);
    const std::string path = out_file(cfg, "schedule.csv");
    frr::save_schedule_csv(path, schedule);
    std::cout << "entries=" << schedule.entries.size()
              << " peak_frr_mw=" << num(frr::peak_frr(schedule)) << "\n";
    std::cout << "wrote " << path << "\n";
    return 0;
}

int cmd_cost(const RunConfig& cfg) {
    if (cfg.prices_path.empty()) {
        throw frr::ParseError("missing --prices");
    }
    const frr::ReserveSchedule schedule = build_schedule(cfg);
    const frr::PriceTable prices = frr::load_prices_csv(cfg.prices_path);
    const double bau_mw = cfg.bau_frr_mw ? *cfg.bau_frr_mw : frr::peak_frr(schedule);
    const frr::CostReport report = frr::cost_report(schedule, prices, bau_mw);

    const std::string schedule_path = out_file(cfg, "schedule.csv");
    frr::save_schedule_csv(schedule_path, schedule);
    const std::string report_path = out_file(cfg, "cost.json");
    frr::save_cost_report_json(report_path, report);

    std::cout << "adaptive_cost=" << num(report.adaptive_cost)
              << " bau_cost=" << num(report.bau_cost)
              << " savings_fraction=" << num(report.savings_fraction) << "\n";
    std::cout << "wrote " << schedule_path << " " << report_path << "\n";
    return 0;
}

std::string threshold_tag(double threshold) {
    std::string tag = num(threshold);
    for (char& c : tag) {
        if (c == '.') {
            c = 'p';
        }
    }
    return tag;
}

int cmd_compare_thresholds(const RunConfig& cfg, const std::string& mode_name) {
    frr::Fleet fleet = load_fleet(cfg);
    const frr::SystemCondition cond = load_condition(cfg, &fleet);
    if (cfg.grid.empty()) {
        throw frr::ParseError("missing --grid");
    }
    if (cfg.thresholds.size() < 2) {
        throw frr::ParseError("--thresholds needs at least two values");
    }
    frr::MinFrrOptions options;
    options.tolerance_mw = cfg.tolerance_mw;
    const auto curves =
        frr::compare_thresholds(fleet, cond, cfg.thresholds, cfg.grid, parse_mode(mode_name),
                                options, cfg.jobs, frr::scenario_hash(fleet, cond));

    std::vector<std::string> written;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const std::string path =
            out_file(cfg, "curve_" + threshold_tag(cfg.thresholds[i]) + ".csv");
        frr::save_curve(path, curves[i]);
        written.push_back(path);
    }

    // Gap table between the lowest and highest thresholds, over grid values
    // feasible in both.
    const auto low_it = std::min_element(cfg.thresholds.begin(), cfg.thresholds.end());
    const auto high_it = std::max_element(cfg.thresholds.begin(), cfg.thresholds.end());
    const auto& low_curve = curves[low_it - cfg.thresholds.begin()];
    const auto& high_curve = curves[high_it - cfg.thresholds.begin()];
    const std::string gaps_path = out_file(cfg, "threshold_gaps.csv");
    {
        std::ofstream out(gaps_path);
        out << "inertia_mvas,min_frr_low_mw,min_frr_high_mw,gap_mw\n";
        for (const frr::CurvePoint& lp : low_curve.points()) {
            for (const frr::CurvePoint& hp : high_curve.points()) {
                if (hp.inertia_mvas == lp.inertia_mvas) {
                    char line[160];
                    std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%.17g\n",
                                  lp.inertia_mvas, lp.min_frr_mw, hp.min_frr_mw,
                                  hp.min_frr_mw - lp.min_frr_mw);
                    out << line;
                    std::cout << "inertia_mvas=" << num(lp.inertia_mvas)
                              << " gap_mw=" << num(hp.min_frr_mw - lp.min_frr_mw) << "\n";
                }
            }
        }
    }
    written.push_back(gaps_path);

    std::cout << "wrote";
    for (const std::string& path : written) {
        std::cout << " " << path;
    }
    std::cout << "\n";
    return 0;
}

int cmd_metrics(const RunConfig& cfg) {
    if (cfg.trace_path.empty()) {
        throw frr::ParseError("missing --trace");
    }
    const frr::FrequencyTrace trace = frr::load_trace_csv(cfg.trace_path);

    std::optional<frr::SystemCondition> cond;
    if (!cfg.scenario_path.empty()) {
        cond = frr::load_scenario_json(cfg.scenario_path).condition;
    }
    if (cfg.b_window.size() != 2) {
        throw frr::ParseError("--b-window needs exactly two values");
    }
    const frr::BWindow window{cfg.b_window[0], cfg.b_window[1]};
    const frr::AbcPoints abc = frr::abc_points(trace, window);

    frr::MetricsReport report;
    report.value_a_hz = abc.value_a_hz;
    report.value_b_hz = abc.value_b_hz;
    report.point_c_hz = abc.point_c_hz;
    report.c_to_b_ratio = abc.c_to_b_ratio;
    const double slope = frr::rocof_initial(trace, cfg.rocof_window_s);
    report.rocof_hzps = slope;
    if (cond && cond->contingency_mw > 0.0 && slope != 0.0) {
        report.inertia_estimate_mvas =
            frr::estimate_inertia(std::abs(slope), cond->contingency_mw, cond->nominal_freq_hz);
    }

    const std::string path = out_file(cfg, "metrics.json");
    frr::save_metrics_json(path, report);
    std::cout << "value_a_hz=" << num(report.value_a_hz)
              << " value_b_hz=" << num(report.value_b_hz)
              << " point_c_hz=" << num(report.point_c_hz) << "\n";
    std::cout << "wrote " << path << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frequency response reserve planning from system inertia"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string curve_mode = "override_inertia";
    std::string compare_mode = "override_inertia";

    auto add_fleet_scenario = [&](CLI::App* sub, bool required) {
        auto* fleet_opt = sub->add_option("--fleet", cfg.fleet_path, "fleet CSV");
        auto* scen_opt = sub->add_option("--scenario", cfg.scenario_path, "scenario JSON");
        if (required) {
            fleet_opt->required();
            scen_opt->required();
        }
        sub->add_option("--dt", cfg.dt_s, "integration step override, s");
        sub->add_option("--horizon", cfg.horizon_s, "simulation horizon override, s");
    };
    auto add_out = [&](CLI::App* sub) {
        sub->add_option("--out", cfg.out_dir, "output directory (default .)");
    };

    CLI::App* sim = app.add_subcommand("simulate", "run one contingency and write the trace");
    add_fleet_scenario(sim, true);
    add_out(sim);
    sim->add_option("--frr-scale", cfg.frr_scale, "scale responsive headroom by this factor")
        ->check(CLI::Range(0.0, 1.0));
    sim->add_option("--rocof-window", cfg.rocof_window_s, "rocof fit window, s");

    CLI::App* mf = app.add_subcommand("min-frr", "minimum reserve keeping the nadir secure");
    add_fleet_scenario(mf, true);
    add_out(mf);
    mf->add_option("--tolerance-mw", cfg.tolerance_mw, "bisection tolerance, MW")
        ->check(CLI::PositiveNumber);

    CLI::App* cv = app.add_subcommand("curve", "minimum reserve over an inertia grid");
    add_fleet_scenario(cv, true);
    add_out(cv);
    cv->add_option("--grid", cfg.grid, "inertia grid, MVA*s")->delimiter(',')->required();
    cv->add_option("--mode", curve_mode, "override_inertia or displacement");
    cv->add_option("--tolerance-mw", cfg.tolerance_mw, "bisection tolerance, MW")
        ->check(CLI::PositiveNumber);
    cv->add_option("--jobs", cfg.jobs, "parallel grid evaluations")->check(CLI::PositiveNumber);

    CLI::App* sc = app.add_subcommand("schedule", "hourly reserve from a daily profile");
    add_fleet_scenario(sc, false);
    add_out(sc);
    sc->add_option("--profile", cfg.profile_path, "daily profile CSV")->required();
    sc->add_option("--curve", cfg.curve_path, "reserve curve CSV")->required();
    sc->add_option("--pv-capacity-mw", cfg.pv_capacity_mw,
                   "installed PV capacity for pv_capacity_factor profiles");
    sc->add_option("--jobs", cfg.jobs, "parallel entry evaluations")->check(CLI::PositiveNumber);

    CLI::App* co = app.add_subcommand("cost", "price an adaptive schedule against a static one");
    add_fleet_scenario(co, false);
    add_out(co);
    co->add_option("--profile", cfg.profile_path, "daily profile CSV")->required();
    co->add_option("--curve", cfg.curve_path, "reserve curve CSV")->required();
    co->add_option("--prices", cfg.prices_path, "price table CSV")->required();
    co->add_option("--bau-frr", cfg.bau_frr_mw,
                   "static reserve level, MW (default: schedule peak)");
    co->add_option("--pv-capacity-mw", cfg.pv_capacity_mw,
                   "installed PV capacity for pv_capacity_factor profiles");
    co->add_option("--jobs", cfg.jobs, "parallel entry evaluations")->check(CLI::PositiveNumber);

    CLI::App* ct = app.add_subcommand("compare-thresholds",
                                      "reserve curves for alternative shedding thresholds");
    add_fleet_scenario(ct, true);
    add_out(ct);
    ct->add_option("--thresholds", cfg.thresholds, "shedding thresholds, Hz")
        ->delimiter(',')
        ->required();
    ct->add_option("--grid", cfg.grid, "inertia grid, MVA*s")->delimiter(',')->required();
    ct->add_option("--mode", compare_mode, "override_inertia or displacement");
    ct->add_option("--tolerance-mw", cfg.tolerance_mw, "bisection tolerance, MW")
        ->check(CLI::PositiveNumber);
    ct->add_option("--jobs", cfg.jobs, "parallel grid evaluations")->check(CLI::PositiveNumber);

    CLI::App* me = app.add_subcommand("metrics", "measurement points from a stored trace");
    me->add_option("--trace", cfg.trace_path, "trace CSV")->required();
    me->add_option("--scenario", cfg.scenario_path,
                   "scenario JSON for the inertia back-estimate");
    me->add_option("--rocof-window", cfg.rocof_window_s, "rocof fit window, s");
    me->add_option("--b-window", cfg.b_window, "settling window start,end in s")->delimiter(',');
    add_out(me);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& err) {
        return app.exit(err);
    } catch (const CLI::CallForAllHelp& err) {
        return app.exit(err);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return 2;
    }

    try {
        if (sim->parsed()) return cmd_simulate(cfg);
        if (mf->parsed()) return cmd_min_frr(cfg);
        if (cv->parsed()) return cmd_curve(cfg, curve_mode);
        if (sc->parsed()) return cmd_schedule(cfg);
        if (co->parsed()) return cmd_cost(cfg);
        if (ct->parsed()) return cmd_compare_thresholds(cfg, compare_mode);
        if (me->parsed()) return cmd_metrics(cfg);
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const frr::ParseError& err) {
        std::cerr << "input error: " << err.what() << "\n";
        return 2;
    } catch (const frr::DomainError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 3;
    } catch (const frr::NumericalError& err) {
        std::cerr << "numerical error: " << err.what() << "\n";
        return 3;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return 4;
    }
}
