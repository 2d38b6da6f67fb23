#include "frr/io.hpp"

#include "frr/errors.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

using nlohmann::json;

namespace frr {

namespace {

std::string fmt_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

[[noreturn]] void fail_at(const std::string& path, std::size_t line, const std::string& what) {
    std::ostringstream msg;
    msg << path << ":" << line << ": " << what;
    throw ParseError(msg.str());
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path + ": cannot open for reading");
    }
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError(path + ": cannot open for writing");
    }
    return out;
}

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(field);
            field.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    fields.push_back(field);
    return fields;
}

double parse_double_field(const std::string& text, const std::string& path, std::size_t line,
                          const std::string& column) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        fail_at(path, line, "bad numeric value '" + text + "' in column " + column);
    }
    return value;
}

int parse_int_field(const std::string& text, const std::string& path, std::size_t line,
                    const std::string& column) {
    int value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        fail_at(path, line, "bad integer value '" + text + "' in column " + column);
    }
    return value;
}

bool parse_bool_field(const std::string& text, const std::string& path, std::size_t line,
                      const std::string& column) {
    if (text == "true") return true;
    if (text == "false") return false;
    fail_at(path, line, "bad boolean '" + text + "' in column " + column + " (use true/false)");
}

// Civil date to days since 1970-01-01.
long days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const int era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = static_cast<unsigned>((153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1);
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return static_cast<long>(era) * 146097L + static_cast<long>(doe) - 719468L;
}

double json_number(const json& obj, const std::string& path, const std::string& key) {
    if (!obj.contains(key)) {
        throw ParseError(path + ": missing key '" + key + "'");
    }
    if (!obj.at(key).is_number()) {
        throw ParseError(path + ": key '" + key + "' must be a number");
    }
    return obj.at(key).get<double>();
}

json load_json_file(const std::string& path) {
    std::ifstream in = open_input(path);
    json obj;
    try {
        obj = json::parse(in);
    } catch (const json::parse_error& err) {
        throw ParseError(path + ": " + err.what());
    }
    return obj;
}

constexpr char kFleetHeader[] =
    "id,fuel_type,rated_mva,pmax_mw,pset_mw,inertia_h_s,droop_pu,deadband_hz,"
    "responsive,committed,merit_rank";
constexpr char kTraceHeader[] =
    "t_s,freq_hz,mech_hydro_mw,mech_steam_mw,mech_gas_mw,mech_other_mw";
constexpr char kCurveHeader[] = "inertia_mvas,min_frr_mw";
constexpr char kScheduleHeader[] = "time,inertia_mvas,frr_mw";
constexpr char kPricesHeader[] = "source,price_per_mw";

std::string sidecar_path(const std::string& csv_path) {
    const auto dot = csv_path.find_last_of('.');
    const auto slash = csv_path.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
        return csv_path + ".json";
    }
    return csv_path.substr(0, dot) + ".json";
}

} // namespace

Fleet load_fleet_csv(const std::string& path) {
    std::ifstream in = open_input(path);
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) {
        throw ParseError(path + ": empty file");
    }
    ++line_no;
    if (split_csv_row(line) != split_csv_row(kFleetHeader)) {
        fail_at(path, line_no, std::string("expected header '") + kFleetHeader + "'");
    }

    Fleet fleet;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        const auto fields = split_csv_row(line);
        if (fields.size() != 11) {
            fail_at(path, line_no, "expected 11 columns, got " + std::to_string(fields.size()));
        }
        GeneratorUnit unit;
        unit.id = fields[0];
        const auto fuel = fuel_type_from_string(fields[1]);
        if (!fuel) {
            fail_at(path, line_no, "unknown fuel_type '" + fields[1] + "'");
        }
        unit.fuel_type = *fuel;
        unit.rated_mva = parse_double_field(fields[2], path, line_no, "rated_mva");
        unit.pmax_mw = parse_double_field(fields[3], path, line_no, "pmax_mw");
        unit.pset_mw = parse_double_field(fields[4], path, line_no, "pset_mw");
        unit.inertia_h_s = parse_double_field(fields[5], path, line_no, "inertia_h_s");
        unit.droop_pu = parse_double_field(fields[6], path, line_no, "droop_pu");
        unit.deadband_hz = parse_double_field(fields[7], path, line_no, "deadband_hz");
        unit.responsive = parse_bool_field(fields[8], path, line_no, "responsive");
        unit.committed = parse_bool_field(fields[9], path, line_no, "committed");
        unit.merit_rank = parse_int_field(fields[10], path, line_no, "merit_rank");
        try {
            validate(unit);
        } catch (const DomainError& err) {
            fail_at(path, line_no, err.what());
        }
        fleet.units.push_back(std::move(unit));
    }
    try {
        validate(fleet);
    } catch (const DomainError& err) {
        throw ParseError(path + ": " + err.what());
    }
    return fleet;
}

void save_fleet_csv(const std::string& path, const Fleet& fleet) {
    std::ofstream out = open_output(path);
    out << kFleetHeader << "\n";
    for (const GeneratorUnit& u : fleet.units) {
        out << u.id << ',' << to_string(u.fuel_type) << ',' << fmt_double(u.rated_mva) << ','
            << fmt_double(u.pmax_mw) << ',' << fmt_double(u.pset_mw) << ','
            << fmt_double(u.inertia_h_s) << ',' << fmt_double(u.droop_pu) << ','
            << fmt_double(u.deadband_hz) << ',' << (u.responsive ? "true" : "false") << ','
            << (u.committed ? "true" : "false") << ',' << u.merit_rank << "\n";
    }
}

Scenario load_scenario_json(const std::string& path) {
    const json obj = load_json_file(path);
    Scenario scenario;
    SystemCondition& cond = scenario.condition;
    cond.nominal_freq_hz = json_number(obj, path, "nominal_freq_hz");
    cond.load_mw = json_number(obj, path, "load_mw");
    cond.damping_pu = json_number(obj, path, "damping_pu");
    cond.contingency_mw = json_number(obj, path, "contingency_mw");
    cond.ufls_threshold_hz = json_number(obj, path, "ufls_threshold_hz");
    cond.horizon_s = json_number(obj, path, "horizon_s");
    cond.dt_s = json_number(obj, path, "dt_s");
    if (obj.contains("inertia_override_mvas") && !obj.at("inertia_override_mvas").is_null()) {
        cond.inertia_override_mvas = json_number(obj, path, "inertia_override_mvas");
    }
    if (obj.contains("governor_params") && !obj.at("governor_params").is_null()) {
        const json& gov = obj.at("governor_params");
        if (!gov.is_object()) {
            throw ParseError(path + ": governor_params must be an object");
        }
        auto set = default_governor_set();
        for (const auto& [key, value] : gov.items()) {
            const auto fuel = fuel_type_from_string(key);
            if (!fuel) {
                throw ParseError(path + ": unknown fuel type '" + key + "' in governor_params");
            }
            GovernorParams params;
            params.t1_s = json_number(value, path, "t1_s");
            params.t2_s = json_number(value, path, "t2_s");
            params.hp_fraction = json_number(value, path, "hp_fraction");
            set[static_cast<int>(*fuel)] = params;
        }
        scenario.governors = set;
    }
    try {
        validate(cond);
    } catch (const DomainError& err) {
        throw ParseError(path + ": " + err.what());
    }
    return scenario;
}

void save_scenario_json(const std::string& path, const Scenario& scenario) {
    const SystemCondition& cond = scenario.condition;
    json obj{{"nominal_freq_hz", cond.nominal_freq_hz},
             {"load_mw", cond.load_mw},
             {"damping_pu", cond.damping_pu},
             {"contingency_mw", cond.contingency_mw},
             {"ufls_threshold_hz", cond.ufls_threshold_hz},
             {"horizon_s", cond.horizon_s},
             {"dt_s", cond.dt_s}};
    if (cond.inertia_override_mvas) {
        obj["inertia_override_mvas"] = *cond.inertia_override_mvas;
    }
    if (scenario.governors) {
        json gov;
        for (FuelType type : kFuelTypes) {
            const GovernorParams& params = (*scenario.governors)[static_cast<int>(type)];
            gov[std::string(to_string(type))] = {{"t1_s", params.t1_s},
                                                 {"t2_s", params.t2_s},
                                                 {"hp_fraction", params.hp_fraction}};
        }
        obj["governor_params"] = gov;
    }
    open_output(path) << obj.dump(2) << "\n";
}

void apply_scenario_governors(Fleet& fleet, const Scenario& scenario) {
    if (scenario.governors) {
        fleet.governors = *scenario.governors;
    }
}

void save_trace_csv(const std::string& path, const FrequencyTrace& trace) {
    std::ofstream out = open_output(path);
    out << kTraceHeader << "\n";
    for (Eigen::Index i = 0; i < trace.samples(); ++i) {
        out << fmt_double(trace.time_at(i)) << ',' << fmt_double(trace.freq_hz[i]);
        for (const auto& series : trace.mech_mw_by_type) {
            out << ',' << fmt_double(series[i]);
        }
        out << "\n";
    }
}

FrequencyTrace load_trace_csv(const std::string& path) {
    std::ifstream in = open_input(path);
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) {
        throw ParseError(path + ": empty file");
    }
    ++line_no;
    if (split_csv_row(line) != split_csv_row(kTraceHeader)) {
        fail_at(path, line_no, std::string("expected header '") + kTraceHeader + "'");
    }

    std::vector<double> times;
    std::vector<double> freq;
    std::array<std::vector<double>, kFuelTypeCount> mech;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        const auto fields = split_csv_row(line);
        if (fields.size() != 2 + kFuelTypeCount) {
            fail_at(path, line_no, "expected 6 columns, got " + std::to_string(fields.size()));
        }
        times.push_back(parse_double_field(fields[0], path, line_no, "t_s"));
        freq.push_back(parse_double_field(fields[1], path, line_no, "freq_hz"));
        for (int t = 0; t < kFuelTypeCount; ++t) {
            mech[t].push_back(parse_double_field(fields[2 + t], path, line_no, "mech"));
        }
    }
    if (times.size() < 2) {
        throw ParseError(path + ": need at least two samples");
    }

    FrequencyTrace trace;
    trace.dt_s = times[1] - times[0];
    if (!(trace.dt_s > 0.0)) {
        throw ParseError(path + ": time column must be increasing");
    }
    const auto n = static_cast<Eigen::Index>(times.size());
    trace.freq_hz = Eigen::Map<const Eigen::VectorXd>(freq.data(), n);
    for (int t = 0; t < kFuelTypeCount; ++t) {
        trace.mech_mw_by_type[t] = Eigen::Map<const Eigen::VectorXd>(mech[t].data(), n);
    }
    return trace;
}

void save_curve(const std::string& csv_path, const ReserveCurve& curve) {
    {
        std::ofstream out = open_output(csv_path);
        out << kCurveHeader << "\n";
        for (const CurvePoint& point : curve.points()) {
            out << fmt_double(point.inertia_mvas) << ',' << fmt_double(point.min_frr_mw) << "\n";
        }
    }
    json meta{{"ufls_threshold_hz", curve.ufls_threshold_hz()},
              {"mode", std::string(to_string(curve.mode()))},
              {"tolerance_mw", curve.tolerance_mw()},
              {"scenario_hash", curve.provenance()},
              {"infeasible", curve.infeasible_inertia_mvas()}};
    open_output(sidecar_path(csv_path)) << meta.dump(2) << "\n";
}

ReserveCurve load_curve(const std::string& csv_path) {
    std::ifstream in = open_input(csv_path);
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) {
        throw ParseError(csv_path + ": empty file");
    }
    ++line_no;
    if (split_csv_row(line) != split_csv_row(kCurveHeader)) {
        fail_at(csv_path, line_no, std::string("expected header '") + kCurveHeader + "'");
    }

    std::vector<CurvePoint> points;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        const auto fields = split_csv_row(line);
        if (fields.size() != 2) {
            fail_at(csv_path, line_no, "expected 2 columns, got " + std::to_string(fields.size()));
        }
        points.push_back({parse_double_field(fields[0], csv_path, line_no, "inertia_mvas"),
                          parse_double_field(fields[1], csv_path, line_no, "min_frr_mw")});
    }

    double threshold = 0.0;
    CurveMode mode = CurveMode::override_inertia;
    std::string provenance;
    double tolerance_mw = 1.0;
    std::vector<double> infeasible;
    std::ifstream sidecar(sidecar_path(csv_path));
    if (sidecar) {
        json meta;
        try {
            meta = json::parse(sidecar);
        } catch (const json::parse_error& err) {
            throw ParseError(sidecar_path(csv_path) + ": " + err.what());
        }
        threshold = json_number(meta, sidecar_path(csv_path), "ufls_threshold_hz");
        const auto mode_name = meta.at("mode").get<std::string>();
        const auto parsed_mode = curve_mode_from_string(mode_name);
        if (!parsed_mode) {
            throw ParseError(sidecar_path(csv_path) + ": unknown mode '" + mode_name + "'");
        }
        mode = *parsed_mode;
        tolerance_mw = json_number(meta, sidecar_path(csv_path), "tolerance_mw");
        provenance = meta.value("scenario_hash", std::string{});
        if (meta.contains("infeasible")) {
            infeasible = meta.at("infeasible").get<std::vector<double>>();
        }
    }
    try {
        return ReserveCurve(std::move(points), std::move(infeasible), threshold, mode,
                            std::move(provenance), tolerance_mw);
    } catch (const DomainError& err) {
        throw ParseError(csv_path + ": " + err.what());
    }
}

double parse_time_label(const std::string& label) {
    int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0;
    // ISO-8601 date-time, with either 'T' or a space between date and time.
    if (label.size() >= 16 && label[4] == '-' && label[7] == '-') {
        const int matched =
            std::sscanf(label.c_str(), "%4d-%2d-%2d%*1[T ]%2d:%2d:%2d", &y, &mo, &d, &h, &mi, &s);
        if (matched < 5) {
            throw ParseError("bad time label '" + label + "'");
        }
        if (mo < 1 || mo > 12 || d < 1 || d > 31 || h < 0 || h > 23 || mi < 0 || mi > 59 ||
            s < 0 || s > 59) {
            throw ParseError("time label '" + label + "' out of range");
        }
        return static_cast<double>(days_from_civil(y, mo, d)) * 24.0 + h + mi / 60.0 + s / 3600.0;
    }
    if (std::sscanf(label.c_str(), "%2d:%2d", &h, &mi) == 2 && label.size() <= 5) {
        if (h < 0 || h > 23 || mi < 0 || mi > 59) {
            throw ParseError("time label '" + label + "' out of range");
        }
        return h + mi / 60.0;
    }
    throw ParseError("bad time label '" + label + "' (use HH:MM or ISO-8601)");
}

InertiaProfile load_profile_csv(const std::string& path) {
    std::ifstream in = open_input(path);
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) {
        throw ParseError(path + ": empty file");
    }
    ++line_no;
    const auto header = split_csv_row(line);
    InertiaProfile profile;
    if (header == std::vector<std::string>{"time", "inertia_mvas"}) {
        profile.form = ProfileForm::inertia;
    } else if (header == std::vector<std::string>{"time", "pv_capacity_factor"}) {
        profile.form = ProfileForm::pv_capacity_factor;
    } else {
        fail_at(path, line_no,
                "expected header 'time,inertia_mvas' or 'time,pv_capacity_factor'");
    }

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        const auto fields = split_csv_row(line);
        if (fields.size() != 2) {
            fail_at(path, line_no, "expected 2 columns, got " + std::to_string(fields.size()));
        }
        ProfileEntry entry;
        entry.time_label = fields[0];
        try {
            entry.time_h = parse_time_label(entry.time_label);
        } catch (const ParseError& err) {
            fail_at(path, line_no, err.what());
        }
        entry.value = parse_double_field(fields[1], path, line_no, header[1]);
        profile.entries.push_back(std::move(entry));
    }
    try {
        validate(profile);
    } catch (const DomainError& err) {
        throw ParseError(path + ": " + err.what());
    }
    return profile;
}

PriceTable load_prices_csv(const std::string& path) {
    std::ifstream in = open_input(path);
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) {
        throw ParseError(path + ": empty file");
    }
    ++line_no;
    if (split_csv_row(line) != split_csv_row(kPricesHeader)) {
        fail_at(path, line_no, std::string("expected header '") + kPricesHeader + "'");
    }

    PriceTable prices;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        const auto fields = split_csv_row(line);
        if (fields.size() != 2) {
            fail_at(path, line_no, "expected 2 columns, got " + std::to_string(fields.size()));
        }
        const double price = parse_double_field(fields[1], path, line_no, "price_per_mw");
        if (price < 0.0) {
            fail_at(path, line_no, "price must be non-negative");
        }
        prices.rows.push_back({fields[0], price});
    }
    return prices;
}

void save_schedule_csv(const std::string& path, const ReserveSchedule& schedule) {
    std::ofstream out = open_output(path);
    out << kScheduleHeader << "\n";
    for (const ScheduleEntry& entry : schedule.entries) {
        out << entry.time_label << ',' << fmt_double(entry.inertia_mvas) << ','
            << fmt_double(entry.frr_mw) << "\n";
    }
}

ReserveSchedule load_schedule_csv(const std::string& path) {
    std::ifstream in = open_input(path);
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) {
        throw ParseError(path + ": empty file");
    }
    ++line_no;
    if (split_csv_row(line) != split_csv_row(kScheduleHeader)) {
        fail_at(path, line_no, std::string("expected header '") + kScheduleHeader + "'");
    }

    ReserveSchedule schedule;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        const auto fields = split_csv_row(line);
        if (fields.size() != 3) {
            fail_at(path, line_no, "expected 3 columns, got " + std::to_string(fields.size()));
        }
        ScheduleEntry entry;
        entry.time_label = fields[0];
        try {
            entry.time_h = parse_time_label(entry.time_label);
        } catch (const ParseError& err) {
            fail_at(path, line_no, err.what());
        }
        entry.inertia_mvas = parse_double_field(fields[1], path, line_no, "inertia_mvas");
        entry.frr_mw = parse_double_field(fields[2], path, line_no, "frr_mw");
        schedule.entries.push_back(std::move(entry));
    }
    return schedule;
}

void save_cost_report_json(const std::string& path, const CostReport& report) {
    const json obj{{"adaptive_cost", report.adaptive_cost},
                   {"bau_cost", report.bau_cost},
                   {"bau_frr_mw", report.bau_frr_mw},
                   {"savings_fraction", report.savings_fraction}};
    open_output(path) << obj.dump(2) << "\n";
}

CostReport load_cost_report_json(const std::string& path) {
    const json obj = load_json_file(path);
    CostReport report;
    report.adaptive_cost = json_number(obj, path, "adaptive_cost");
    report.bau_cost = json_number(obj, path, "bau_cost");
    report.bau_frr_mw = json_number(obj, path, "bau_frr_mw");
    report.savings_fraction = json_number(obj, path, "savings_fraction");
    return report;
}

void save_metrics_json(const std::string& path, const MetricsReport& report) {
    json obj{{"value_a_hz", report.value_a_hz},
             {"value_b_hz", report.value_b_hz},
             {"point_c_hz", report.point_c_hz},
             {"c_to_b_ratio", report.c_to_b_ratio}};
    obj["rocof_hzps"] = report.rocof_hzps ? json(*report.rocof_hzps) : json(nullptr);
    obj["inertia_estimate_mvas"] =
        report.inertia_estimate_mvas ? json(*report.inertia_estimate_mvas) : json(nullptr);
    open_output(path) << obj.dump(2) << "\n";
}

MetricsReport load_metrics_json(const std::string& path) {
    const json obj = load_json_file(path);
    MetricsReport report;
    report.value_a_hz = json_number(obj, path, "value_a_hz");
    report.value_b_hz = json_number(obj, path, "value_b_hz");
    report.point_c_hz = json_number(obj, path, "point_c_hz");
    report.c_to_b_ratio = json_number(obj, path, "c_to_b_ratio");
    if (obj.contains("rocof_hzps") && !obj.at("rocof_hzps").is_null()) {
        report.rocof_hzps = json_number(obj, path, "rocof_hzps");
    }
    if (obj.contains("inertia_estimate_mvas") && !obj.at("inertia_estimate_mvas").is_null()) {
        report.inertia_estimate_mvas = json_number(obj, path, "inertia_estimate_mvas");
    }
    return report;
}

std::string scenario_hash(const Fleet& fleet, const SystemCondition& cond) {
    std::ostringstream text;
    for (const GeneratorUnit& u : fleet.units) {
        text << u.id << '|' << to_string(u.fuel_type) << '|' << fmt_double(u.rated_mva) << '|'
             << fmt_double(u.pmax_mw) << '|' << fmt_double(u.pset_mw) << '|'
             << fmt_double(u.inertia_h_s) << '|' << fmt_double(u.droop_pu) << '|'
             << fmt_double(u.deadband_hz) << '|' << u.responsive << '|' << u.committed << '|'
             << u.merit_rank << ';';
    }
    for (const GovernorParams& params : fleet.governors) {
        text << fmt_double(params.t1_s) << '|' << fmt_double(params.t2_s) << '|'
             << fmt_double(params.hp_fraction) << ';';
    }
    text << fmt_double(cond.nominal_freq_hz) << '|' << fmt_double(cond.load_mw) << '|'
         << fmt_double(cond.damping_pu) << '|' << fmt_double(cond.contingency_mw) << '|'
         << fmt_double(cond.ufls_threshold_hz) << '|' << fmt_double(cond.horizon_s) << '|'
         << fmt_double(cond.dt_s) << '|'
         << (cond.inertia_override_mvas ? fmt_double(*cond.inertia_override_mvas) : "none");

    // FNV-1a, 64-bit.
    const std::string bytes = text.str();
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    char buffer[17];
    std::snprintf(buffer, sizeof(buffer), "%016" PRIx64, hash);
    return buffer;
}

} // namespace frr
