#pragma once

#include "frr/fleet.hpp"
#include "frr/io.hpp"
#include "frr/types.hpp"

#include <cmath>
#include <filesystem>
#include <random>
#include <string>

#ifndef FRR_DATA_DIR
#define FRR_DATA_DIR "data"
#endif

namespace frr::test {

// Unique scratch directory, removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        auto base = std::filesystem::temp_directory_path();
        for (int i = 0;; ++i) {
            path_ = base / (tag + "_" + std::to_string(i));
            std::error_code ec;
            if (std::filesystem::create_directory(path_, ec)) {
                break;
            }
        }
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::string file(const std::string& name) const { return (path_ / name).string(); }
    std::string dir() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

inline std::string data_path(const std::string& name) {
    return std::string(FRR_DATA_DIR) + "/" + name;
}

inline GeneratorUnit make_unit(std::string id,
                               FuelType fuel,
                               double rated_mva,
                               double pmax_mw,
                               double pset_mw,
                               double inertia_h_s,
                               double droop_pu = 0.05,
                               double deadband_hz = 0.0,
                               bool responsive = true,
                               bool committed = true,
                               int merit_rank = 0) {
    GeneratorUnit unit;
    unit.id = std::move(id);
    unit.fuel_type = fuel;
    unit.rated_mva = rated_mva;
    unit.pmax_mw = pmax_mw;
    unit.pset_mw = pset_mw;
    unit.inertia_h_s = inertia_h_s;
    unit.droop_pu = droop_pu;
    unit.deadband_hz = deadband_hz;
    unit.responsive = responsive;
    unit.committed = committed;
    unit.merit_rank = merit_rank;
    return unit;
}

// Non-responsive fleet providing inertia only.
inline Fleet inertia_only_fleet(double kinetic_mvas) {
    Fleet fleet;
    fleet.units.push_back(make_unit("inert", FuelType::steam, kinetic_mvas / 4.0,
                                    kinetic_mvas / 4.0, kinetic_mvas / 8.0, 4.0, 0.0, 0.0,
                                    false, true, 1));
    return fleet;
}

inline Fleet bundled_fleet() {
    Fleet fleet = load_fleet_csv(data_path("fleet.csv"));
    const Scenario scenario = load_scenario_json(data_path("scenario.json"));
    apply_scenario_governors(fleet, scenario);
    return fleet;
}

inline SystemCondition bundled_condition() {
    return load_scenario_json(data_path("scenario.json")).condition;
}

inline Fleet random_fleet(std::mt19937& rng, int min_units = 3, int max_units = 8) {
    std::uniform_int_distribution<int> count_dist(min_units, max_units);
    std::uniform_real_distribution<double> pmax_dist(200.0, 2000.0);
    std::uniform_real_distribution<double> load_frac(0.5, 0.95);
    std::uniform_real_distribution<double> rated_frac(1.05, 1.4);
    std::uniform_real_distribution<double> h_dist(2.0, 6.0);
    std::uniform_real_distribution<double> droop_dist(0.04, 0.06);
    std::uniform_real_distribution<double> db_dist(0.0, 0.036);
    std::uniform_int_distribution<int> fuel_dist(0, kFuelTypeCount - 1);
    std::bernoulli_distribution responsive_dist(0.8);
    std::bernoulli_distribution committed_dist(0.9);

    Fleet fleet;
    const int n = count_dist(rng);
    for (int i = 0; i < n; ++i) {
        const double pmax = pmax_dist(rng);
        const bool responsive = responsive_dist(rng);
        GeneratorUnit unit = make_unit(
            "u" + std::to_string(i), static_cast<FuelType>(fuel_dist(rng)),
            pmax * rated_frac(rng), pmax, pmax * load_frac(rng), h_dist(rng),
            responsive ? droop_dist(rng) : 0.0, responsive ? db_dist(rng) : 0.0, responsive,
            committed_dist(rng), i + 1);
        fleet.units.push_back(std::move(unit));
    }
    return fleet;
}

// Closed-form deviation for the linear case: one responsive type, zero
// deadband, hp_fraction = 1, no damping, no saturation. The swing plus one
// lag reduce to a constant-coefficient second-order equation.
struct LinearCaseOracle {
    double a = 0.0;       // 1 / t1
    double b = 0.0;       // f_n * gain / (2 k t1)
    double v0 = 0.0;      // initial slope, -f_n p / (2 k)
    double df_final = 0.0; // -p / gain

    LinearCaseOracle(double f_n_hz, double p_loss_mw, double k_mvas, double t1_s,
                     double gain_mw_per_hz) {
        a = 1.0 / t1_s;
        b = f_n_hz * gain_mw_per_hz / (2.0 * k_mvas * t1_s);
        v0 = -f_n_hz * p_loss_mw / (2.0 * k_mvas);
        df_final = -p_loss_mw / gain_mw_per_hz;
    }

    double deviation(double t) const {
        const double disc = a * a - 4.0 * b;
        if (disc > 0.0) {
            const double root = std::sqrt(disc);
            const double r1 = 0.5 * (-a + root);
            const double r2 = 0.5 * (-a - root);
            const double ca = (v0 + df_final * r2) / (r1 - r2);
            const double cb = -df_final - ca;
            return df_final + ca * std::exp(r1 * t) + cb * std::exp(r2 * t);
        }
        const double sigma = 0.5 * a;
        const double omega = 0.5 * std::sqrt(-disc);
        const double cc = -df_final;
        const double cd = (v0 + sigma * cc) / omega;
        return df_final +
               std::exp(-sigma * t) * (cc * std::cos(omega * t) + cd * std::sin(omega * t));
    }
};

} // namespace frr::test
