#include "frr/fleet.hpp"

#include "frr/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace frr {

double total_inertia(const Fleet& fleet) {
    double kinetic_mvas = 0.0;
    for (const GeneratorUnit& unit : fleet.units) {
        if (unit.committed) {
            kinetic_mvas += unit.inertia_h_s * unit.rated_mva;
        }
    }
    return kinetic_mvas;
}

double total_frr(const Fleet& fleet) {
    double frr_mw = 0.0;
    for (const GeneratorUnit& unit : fleet.units) {
        if (unit.committed && unit.responsive) {
            frr_mw += headroom_mw(unit);
        }
    }
    return frr_mw;
}

Fleet scale_headroom(const Fleet& fleet, double scale) {
    if (!(scale >= 0.0 && scale <= 1.0)) {
        std::ostringstream msg;
        msg << "headroom scale " << scale << " outside [0, 1]";
        throw DomainError(msg.str());
    }
    Fleet scaled = fleet;
    if (scale == 1.0) {
        return scaled;
    }
    for (GeneratorUnit& unit : scaled.units) {
        if (unit.committed && unit.responsive) {
            // Reserve is sold back into energy: pset rises toward pmax so
            // the nameplate limit stays put.
            unit.pset_mw = unit.pmax_mw - scale * headroom_mw(unit);
        }
    }
    return scaled;
}

Fleet displace_for_renewables(const Fleet& fleet, double load_mw, double renewable_mw) {
    if (!(load_mw > 0.0)) {
        throw DomainError("displacement needs load_mw > 0");
    }
    if (renewable_mw < 0.0 || renewable_mw > load_mw) {
        std::ostringstream msg;
        msg << "renewable_mw " << renewable_mw << " outside [0, load_mw=" << load_mw << "]";
        throw DomainError(msg.str());
    }

    Fleet displaced = fleet;
    const double target_mw = load_mw - renewable_mw;
    double committed_mw = 0.0;
    for (const GeneratorUnit& unit : displaced.units) {
        if (unit.committed) {
            committed_mw += unit.pset_mw;
        }
    }
    if (committed_mw <= target_mw) {
        return displaced;
    }

    std::vector<std::size_t> order;
    order.reserve(displaced.units.size());
    for (std::size_t i = 0; i < displaced.units.size(); ++i) {
        if (displaced.units[i].committed) {
            order.push_back(i);
        }
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return displaced.units[a].merit_rank < displaced.units[b].merit_rank;
    });

    double excess_mw = committed_mw - target_mw;
    for (std::size_t i : order) {
        if (excess_mw <= 0.0) {
            break;
        }
        GeneratorUnit& unit = displaced.units[i];
        if (unit.pset_mw <= excess_mw) {
            excess_mw -= unit.pset_mw;
            unit.committed = false;
        } else {
            // Marginal unit stays on line at reduced dispatch.
            unit.pset_mw -= excess_mw;
            excess_mw = 0.0;
        }
    }
    return displaced;
}

std::array<TypeAggregate, kFuelTypeCount> aggregate_by_type(const Fleet& fleet) {
    std::array<TypeAggregate, kFuelTypeCount> agg{};
    for (const GeneratorUnit& unit : fleet.units) {
        if (!unit.committed || !unit.responsive) {
            continue;
        }
        TypeAggregate& a = agg[static_cast<int>(unit.fuel_type)];
        a.responsive_pmax_mw += unit.pmax_mw;
        a.droop_pu += unit.droop_pu * unit.pmax_mw;
        a.deadband_hz += unit.deadband_hz * unit.pmax_mw;
        a.headroom_mw += headroom_mw(unit);
    }
    for (TypeAggregate& a : agg) {
        if (a.responsive_pmax_mw > 0.0) {
            a.droop_pu /= a.responsive_pmax_mw;
            a.deadband_hz /= a.responsive_pmax_mw;
        }
    }
    return agg;
}

} // namespace frr
