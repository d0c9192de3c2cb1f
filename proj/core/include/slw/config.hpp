#pragma once

#include <cstdlib>
#include <string>

#include "slw/errors.hpp"
#include "slw/oracle.hpp"
#include "slw/special_functions.hpp"

namespace slw {

// Run-wide knobs; every field can be overridden from the environment
// (SLW_REL_TOL, SLW_ABS_FLOOR, SLW_HEIGHT_BOUND, SLW_LATTICE_BOUND,
// SLW_QUAD_POINTS, SLW_WORKERS).
struct Config {
    Precision precision;
    long height_bound = 20;
    oracle::LatticeTruncation lattice;
    unsigned parallelism = 1;

    void validate() const {
        precision.validate();
        if (height_bound < 1) throw domain_error("height bound must be positive");
        lattice.validate();
        if (parallelism < 1) throw domain_error("worker count must be positive");
    }

    static Config from_env() {
        Config c;
        auto get = [](const char* name) -> const char* { return std::getenv(name); };
        if (const char* v = get("SLW_REL_TOL")) c.precision.rel_tol = std::stod(v);
        if (const char* v = get("SLW_ABS_FLOOR")) c.precision.abs_floor = std::stod(v);
        if (const char* v = get("SLW_HEIGHT_BOUND")) c.height_bound = std::stol(v);
        if (const char* v = get("SLW_LATTICE_BOUND")) c.lattice.coeff_bound = std::stol(v);
        if (const char* v = get("SLW_QUAD_POINTS")) c.lattice.quadrature_points = std::stol(v);
        if (const char* v = get("SLW_WORKERS")) c.parallelism = static_cast<unsigned>(std::stoul(v));
        c.validate();
        return c;
    }
};

} // namespace slw
