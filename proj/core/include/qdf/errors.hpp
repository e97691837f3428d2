#pragma once

#include <stdexcept>
#include <string>

namespace qdf {

/// Invalid user input: bad grid sizes, malformed configs, parameter
/// combinations that violate a documented invariant.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// NaN/Inf detected during time evolution.
class blowup_error : public std::runtime_error {
public:
    blowup_error(const std::string& what, double t) : std::runtime_error(what), time(t) {}
    double time;
};

/// Density peak drifted into the guard band next to the periodic boundary.
class domain_exit_error : public std::runtime_error {
public:
    domain_exit_error(const std::string& what, double t) : std::runtime_error(what), time(t) {}
    double time;
};

/// Wigner momentum window failed to capture the field (mass check).
class wigner_window_error : public std::runtime_error {
public:
    wigner_window_error(const std::string& what, double deficit)
        : std::runtime_error(what), mass_deficit(deficit) {}
    double mass_deficit;
};

/// Stability threshold exceeded while running with enforcement on.
class stability_threshold_error : public std::runtime_error {
public:
    stability_threshold_error(const std::string& what, double deviation)
        : std::runtime_error(what), deviation(deviation) {}
    double deviation;
};

}  // namespace qdf
