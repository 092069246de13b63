#pragma once

#include <stdexcept>
#include <string>

namespace cellfade {

// Base class for all library errors that are not plain argument mistakes
// (those use std::invalid_argument).
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// The linear subproblem's design matrix is numerically rank deficient.
class singular_design_error : public error {
public:
    using error::error;
};

// F'F (or another design product) is too ill-conditioned to invert.
class ill_conditioned_design_error : public error {
public:
    explicit ill_conditioned_design_error(const std::string& msg, double cond)
        : error(msg), condition_estimate(cond) {}
    double condition_estimate;
};

// The curve never attains the requested capacity level.
class no_crossing_error : public error {
public:
    using error::error;
};

// The curve may cross, but not within the configured search horizon.
class horizon_exceeded_error : public error {
public:
    using error::error;
};

// CSV input could not be parsed; message names the offending line.
class parse_error : public error {
public:
    using error::error;
};

class duplicate_cycle_error : public error {
public:
    using error::error;
};

class invalid_data_error : public error {
public:
    using error::error;
};

// A trace never degrades to the requested EoL threshold.
class not_observed_error : public error {
public:
    using error::error;
};

class invalid_split_error : public error {
public:
    using error::error;
};

// Too many bootstrap replicate refits failed.
class bootstrap_instability_error : public error {
public:
    explicit bootstrap_instability_error(const std::string& msg, int failed, int total)
        : error(msg), failed_replicates(failed), total_replicates(total) {}
    int failed_replicates;
    int total_replicates;
};

} // namespace cellfade
