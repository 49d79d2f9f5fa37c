#pragma once

// The subcommands of the `uncert` tool as plain functions writing to a stream.
// Each returns the process exit code: 0 success, 1 check failure. Input
// errors throw std::invalid_argument (exit code 2 in the tool).

#include "uncert/dictionaries.hpp"
#include "uncert/moments.hpp"
#include "uncert/symmetry.hpp"
#include "uncert/verify.hpp"

#include <optional>
#include <ostream>
#include <string>

namespace uncert {

enum class OutputFormat { json, csv };

int cmd_moments(const std::string& descriptor, const std::optional<AtomParams>& gamma, double class_tol,
                std::ostream& out);

int cmd_dict_table(Family family, int n_max, OutputFormat format, std::ostream& out);

/// With limit_check, the monotone-limit claims are appended (json) or written
/// to `diag` (csv), and a failed claim gives exit code 1.
int cmd_rect_scan(int p_min, int p_max, bool limit_check, OutputFormat format, std::ostream& out,
                  std::ostream& diag);

struct SymmetryOptions {
    Axis axis = Axis::barycenter;
    bool centering = true;
    double class_tol = 0.0;
};
int cmd_symmetry_check(const std::string& descriptor, const SymmetryOptions& opts, std::ostream& out);

int cmd_spectrum_sample(const std::string& descriptor, double omega_min, double omega_max, int count,
                        std::ostream& out);

int cmd_verify(const VerifyOptions& opts, std::ostream& out);

}  // namespace uncert
