#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lambdaosc/observables.hpp"
#include "lambdaosc/sweep.hpp"

namespace lambdaosc {

// Stable, versioned row schema. Column order is fixed:
//   axis, case, mean_n, mean_n_over_nbar, g2, Rz, pop1, pop2, pop3,
//   n_max_used, converged, residual
// Optional analytic (g = 0) population columns are appended after the
// fixed prefix when provided.
inline constexpr int kCsvSchemaVersion = 1;

std::string csv_header(bool with_analytic = false);
std::string csv_row(const SweepRow& row,
                    const std::optional<EmitterPopulations>& analytic = {});

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows,
               const std::vector<std::optional<EmitterPopulations>>& analytic =
                   {});

// Machine-readable run manifest: config echo, code version, per-row status.
std::string run_manifest_json(const std::string& config_json,
                              const std::vector<SweepRow>& rows);

// %.17g formatting shared by every emitter so identical runs are
// byte-identical.
std::string format_double(double v);

} // namespace lambdaosc
