#pragma once

// File formats at the library boundary: density CSV ingestion, sampler JSON
// config, sampler estimator report, and lossless number formatting.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "massplanck/blackhole.hpp"
#include "massplanck/field_sampler.hpp"
#include "massplanck/quantum_potential.hpp"

namespace massplanck::io {

// Scientific notation with 17 significant digits (round-trips any double).
std::string format_double(double value);

struct DensityFile {
  int dims = 1;
  bool has_time = false;
  std::optional<double> dt;          // spacing of the t column, when present
  std::vector<GridDensity> frames;   // one per time slice (one if no t column)
  std::vector<double> origin{0.0, 0.0, 0.0};  // coordinates of index (0,0,0)
};

// Columns `q,n` | `qx,qy,qz,n`, optionally preceded by `t`. Header required;
// `#` lines and blank lines are skipped. Rows are row-major (t slowest, then
// qx, qy, qz fastest) and must sit on a uniform lattice (1e-9 relative).
// Throws ParseError naming the first offending row (1-based line number).
DensityFile read_density_csv(std::istream& in, bool periodic);
DensityFile read_density_csv_file(const std::string& path, bool periodic);

// Writes the density file format (used by tests and examples).
void write_density_csv(std::ostream& out, const GridDensity& density, double origin = 0.0);

// Known keys: grid_points, extent, lambda_c, seed, realizations. Missing
// keys take SamplerConfig defaults (extent defaults to 40 lambda_c); any
// other key is rejected. Throws ConfigError.
SamplerConfig sampler_config_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const SamplerConfig& config);

struct SamplerTolerances {
  double correlation_at_lambda_c = 0.02;
};

// Estimator report: empirical correlation, value at λ_c against e⁻¹,
// Gaussianity metrics, pass/fail flags.
nlohmann::json sampler_report(const SamplerConfig& config, const NoiseField& field,
                              SamplerTolerances tol = {});

// Header `realization,v0,...,v{N-1}` then one realization per row.
void write_realizations_csv(std::ostream& out, const NoiseField& field,
                            std::size_t max_rows = static_cast<std::size_t>(-1));

nlohmann::json to_json(const BlackHoleReport& report);

}  // namespace massplanck::io
