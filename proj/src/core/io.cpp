#include "massplanck/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "massplanck/errors.hpp"

namespace massplanck::io {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::scientific, 16);
  return std::string(buf, res.ptr);
}

namespace {

constexpr double kSpacingTolerance = 1e-9;

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    std::string_view f = line.substr(start, comma == std::string_view::npos ? line.npos : comma - start);
    while (!f.empty() && (f.front() == ' ' || f.front() == '\t')) f.remove_prefix(1);
    while (!f.empty() && (f.back() == ' ' || f.back() == '\t' || f.back() == '\r')) f.remove_suffix(1);
    out.push_back(f);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

double parse_number(std::string_view text, std::size_t line_no) {
  double v = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last || !std::isfinite(v)) {
    throw ParseError("line " + std::to_string(line_no) + ": '" + std::string(text) +
                     "' is not a finite number");
  }
  return v;
}

struct Row {
  std::size_t line_no;
  std::vector<double> v;
};

// Counts the leading rows whose first `depth` coordinates match row 0.
std::size_t leading_run(const std::vector<Row>& rows, std::size_t depth) {
  std::size_t n = 0;
  while (n < rows.size()) {
    bool same = true;
    for (std::size_t c = 0; c < depth; ++c) same = same && rows[n].v[c] == rows[0].v[c];
    if (!same) break;
    ++n;
  }
  return n;
}

}  // namespace

DensityFile read_density_csv(std::istream& in, bool periodic) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    for (auto f : split_fields(line)) header.emplace_back(f);
    break;
  }
  if (header.empty()) throw ParseError("density CSV: missing header row");

  DensityFile file;
  std::vector<std::string> expect;
  if (header == std::vector<std::string>{"q", "n"}) {
    file.dims = 1;
  } else if (header == std::vector<std::string>{"qx", "qy", "qz", "n"}) {
    file.dims = 3;
  } else if (header == std::vector<std::string>{"t", "q", "n"}) {
    file.dims = 1;
    file.has_time = true;
  } else if (header == std::vector<std::string>{"t", "qx", "qy", "qz", "n"}) {
    file.dims = 3;
    file.has_time = true;
  } else {
    throw ParseError("line " + std::to_string(line_no) +
                     ": header must be one of q,n | qx,qy,qz,n | t,q,n | t,qx,qy,qz,n");
  }
  const std::size_t columns = header.size();

  std::vector<Row> rows;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto fields = split_fields(line);
    if (fields.size() != columns) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(columns) +
                       " fields, found " + std::to_string(fields.size()));
    }
    Row r{line_no, {}};
    r.v.reserve(columns);
    for (auto f : fields) r.v.push_back(parse_number(f, line_no));
    if (r.v.back() < 0.0) {
      throw ParseError("line " + std::to_string(line_no) + ": density must be >= 0");
    }
    rows.push_back(std::move(r));
  }
  if (rows.empty()) throw ParseError("density CSV: no data rows");

  // Lattice extents from the row-major structure; a coordinate column is
  // constant over runs of rows whose slower coordinates agree.
  const std::size_t coord_cols = columns - 1;
  std::vector<std::size_t> counts(coord_cols, 1);
  {
    std::size_t block = rows.size();
    for (std::size_t c = 0; c < coord_cols; ++c) {
      const std::size_t inner = leading_run(rows, c + 1);
      if (inner == 0 || block % inner != 0) {
        throw ParseError("density CSV: rows do not form a row-major lattice (column " +
                         header[c] + ")");
      }
      counts[c] = block / inner;
      block = inner;
    }
    if (block != 1) throw ParseError("density CSV: duplicate lattice points");
  }

  // Per-column spacing and the uniformity check.
  std::vector<double> spacing(coord_cols, 0.0);
  std::vector<double> origin(coord_cols, 0.0);
  std::vector<std::size_t> stride(coord_cols, 1);
  for (std::size_t c = coord_cols; c-- > 0;) {
    if (c + 1 < coord_cols) stride[c] = stride[c + 1] * counts[c + 1];
  }
  for (std::size_t c = 0; c < coord_cols; ++c) {
    origin[c] = rows[0].v[c];
    if (counts[c] < 2) {
      throw ParseError("density CSV: column " + header[c] + " needs at least 2 distinct values");
    }
    const double last = rows[(counts[c] - 1) * stride[c]].v[c];
    spacing[c] = (last - origin[c]) / static_cast<double>(counts[c] - 1);
    if (!(spacing[c] > 0.0)) {
      throw ParseError("density CSV: column " + header[c] + " must be strictly ascending");
    }
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t c = 0; c < coord_cols; ++c) {
      const std::size_t idx = (i / stride[c]) % counts[c];
      const double expected = origin[c] + static_cast<double>(idx) * spacing[c];
      if (std::abs(rows[i].v[c] - expected) > kSpacingTolerance * spacing[c] * std::max<double>(1.0, static_cast<double>(idx))) {
        throw ParseError("line " + std::to_string(rows[i].line_no) + ": " + header[c] +
                         " is off the uniform lattice (spacing tolerance 1e-9 relative)");
      }
    }
  }

  const std::size_t first_space = file.has_time ? 1 : 0;
  const double h = spacing[first_space];
  for (std::size_t c = first_space + 1; c < coord_cols; ++c) {
    if (std::abs(spacing[c] / h - 1.0) > kSpacingTolerance) {
      throw ParseError("density CSV: spatial spacing must be equal on every axis");
    }
  }
  if (file.has_time) file.dt = spacing[0];
  for (std::size_t c = first_space; c < coord_cols; ++c) {
    file.origin[file.dims == 1 ? 2 : c - first_space] = origin[c];
  }

  const std::size_t slices = file.has_time ? counts[0] : 1;
  const std::size_t frame = rows.size() / slices;
  Extent extent{1, 1, frame};
  if (file.dims == 3) extent = {counts[first_space], counts[first_space + 1], counts[first_space + 2]};
  for (std::size_t t = 0; t < slices; ++t) {
    std::vector<double> values(frame);
    for (std::size_t i = 0; i < frame; ++i) values[i] = rows[t * frame + i].v.back();
    try {
      file.frames.push_back(file.dims == 1 ? GridDensity::line(std::move(values), h, periodic)
                                           : GridDensity::cube(std::move(values), extent, h, periodic));
    } catch (const DomainError& e) {
      throw ParseError(std::string("density CSV: ") + e.what());
    }
  }
  return file;
}

DensityFile read_density_csv_file(const std::string& path, bool periodic) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open density file '" + path + "'");
  return read_density_csv(in, periodic);
}

void write_density_csv(std::ostream& out, const GridDensity& density, double origin) {
  const double h = density.spacing;
  if (density.dims == 1) {
    out << "q,n\n";
    for (std::size_t i = 0; i < density.values.size(); ++i) {
      out << format_double(origin + static_cast<double>(i) * h) << ','
          << format_double(density.values[i]) << '\n';
    }
    return;
  }
  out << "qx,qy,qz,n\n";
  for (std::size_t ix = 0; ix < density.extent[0]; ++ix) {
    for (std::size_t iy = 0; iy < density.extent[1]; ++iy) {
      for (std::size_t iz = 0; iz < density.extent[2]; ++iz) {
        out << format_double(origin + static_cast<double>(ix) * h) << ','
            << format_double(origin + static_cast<double>(iy) * h) << ','
            << format_double(origin + static_cast<double>(iz) * h) << ','
            << format_double(density.values[density.flat_index(ix, iy, iz)]) << '\n';
      }
    }
  }
}

SamplerConfig sampler_config_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("sampler config must be a JSON object");
  static const char* known[] = {"grid_points", "extent", "lambda_c", "seed", "realizations"};
  for (const auto& item : doc.items()) {
    if (std::find_if(std::begin(known), std::end(known),
                     [&](const char* k) { return item.key() == k; }) == std::end(known)) {
      throw ConfigError("unknown sampler config field '" + item.key() + "'");
    }
  }
  auto count_field = [&](const char* key, std::size_t fallback) -> std::size_t {
    if (!doc.contains(key)) return fallback;
    const auto& v = doc.at(key);
    if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<long long>() < 0)) {
      throw ConfigError(std::string(key) + " must be a non-negative integer");
    }
    return v.get<std::size_t>();
  };
  auto real_field = [&](const char* key, double fallback) -> double {
    if (!doc.contains(key)) return fallback;
    const auto& v = doc.at(key);
    if (!v.is_number()) throw ConfigError(std::string(key) + " must be a number");
    return v.get<double>();
  };

  SamplerConfig config;
  config.grid_points = count_field("grid_points", config.grid_points);
  config.lambda_c = real_field("lambda_c", config.lambda_c);
  config.extent = real_field("extent", 40.0 * config.lambda_c);
  config.realizations = count_field("realizations", config.realizations);
  if (doc.contains("seed")) {
    const auto& v = doc.at("seed");
    if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<long long>() < 0)) {
      throw ConfigError("seed must be a non-negative 64-bit integer");
    }
    config.seed = v.get<std::uint64_t>();
  }
  config.validate();
  return config;
}

nlohmann::json to_json(const SamplerConfig& config) {
  return {{"grid_points", config.grid_points},
          {"extent", config.extent},
          {"lambda_c", config.lambda_c},
          {"seed", config.seed},
          {"realizations", config.realizations}};
}

namespace {

nlohmann::json finite_or_null(double v) {
  return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json sampler_report(const SamplerConfig& config, const NoiseField& field,
                              SamplerTolerances tol) {
  const CorrelationFunction g = empirical_correlation(field);
  const GaussianityReport gauss = gaussianity_check(field);

  const double target = std::exp(-1.0);
  const double at_lc = g.at(config.lambda_c);
  const bool corr_pass = std::abs(at_lc - target) <= tol.correlation_at_lambda_c;

  nlohmann::json doc;
  doc["config"] = to_json(config);
  doc["correlation"] = {
      {"xi", g.xi_grid},
      {"g", g.g_values},
      {"recovered_lambda_c", finite_or_null(g.lambda_c)},
      {"at_lambda_c", at_lc},
      {"target", target},
      {"tolerance", tol.correlation_at_lambda_c},
      {"pass", corr_pass},
  };
  doc["gaussianity"] = {
      {"samples", gauss.samples},
      {"stride", gauss.stride},
      {"mean", gauss.mean},
      {"variance", gauss.variance},
      {"skewness", gauss.skewness},
      {"excess_kurtosis", gauss.excess_kurtosis},
      {"skew_threshold", gauss.skew_threshold},
      {"kurt_threshold", gauss.kurt_threshold},
      {"degenerate", gauss.degenerate},
      {"skew_pass", gauss.skew_pass},
      {"kurt_pass", gauss.kurt_pass},
      {"pass", gauss.pass},
  };
  doc["pass"] = corr_pass && gauss.pass;
  return doc;
}

void write_realizations_csv(std::ostream& out, const NoiseField& field, std::size_t max_rows) {
  out << "# spacing=" << format_double(field.spacing)
      << " lambda_c=" << format_double(field.lambda_c) << '\n';
  out << "realization";
  for (std::size_t i = 0; i < field.grid_points; ++i) out << ",v" << i;
  out << '\n';
  const std::size_t rows = std::min(max_rows, field.realizations);
  for (std::size_t r = 0; r < rows; ++r) {
    out << r;
    for (double v : field.row(r)) out << ',' << format_double(v);
    out << '\n';
  }
}

nlohmann::json to_json(const BlackHoleReport& r) {
  return {{"mass", {{"kg", r.mass_kg}, {"m_p", r.mass_planck}}},
          {"gravitational_radius", r.gravitational_radius},
          {"vqu_printed", r.vqu_printed},
          {"vqu_geometric", r.vqu_geometric},
          {"e_grav", r.e_grav},
          {"e_binding", r.e_binding},
          {"stable", r.stable}};
}

}  // namespace massplanck::io
