// massplanck: command-line front end for the spectral, correlation, sampler,
// quantum-potential and black-hole computations.
//
// Exit codes: 0 success, 1 usage error, 2 domain/config/input error.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "massplanck/blackhole.hpp"
#include "massplanck/constants.hpp"
#include "massplanck/correlation.hpp"
#include "massplanck/errors.hpp"
#include "massplanck/field_sampler.hpp"
#include "massplanck/io.hpp"
#include "massplanck/kernels.hpp"
#include "massplanck/mode_statistics.hpp"
#include "massplanck/quantum_potential.hpp"
#include "massplanck/units.hpp"
#include "table.hpp"

namespace mp = massplanck;
using mp::Dimension;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;

struct GlobalOptions {
  std::string units = "si";
  std::string format;  // empty: per-command default
  std::string output = "-";
};

// Output sink: a file or standard output.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path != "-" && !path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw mp::ParseError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string resolve_format(const GlobalOptions& g, const std::string& fallback,
                           std::initializer_list<const char*> allowed) {
  const std::string f = g.format.empty() ? fallback : g.format;
  for (const char* a : allowed) {
    if (f == a) return f;
  }
  throw mp::DomainError("format '" + f + "' not supported by this subcommand");
}

void emit(const GlobalOptions& g, const mp::cli::Table& table) {
  const std::string format = resolve_format(g, "csv", {"csv", "json"});
  Sink sink(g.output);
  if (format == "json") {
    sink.stream() << mp::cli::to_json(table).dump(2) << '\n';
  } else {
    mp::cli::write_csv(sink.stream(), table);
  }
}

std::vector<double> make_grid(double lo, double hi, std::size_t points, bool log_spaced) {
  if (points == 0) throw mp::DomainError("points must be >= 1");
  if (points == 1) return {lo};
  if (!(hi > lo)) throw mp::DomainError("grid upper bound must exceed the lower bound");
  if (log_spaced && !(lo > 0.0)) throw mp::DomainError("log-spaced grid needs a positive lower bound");
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(points - 1);
    grid[i] = log_spaced ? std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo))) : lo + t * (hi - lo);
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

bool grid_is_log(const std::string& grid) {
  if (grid == "log") return true;
  if (grid == "linear") return false;
  throw mp::DomainError("grid must be log or linear, got '" + grid + "'");
}

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    std::ostringstream msg;
    msg << name << " must be positive and finite, got " << v;
    throw mp::DomainError(msg.str());
  }
}

// ln(x/(e^x - 1)), finite well past the underflow of the linear value.
double log_bose_factor(double x) {
  if (x == 0.0) return 0.0;
  if (x < 700.0) return std::log(x / std::expm1(x));
  return std::log(x) - x;
}

// ---------------------------------------------------------------- spectrum

struct SpectrumArgs {
  double mass = 0.0;
  double temp = 0.0;
  double gamma = 1.0;
  std::optional<double> k_min;
  std::optional<double> k_max;
  std::size_t points = 64;
  std::string grid = "log";
};

void cmd_spectrum(const GlobalOptions& g, const SpectrumArgs& a) {
  const mp::UnitSystem units(mp::parse_unit_mode(g.units));
  mp::ThermalState state{units.to_si(a.mass, Dimension::Mass), units.to_si(a.temp, Dimension::Temperature),
                         a.gamma};
  state.validate();
  if (state.is_photon()) {
    throw mp::WrongBranch("spectrum: mass = 0 is the photon branch; use photon-spectrum");
  }
  const double k_compton = mp::compton_wavenumber(state.mass);
  double k_max = a.k_max ? units.to_si(*a.k_max, Dimension::Wavenumber) : 0.999 * k_compton;
  if (k_max >= k_compton) {
    std::cerr << "warning: k_max = " << k_max << " 1/m reaches the Compton boundary mc/hbar = " << k_compton
              << " 1/m; clamping to 0.999 mc/hbar\n";
    k_max = 0.999 * k_compton;
  }
  double k_min = a.k_min ? units.to_si(*a.k_min, Dimension::Wavenumber) : 1e-3 * k_max;
  require_positive(k_min, "k_min");
  if (k_min > k_max) {
    std::cerr << "warning: k_min exceeds the clamped k_max; clamping k_min to k_max\n";
    k_min = k_max;
  }
  const bool log_spaced = grid_is_log(a.grid);
  const auto ks = make_grid(k_min, k_max, a.points, log_spaced);

  const double kT = mp::constants().k_boltzmann * state.temperature;
  mp::cli::Table t;
  t.subcommand = "spectrum";
  t.units = std::string(mp::to_string(units.mode()));
  t.columns = {"k", "lambda", "mode_energy", "mean_energy", "mode_density", "spectral_density",
               "log_spectral_density"};
  t.meta = {{"mass", a.mass}, {"temperature", a.temp}, {"gamma", a.gamma},
            {"compton_wavenumber", units.from_si(k_compton, Dimension::Wavenumber)}};
  for (double k : ks) {
    const double lambda = 2.0 * mp::pi / k;
    const mp::SpectralPoint p = mp::spectral_density_massive(k, state);
    const double energy = mp::mode_energy_massive(lambda, state);
    const double x = mp::reduced_mode_energy(lambda, state);
    const double density_out = units.from_si(p.mode_density, Dimension::ModeDensity);
    const double kT_out = units.from_si(kT, Dimension::Energy);
    t.rows.push_back({units.from_si(k, Dimension::Wavenumber), units.from_si(lambda, Dimension::Length),
                      units.from_si(energy, Dimension::Energy), units.from_si(p.mean_energy, Dimension::Energy),
                      density_out, units.from_si(p.spectral_density, Dimension::EnergyDensityPerWavenumber),
                      std::log(density_out) + std::log(kT_out) + log_bose_factor(x)});
  }
  emit(g, t);
}

// ---------------------------------------------------------- photon-spectrum

struct PhotonArgs {
  double temp = 0.0;
  std::optional<double> omega_min;
  std::optional<double> omega_max;
  std::size_t points = 1000;
  std::string grid = "log";
};

void cmd_photon_spectrum(const GlobalOptions& g, const PhotonArgs& a) {
  const mp::UnitSystem units(mp::parse_unit_mode(g.units));
  const double temp = units.to_si(a.temp, Dimension::Temperature);
  require_positive(temp, "temp");
  const auto& k = mp::constants();
  const double scale = k.k_boltzmann * temp / k.hbar;  // ω per unit x
  const double w_lo = a.omega_min ? units.to_si(*a.omega_min, Dimension::AngularFrequency) : 1e-4 * scale;
  const double w_hi = a.omega_max ? units.to_si(*a.omega_max, Dimension::AngularFrequency) : 50.0 * scale;
  require_positive(w_lo, "omega_min");
  const auto omegas = make_grid(w_lo, w_hi, a.points, grid_is_log(a.grid));

  mp::cli::Table t;
  t.subcommand = "photon-spectrum";
  t.units = std::string(mp::to_string(units.mode()));
  t.columns = {"omega", "mean_energy", "spectral_density"};
  t.meta = {{"temperature", a.temp}};
  std::vector<double> w_out;
  std::vector<double> rho_out;
  for (double w : omegas) {
    const double rho = units.from_si(mp::planck_spectral_density(w, temp), Dimension::EnergyDensityPerFrequency);
    w_out.push_back(units.from_si(w, Dimension::AngularFrequency));
    rho_out.push_back(rho);
    t.rows.push_back({w_out.back(), units.from_si(mp::photon_mean_energy(w, temp), Dimension::Energy), rho});
  }
  if (omegas.size() >= 2) {
    const double peak = mp::wien_peak_in(temp, omegas.front(), omegas.back());
    const double kT = k.k_boltzmann * temp;
    const double stefan = (mp::pi * mp::pi / 15.0) * std::pow(kT, 4) / std::pow(k.hbar * k.c, 3);
    t.summary = {{"peak_omega", units.from_si(peak, Dimension::AngularFrequency)},
                 {"peak_x", k.hbar * peak / kT},
                 {"integral", mp::kernels::trapezoid(w_out, rho_out)},
                 {"stefan_boltzmann", units.from_si(stefan, Dimension::EnergyDensity)}};
  }
  emit(g, t);
}

// ------------------------------------------------------------- correlation

struct CorrelationArgs {
  double mass = 0.0;
  double temp = 0.0;
  std::optional<double> xi_max;
  std::size_t points = 301;
};

void cmd_correlation(const GlobalOptions& g, const CorrelationArgs& a) {
  const mp::UnitSystem units(mp::parse_unit_mode(g.units));
  const double mass = units.to_si(a.mass, Dimension::Mass);
  const double temp = units.to_si(a.temp, Dimension::Temperature);
  const double lambda_c = mp::correlation_length(mass, temp);
  const double xi_max = a.xi_max ? units.to_si(*a.xi_max, Dimension::Length) : 3.0 * lambda_c;
  require_positive(xi_max, "xi_max");
  const auto lags = mp::uniform_lags(xi_max, a.points);
  const mp::CorrelationFunction numeric = mp::gaussian_correlation(lambda_c, lags);

  mp::cli::Table t;
  t.subcommand = "correlation";
  t.units = std::string(mp::to_string(units.mode()));
  t.columns = {"xi", "G_numeric", "G_analytic", "abs_error"};
  t.meta = {{"lambda_c", units.from_si(lambda_c, Dimension::Length)}};
  double max_err = 0.0;
  for (std::size_t i = 0; i < lags.size(); ++i) {
    const double analytic = mp::analytic_correlation(lags[i], lambda_c);
    const double err = std::abs(numeric.g_values[i] - analytic);
    max_err = std::max(max_err, err);
    t.rows.push_back({units.from_si(lags[i], Dimension::Length), numeric.g_values[i], analytic, err});
  }
  t.summary = {{"max_abs_error", max_err}};
  if (std::isfinite(numeric.lambda_c)) {
    t.summary.emplace_back("recovered_lambda_c", units.from_si(numeric.lambda_c, Dimension::Length));
  }
  emit(g, t);
}

// ------------------------------------------------------------------ sample

struct SampleArgs {
  std::string config_path;
  std::string realizations_path;
  std::size_t max_rows = static_cast<std::size_t>(-1);
};

void cmd_sample(const GlobalOptions& g, const SampleArgs& a) {
  std::ifstream in(a.config_path);
  if (!in) throw mp::ParseError("cannot open sampler config '" + a.config_path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw mp::ParseError(std::string("sampler config is not valid JSON: ") + e.what());
  }
  const mp::SamplerConfig config = mp::io::sampler_config_from_json(doc);
  const std::string format = resolve_format(g, "json", {"json", "csv"});

  const mp::NoiseField field = mp::sample_field(config);
  const nlohmann::json report = mp::io::sampler_report(config, field);

  std::string fields_path = a.realizations_path;
  if (fields_path.empty() && g.output != "-" && !g.output.empty()) {
    const auto dot = g.output.find_last_of('.');
    fields_path = (dot == std::string::npos ? g.output : g.output.substr(0, dot)) + ".realizations.csv";
  }
  if (!fields_path.empty()) {
    std::ofstream out(fields_path);
    if (!out) throw mp::ParseError("cannot open realizations file '" + fields_path + "'");
    mp::io::write_realizations_csv(out, field, a.max_rows);
  } else {
    std::cerr << "note: realizations not written (give --realizations-out or --output FILE)\n";
  }

  Sink sink(g.output);
  if (format == "json") {
    sink.stream() << report.dump(2) << '\n';
    return;
  }
  mp::cli::Table t;
  t.subcommand = "sample";
  t.units = "SI";
  t.columns = {"xi", "G_empirical", "G_analytic"};
  const auto& xi = report["correlation"]["xi"];
  const auto& gv = report["correlation"]["g"];
  for (std::size_t i = 0; i < xi.size(); ++i) {
    const double x = xi[i].get<double>();
    t.rows.push_back({x, gv[i].get<double>(), mp::analytic_correlation(x, config.lambda_c)});
  }
  const auto& gauss = report["gaussianity"];
  t.meta = {{"lambda_c", config.lambda_c},
            {"at_lambda_c", report["correlation"]["at_lambda_c"].get<double>()},
            {"skewness", gauss["skewness"].get<double>()},
            {"excess_kurtosis", gauss["excess_kurtosis"].get<double>()},
            {"pass", report["pass"].get<bool>() ? 1.0 : 0.0}};
  mp::cli::write_csv(sink.stream(), t);
}

// -------------------------------------------------------------------- qpot

struct QpotArgs {
  std::string density_path;
  double mass = 0.0;
  std::optional<double> dt;
  bool periodic = false;
};

void cmd_qpot(const GlobalOptions& g, const QpotArgs& a) {
  const mp::UnitSystem units(mp::parse_unit_mode(g.units));
  const double mass = units.to_si(a.mass, Dimension::Mass);
  require_positive(mass, "mass");
  mp::io::DensityFile file = mp::io::read_density_csv_file(a.density_path, a.periodic);

  // Coordinates arrive in output units; the grid spacing is converted once.
  const double h_in = file.frames.front().spacing;
  for (auto& f : file.frames) f.spacing = units.to_si(h_in, Dimension::Length);

  mp::cli::Table t;
  t.subcommand = "qpot";
  t.units = std::string(mp::to_string(units.mode()));
  const bool three_d = file.dims == 3;
  t.columns = three_d ? std::vector<std::string>{"index", "qx", "qy", "qz", "n", "vqu"}
                      : std::vector<std::string>{"index", "q", "n", "vqu"};

  auto coords = [&](const mp::GridDensity& grid, std::size_t ix, std::size_t iy, std::size_t iz,
                    std::vector<double>& row) {
    if (three_d) {
      row.push_back(file.origin[0] + static_cast<double>(ix) * h_in);
      row.push_back(file.origin[1] + static_cast<double>(iy) * h_in);
    }
    row.push_back(file.origin[2] + static_cast<double>(iz) * h_in);
    row.push_back(grid.values[grid.flat_index(ix, iy, iz)]);
  };
  auto emit_field = [&](const mp::GridDensity& grid, const mp::PotentialField& field, double t_value,
                        bool with_time, double& weighted, double& weight) {
    std::size_t o = 0;
    for (std::size_t i0 = 0; i0 < field.extent[0]; ++i0) {
      for (std::size_t i1 = 0; i1 < field.extent[1]; ++i1) {
        for (std::size_t i2 = 0; i2 < field.extent[2]; ++i2, ++o) {
          const std::size_t ix = i0 + field.offset[0];
          const std::size_t iy = i1 + field.offset[1];
          const std::size_t iz = i2 + field.offset[2];
          std::vector<double> row;
          if (with_time) row.push_back(t_value);
          row.push_back(static_cast<double>(grid.flat_index(ix, iy, iz)));
          coords(grid, ix, iy, iz, row);
          const double v = units.from_si(field.values[o], Dimension::Energy);
          row.push_back(v);
          weighted += grid.values[grid.flat_index(ix, iy, iz)] * v;
          weight += grid.values[grid.flat_index(ix, iy, iz)];
          t.rows.push_back(std::move(row));
        }
      }
    }
  };

  if (!file.has_time) {
    if (a.dt) std::cerr << "warning: --dt ignored, the density file has no t column\n";
    const mp::GridDensity& grid = file.frames.front();
    double weighted = 0.0;
    double weight = 0.0;
    emit_field(grid, mp::vqu_grid_nonrel(grid, mass), 0.0, false, weighted, weight);
    t.summary = {{"mean_qp_energy", units.from_si(mp::mean_qp_energy(grid, mass), Dimension::Energy)}};
    emit(g, t);
    return;
  }

  double dt = units.to_si(*file.dt, Dimension::Time);
  if (a.dt) {
    const double given = units.to_si(*a.dt, Dimension::Time);
    if (std::abs(given / dt - 1.0) > 1e-9) {
      throw mp::DomainError("--dt does not match the spacing of the t column");
    }
    dt = given;
  }
  t.columns.insert(t.columns.begin(), "t");
  const auto result = mp::vqu_grid_dalembert(file.frames, mass, dt);
  double weighted = 0.0;
  double weight = 0.0;
  for (std::size_t s = 0; s < result.slices.size(); ++s) {
    const std::size_t slice = result.first_slice + s;
    const double t_value = *file.dt * static_cast<double>(slice);
    emit_field(file.frames[slice], result.slices[s], t_value, true, weighted, weight);
  }
  // Density-weighted mean of the d'Alembertian potential over evaluated points.
  t.summary = {{"mean_qp_energy", weight > 0.0 ? weighted / weight : 0.0}};
  emit(g, t);
}

// --------------------------------------------------------------- blackhole

struct BlackholeArgs {
  std::optional<double> mass_planck;
  bool threshold = false;
};

void cmd_blackhole(const GlobalOptions& g, const BlackholeArgs& a) {
  const mp::UnitSystem units(mp::parse_unit_mode(g.units));
  const std::string format = resolve_format(g, "text", {"text", "json", "csv"});
  const auto& k = mp::constants();
  Sink sink(g.output);
  std::ostream& out = sink.stream();

  if (a.threshold) {
    const mp::StabilityThreshold thr = mp::stability_threshold();
    if (format == "json") {
      out << nlohmann::json{{"threshold", {{"m_p", thr.planck_units}, {"kg", thr.kg}}}}.dump(2) << '\n';
    } else if (format == "csv") {
      out << "threshold_m_p,threshold_kg\n"
          << mp::io::format_double(thr.planck_units) << ',' << mp::io::format_double(thr.kg) << '\n';
    } else {
      out << "minimum stable mass: " << mp::io::format_double(thr.planck_units) << " m_p ("
          << mp::io::format_double(thr.kg) << " kg)\n";
    }
    return;
  }
  if (!a.mass_planck) throw mp::DomainError("blackhole: give a mass in Planck units or --threshold");
  require_positive(*a.mass_planck, "mass");

  mp::BlackHoleReport r = mp::black_hole_report(*a.mass_planck * k.planck_mass);
  r.gravitational_radius = units.from_si(r.gravitational_radius, Dimension::Length);
  r.vqu_printed = units.from_si(r.vqu_printed, Dimension::Energy);
  r.vqu_geometric = units.from_si(r.vqu_geometric, Dimension::Energy);
  r.e_grav = units.from_si(r.e_grav, Dimension::Energy);
  r.e_binding = units.from_si(r.e_binding, Dimension::Energy);

  if (format == "json") {
    nlohmann::json doc = mp::io::to_json(r);
    doc["units"] = std::string(mp::to_string(units.mode()));
    out << doc.dump(2) << '\n';
    return;
  }
  if (format == "csv") {
    out << "mass_kg,mass_m_p,gravitational_radius,vqu_printed,vqu_geometric,e_grav,e_binding,stable\n";
    for (double v : {r.mass_kg, r.mass_planck, r.gravitational_radius, r.vqu_printed, r.vqu_geometric, r.e_grav,
                     r.e_binding}) {
      out << mp::io::format_double(v) << ',';
    }
    out << (r.stable ? 1 : 0) << '\n';
    return;
  }
  const bool si = units.mode() == mp::UnitMode::SI;
  const double e_unit = si ? k.planck_energy() : 1.0;
  const char* e_name = si ? "J" : "m_p c^2";
  auto energy_line = [&](const char* name, double v) {
    out << name << mp::io::format_double(v) << ' ' << e_name << "  ("
        << mp::io::format_double(v / e_unit) << " m_p c^2)\n";
  };
  out << "mass                  " << mp::io::format_double(r.mass_planck) << " m_p  ("
      << mp::io::format_double(r.mass_kg) << " kg)\n";
  out << "gravitational_radius  " << mp::io::format_double(r.gravitational_radius) << (si ? " m" : " l_p") << '\n';
  energy_line("vqu_printed           ", r.vqu_printed);
  energy_line("vqu_geometric         ", r.vqu_geometric);
  energy_line("e_grav                ", r.e_grav);
  energy_line("e_binding             ", r.e_binding);
  out << "stable                " << (r.stable ? "true" : "false") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"massplanck: generalized Planck law, quantum potential, vacuum noise and black-hole threshold"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--units", g.units, "Unit mode: si | natural (hbar = c = k_B = 1, masses in m_p)")
      ->check(CLI::IsMember({"si", "natural"}));
  app.add_option("--format", g.format, "Output format: csv | json (blackhole also: text)")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  app.add_option("-o,--output", g.output, "Output path ('-' for standard output)");

  SpectrumArgs spectrum;
  auto* sp = app.add_subcommand("spectrum", "Massive-branch spectral density over a k grid");
  sp->add_option("--mass", spectrum.mass, "Particle mass")->required();
  sp->add_option("--temp", spectrum.temp, "Temperature")->required();
  sp->add_option("--gamma", spectrum.gamma, "Lorentz factor of the modes (>= 1)");
  sp->add_option("--k-min", spectrum.k_min, "Smallest wavenumber (default 1e-3 k_max)");
  sp->add_option("--k-max", spectrum.k_max, "Largest wavenumber (default 0.999 mc/hbar)");
  sp->add_option("--points", spectrum.points, "Number of k points");
  sp->add_option("--grid", spectrum.grid, "k spacing: log | linear")->check(CLI::IsMember({"log", "linear"}));

  PhotonArgs photon;
  auto* ph = app.add_subcommand("photon-spectrum", "Planck spectral density over an omega grid");
  ph->add_option("--temp", photon.temp, "Temperature")->required();
  ph->add_option("--omega-min", photon.omega_min, "Smallest angular frequency (default 1e-4 k_B T/hbar)");
  ph->add_option("--omega-max", photon.omega_max, "Largest angular frequency (default 50 k_B T/hbar)");
  ph->add_option("--points", photon.points, "Number of omega points");
  ph->add_option("--grid", photon.grid, "omega spacing: log | linear")->check(CLI::IsMember({"log", "linear"}));

  CorrelationArgs corr;
  auto* co = app.add_subcommand("correlation", "Numeric vs analytic vacuum-noise correlation");
  co->add_option("--mass", corr.mass, "Particle mass")->required();
  co->add_option("--temp", corr.temp, "Temperature")->required();
  co->add_option("--xi-max", corr.xi_max, "Largest lag (default 3 lambda_c)");
  co->add_option("--points", corr.points, "Number of lags");

  SampleArgs sample;
  auto* sa = app.add_subcommand("sample", "Synthesize noise fields and report estimator statistics");
  sa->add_option("config", sample.config_path, "Sampler config JSON")->required();
  sa->add_option("--realizations-out", sample.realizations_path, "Realizations CSV path");
  sa->add_option("--max-rows", sample.max_rows, "Write at most this many realizations");

  QpotArgs qpot;
  auto* qp = app.add_subcommand("qpot", "Quantum potential of a sampled density");
  qp->add_option("density", qpot.density_path, "Density CSV")->required();
  qp->add_option("--mass", qpot.mass, "Particle mass")->required();
  qp->add_option("--dt", qpot.dt, "Time step (density files with a t column)");
  qp->add_flag("--periodic", qpot.periodic, "Treat the grid as periodic");

  BlackholeArgs bh;
  auto* bhc = app.add_subcommand("blackhole", "Black-hole energetics with the quantum potential");
  bhc->add_option("mass", bh.mass_planck, "Mass in Planck masses");
  bhc->add_flag("--threshold", bh.threshold, "Print the minimum stable mass");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*sp) cmd_spectrum(g, spectrum);
    else if (*ph) cmd_photon_spectrum(g, photon);
    else if (*co) cmd_correlation(g, corr);
    else if (*sa) cmd_sample(g, sample);
    else if (*qp) cmd_qpot(g, qpot);
    else if (*bhc) cmd_blackhole(g, bh);
  } catch (const mp::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const mp::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const mp::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return 0;
}
