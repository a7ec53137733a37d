// Command-line front end: synthetic data, masks, initialization, inpainting
// and error metrics for phase-valued images.

#include <cstdio>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "s1inpaint/init.hpp"
#include "s1inpaint/io.hpp"
#include "s1inpaint/model.hpp"
#include "s1inpaint/solver.hpp"
#include "s1inpaint/synth.hpp"

namespace {

struct WeightArgs {
  std::vector<double> alpha{1.0, 1.0, 0.0, 0.0};
  std::vector<double> beta{1.0, 1.0};
  double gamma = 1.0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--alpha", alpha, "First-order weights a1,a2,a3,a4")
        ->delimiter(',')
        ->expected(4)
        ->capture_default_str();
    cmd->add_option("--beta", beta, "Second-order weights b1,b2")
        ->delimiter(',')
        ->expected(2)
        ->capture_default_str();
    cmd->add_option("--gamma", gamma, "Mixed second-order weight")->capture_default_str();
  }

  s1::Weights weights() const {
    s1::Weights w;
    std::copy(alpha.begin(), alpha.end(), w.alpha.begin());
    std::copy(beta.begin(), beta.end(), w.beta.begin());
    w.gamma = gamma;
    return w;
  }
};

void print_config(const std::string& command, const std::string& details) {
  std::cerr << "[s1inpaint] " << command << ' ' << details << '\n';
}

s1::Shape resolve_shape(std::size_t rows, std::size_t cols, const std::string& like) {
  if (!like.empty()) return s1::read_phase_file(like).shape();
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("shape required: pass --rows/--cols or --like");
  }
  return {rows, cols};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variational inpainting and denoising of phase-valued images"};
  app.require_subcommand(1);

  // synth
  auto* synth = app.add_subcommand("synth", "Write a synthetic phase image");
  std::string synth_kind, synth_out;
  std::size_t synth_rows = 128, synth_cols = 128, synth_size = 128;
  double synth_slope = 0.2, synth_sigma = 0.0;
  std::string synth_direction = "horizontal";
  std::uint64_t synth_seed = 1;
  synth->add_option("kind", synth_kind, "atan2 | ramp | blocks")
      ->required()
      ->check(CLI::IsMember({"atan2", "ramp", "blocks"}));
  synth->add_option("-o,--output", synth_out, "Output phase file")->required();
  synth->add_option("--size", synth_size, "Grid size for atan2")->capture_default_str();
  synth->add_option("--rows", synth_rows, "Rows (ramp, blocks)")->capture_default_str();
  synth->add_option("--cols", synth_cols, "Columns (ramp, blocks)")->capture_default_str();
  synth->add_option("--slope", synth_slope, "Ramp slope in radians per pixel")
      ->capture_default_str();
  synth->add_option("--direction", synth_direction, "Ramp direction")
      ->check(CLI::IsMember({"horizontal", "vertical"}))
      ->capture_default_str();
  synth->add_option("--noise-sigma", synth_sigma, "Wrapped Gaussian noise level")
      ->capture_default_str();
  synth->add_option("--seed", synth_seed, "Noise seed")->capture_default_str();

  // mask
  auto* mask = app.add_subcommand("mask", "Write a mask (PGM, 0 = unknown, 255 = known)");
  std::string mask_kind, mask_out, mask_like, mask_orientation = "vertical";
  std::size_t mask_rows = 0, mask_cols = 0, band_start = 0, band_width = 1;
  double mask_fraction = 0.2, mask_radius = 16.0;
  std::uint64_t mask_seed = 1;
  mask->add_option("kind", mask_kind, "subsample3 | random | disc | band")
      ->required()
      ->check(CLI::IsMember({"subsample3", "random", "disc", "band"}));
  mask->add_option("-o,--output", mask_out, "Output PGM")->required();
  mask->add_option("--rows", mask_rows, "Rows");
  mask->add_option("--cols", mask_cols, "Columns");
  mask->add_option("--like", mask_like, "Take the shape from this phase file");
  mask->add_option("--fraction", mask_fraction, "Fraction lost (random)")
      ->capture_default_str();
  mask->add_option("--seed", mask_seed, "Seed (random)")->capture_default_str();
  mask->add_option("--radius", mask_radius, "Disc radius in pixels (disc)")
      ->capture_default_str();
  mask->add_option("--orientation", mask_orientation, "Band orientation (band)")
      ->check(CLI::IsMember({"vertical", "horizontal"}))
      ->capture_default_str();
  mask->add_option("--start", band_start, "First band row/column (band)")
      ->capture_default_str();
  mask->add_option("--width", band_width, "Band width (band)")->capture_default_str();

  // init
  auto* init = app.add_subcommand("init", "Initialize the unknown region");
  std::string init_in, init_mask, init_out;
  WeightArgs init_weights;
  init->add_option("-i,--input", init_in, "Input phase file")->required();
  init->add_option("-m,--mask", init_mask, "Mask PGM")->required();
  init->add_option("-o,--output", init_out, "Output phase file")->required();
  init_weights.add_to(init);

  // inpaint
  auto* inpaint = app.add_subcommand("inpaint", "Initialize and run the CPPA");
  std::string in_path, in_mask, in_out, in_gray, in_hue, in_trace;
  WeightArgs in_weights;
  s1::SolverConfig cfg;
  bool noisy = false;
  inpaint->add_option("-i,--input", in_path, "Input phase file")->required();
  inpaint->add_option("-m,--mask", in_mask, "Mask PGM")->required();
  inpaint->add_option("-o,--output", in_out, "Output phase file")->required();
  in_weights.add_to(inpaint);
  inpaint->add_option("--sweeps", cfg.max_sweeps, "Number of CPPA sweeps")
      ->capture_default_str();
  inpaint->add_option("--lambda0", cfg.lambda0, "Initial step size")->capture_default_str();
  inpaint->add_option("--order", cfg.order, "Cycle order as comma-separated labels")
      ->delimiter(',');
  inpaint->add_option("--record-every", cfg.record_energy_every,
                      "Energy trace sampling interval in sweeps")
      ->capture_default_str();
  inpaint->add_option("--threads", cfg.threads, "Worker threads (0: default)")
      ->capture_default_str();
  inpaint->add_flag("--noisy", noisy, "Use the noisy model (data term instead of constraint)");
  inpaint->add_option("--render-gray", in_gray, "Write a grayscale PGM render");
  inpaint->add_option("--render-hue", in_hue, "Write a hue-wheel PPM render");
  inpaint->add_option("--trace", in_trace, "Write the energy trace CSV");

  // render
  auto* render = app.add_subcommand("render", "Render a phase file");
  std::string r_in, r_out, r_style = "hue";
  render->add_option("-i,--input", r_in, "Input phase file")->required();
  render->add_option("-o,--output", r_out, "Output PGM/PPM")->required();
  render->add_option("--style", r_style, "gray | hue")
      ->check(CLI::IsMember({"gray", "hue"}))
      ->capture_default_str();

  // metrics
  auto* metrics = app.add_subcommand("metrics", "Cyclic error between two phase files");
  std::string m_result, m_reference;
  metrics->add_option("result", m_result, "Result phase file")->required();
  metrics->add_option("reference", m_reference, "Reference phase file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*synth) {
      s1::PhaseImage img;
      std::ostringstream cfgs;
      if (synth_kind == "atan2") {
        img = s1::gen_atan2(synth_size);
        cfgs << "size=" << synth_size;
      } else if (synth_kind == "ramp") {
        img = s1::gen_wrapped_ramp({synth_rows, synth_cols}, synth_slope,
                                   synth_direction == "vertical"
                                       ? s1::RampDirection::vertical
                                       : s1::RampDirection::horizontal);
        cfgs << "rows=" << synth_rows << " cols=" << synth_cols << " slope=" << synth_slope
             << " direction=" << synth_direction;
      } else {
        img = s1::gen_blocks({synth_rows, synth_cols});
        cfgs << "rows=" << synth_rows << " cols=" << synth_cols;
      }
      if (synth_sigma > 0.0) img = s1::add_wrapped_gaussian_noise(img, synth_sigma, synth_seed);
      cfgs << " noise_sigma=" << synth_sigma << " seed=" << synth_seed << " output=" << synth_out;
      print_config("synth " + synth_kind, cfgs.str());
      s1::write_phase_file(synth_out, img);
    } else if (*mask) {
      const s1::Shape shape = resolve_shape(mask_rows, mask_cols, mask_like);
      std::ostringstream cfgs;
      cfgs << "shape=" << s1::to_string(shape);
      s1::Mask m;
      if (mask_kind == "subsample3") {
        m = s1::mask_subsample3(shape);
      } else if (mask_kind == "random") {
        m = s1::mask_random(shape, mask_fraction, mask_seed);
        cfgs << " fraction=" << mask_fraction << " seed=" << mask_seed;
      } else if (mask_kind == "disc") {
        m = s1::mask_disc(shape, mask_radius);
        cfgs << " radius=" << mask_radius;
      } else {
        m = s1::mask_band(shape,
                          mask_orientation == "horizontal" ? s1::BandOrientation::horizontal
                                                           : s1::BandOrientation::vertical,
                          band_start, band_width);
        cfgs << " orientation=" << mask_orientation << " start=" << band_start
             << " width=" << band_width;
      }
      cfgs << " output=" << mask_out;
      print_config("mask " + mask_kind, cfgs.str());
      s1::write_mask_file(mask_out, m);
    } else if (*init) {
      const s1::Weights w = init_weights.weights();
      print_config("init", "input=" + init_in + " mask=" + init_mask + " " +
                               s1::to_string(w) + " output=" + init_out);
      const s1::PhaseImage f = s1::read_phase_file(init_in);
      const s1::Mask m = s1::read_mask_file(init_mask);
      s1::require_same_shape(f.shape(), m.shape(), "init");
      s1::write_phase_file(init_out, s1::initialize(f, m, w));
    } else if (*inpaint) {
      const s1::Weights w = in_weights.weights();
      w.validate();
      cfg.validate();
      const auto model = noisy ? s1::ModelKind::noisy : s1::ModelKind::noiseless;
      print_config("inpaint", "input=" + in_path + " mask=" + in_mask + " model=" +
                                  s1::to_string(model) + " " + s1::to_string(w) + " " +
                                  s1::to_string(cfg) + " output=" + in_out);
      const s1::PhaseImage f = s1::read_phase_file(in_path);
      const s1::Mask m = s1::read_mask_file(in_mask);
      s1::require_same_shape(f.shape(), m.shape(), "inpaint");
      const s1::PhaseImage x0 = s1::initialize(f, m, w);
      const s1::SolverReport report = s1::run_cppa(x0, f, m, w, model, cfg);
      s1::write_phase_file(in_out, report.result);
      if (!in_gray.empty()) s1::write_render(in_gray, report.result, s1::RenderStyle::gray);
      if (!in_hue.empty()) s1::write_render(in_hue, report.result, s1::RenderStyle::hue);
      if (!in_trace.empty()) {
        std::string csv = "sweep,energy\n";
        char line[64];
        for (const auto& e : report.energy_trace) {
          std::snprintf(line, sizeof line, "%zu,%.17g\n", e.sweep, e.energy);
          csv += line;
        }
        s1::write_file_atomic(in_trace, csv);
      }
      std::fprintf(stderr, "[s1inpaint] done: %zu sweeps in %.3f s, energy %.9g -> %.9g\n",
                   report.sweeps, report.wall_seconds, report.energy_trace.front().energy,
                   report.energy_trace.back().energy);
    } else if (*render) {
      print_config("render", "input=" + r_in + " style=" + r_style + " output=" + r_out);
      s1::write_render(r_out, s1::read_phase_file(r_in),
                       r_style == "gray" ? s1::RenderStyle::gray : s1::RenderStyle::hue);
    } else if (*metrics) {
      print_config("metrics", "result=" + m_result + " reference=" + m_reference);
      const auto e = s1::cyclic_error(s1::read_phase_file(m_result),
                                      s1::read_phase_file(m_reference));
      std::printf("mse=%#.6g max=%#.6g\n", e.mse, e.max_err);
    }
  } catch (const std::exception& e) {
    std::cerr << "s1inpaint: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
