// scforge: simulator and design-space explorer for thermometer-coded
// stochastic computing blocks.
//
// Subcommands: encode, decode, gelu, softmax, dse, cost, rerun.
// Every run that writes files also writes a manifest.json from which
// `scforge rerun` reproduces the outputs byte for byte.
//
// Exit codes: 0 ok, 2 usage, 3 unrealizable configuration, 4 I/O failure.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "scforge/bernstein.hpp"
#include "scforge/cost.hpp"
#include "scforge/digest.hpp"
#include "scforge/dse.hpp"
#include "scforge/eval.hpp"
#include "scforge/math.hpp"
#include "scforge/rng.hpp"
#include "scforge/si.hpp"
#include "scforge/softmax.hpp"
#include "scforge/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace scforge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitUnrealizable = 3;
constexpr int kExitIo = 4;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string manifest_digest(const std::string& subcommand, const json& config) {
  return digest_hex(subcommand + "\n" + config.dump() + "\n" + kVersion);
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

void write_json_file(const fs::path& path, const json& j) {
  write_text(path, j.dump(2) + "\n");
}

json load_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  json j;
  in >> j;
  return j;
}

void write_manifest(const fs::path& dir, const std::string& subcommand,
                    const json& config, const std::vector<std::string>& outputs) {
  json manifest{{"tool", "scforge"},
                {"version", kVersion},
                {"subcommand", subcommand},
                {"config", config},
                {"outputs", outputs},
                {"digest", manifest_digest(subcommand, config)}};
  write_json_file(dir / "manifest.json", manifest);
}

fs::path prepare_out_dir(const std::string& out) {
  fs::path dir(out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string());
  return dir;
}

// ---------------------------------------------------------------------------
// Subcommand bodies, driven by a resolved config so `rerun` shares the code.
// ---------------------------------------------------------------------------

void run_encode(const json& config, const std::optional<fs::path>& out_dir) {
  const Rational alpha = parse_rational(config.at("alpha").get<std::string>());
  const double value = std::stod(config.at("value").get<std::string>());
  const std::int64_t bsl = config.at("bsl").get<std::int64_t>();
  const auto stream = encode(value, bsl, alpha);
  std::cout << stream.to_text() << "  alpha=" << to_string(stream.alpha())
            << "  value=" << decode(stream) << "\n";
  if (out_dir) {
    const std::string digest = manifest_digest("encode", config);
    write_json_file(*out_dir / "encode.json",
                    json{{"bits", stream.to_text()},
                         {"alpha", to_string(stream.alpha())},
                         {"length", stream.length()},
                         {"ones", stream.ones()},
                         {"value", decode(stream)},
                         {"manifest_digest", digest}});
    write_manifest(*out_dir, "encode", config, {"encode.json"});
  }
}

void run_decode(const json& config, const std::optional<fs::path>& out_dir) {
  const Rational alpha = parse_rational(config.at("alpha").get<std::string>());
  const auto stream =
      ThermometerStream::parse(config.at("bits").get<std::string>(), alpha);
  std::cout << decode(stream) << "\n";
  if (out_dir) {
    const std::string digest = manifest_digest("decode", config);
    write_json_file(*out_dir / "decode.json",
                    json{{"bits", stream.to_text()},
                         {"alpha", to_string(stream.alpha())},
                         {"value", decode(stream)},
                         {"manifest_digest", digest}});
    write_manifest(*out_dir, "decode", config, {"decode.json"});
  }
}

struct BaselineSpec {
  int terms = 4;
  std::int64_t bsl = 1024;
};

std::optional<BaselineSpec> parse_baseline(const json& config) {
  if (!config.contains("baseline") || config.at("baseline").is_null())
    return std::nullopt;
  const std::string text = config.at("baseline").get<std::string>();
  BaselineSpec spec;
  long long bsl = 0;
  if (std::sscanf(text.c_str(), "bernstein:%d:%lld", &spec.terms, &bsl) != 2 ||
      spec.terms < 2 || bsl < 1)
    throw CLI::ValidationError("--baseline", "expected bernstein:TERMS:BSL");
  spec.bsl = bsl;
  return spec;
}

void run_gelu(const json& config, const fs::path& out_dir) {
  const std::int64_t b_in = config.at("b_in").get<std::int64_t>();
  const std::int64_t b_out = config.at("b_out").get<std::int64_t>();
  const Rational alpha_in = parse_rational(config.at("alpha_in").get<std::string>());
  const Rational alpha_out =
      parse_rational(config.at("alpha_out").get<std::string>());
  const auto dist = Distribution::parse(config.at("dist").get<std::string>());
  const std::int64_t samples = config.at("samples").get<std::int64_t>();
  const auto seed = config.at("seed").get<std::uint64_t>();
  const std::string digest = manifest_digest("gelu", config);

  const auto cfg = synthesize([](double x) { return gelu(x); }, b_in, b_out,
                              alpha_in, alpha_out);
  json si_json = cfg.to_json();
  si_json["manifest_digest"] = digest;
  write_json_file(out_dir / "si_config.json", si_json);

  const auto rows = gen_vectors(dist, 1, samples, seed);
  std::vector<double> xs;
  xs.reserve(rows.size());
  for (const auto& row : rows) xs.push_back(row[0]);

  const std::string cfg_digest = digest_hex(cfg.to_json().dump());
  const auto si_report = mae_gelu(
      [&](double x, std::int64_t) {
        return decode(si_apply(cfg, encode(x, b_in, alpha_in)));
      },
      "si-gelu", cfg_digest, xs, dist, seed);
  json si_eval = si_report.to_json();
  si_eval["manifest_digest"] = digest;
  write_json_file(out_dir / "eval_si.json", si_eval);

  const auto cost = cost_si(cfg);
  json cost_json = cost.to_json();
  cost_json["manifest_digest"] = digest;
  write_json_file(out_dir / "cost.json", cost_json);

  std::vector<std::string> outputs{"si_config.json", "eval_si.json", "cost.json"};
  std::cout << "si-gelu b_in=" << b_in << " b_out=" << b_out
            << " mae=" << si_report.mae << " gates=" << cost.gate_count
            << " adp=" << cost.adp_proxy << "\n";

  if (const auto baseline = parse_baseline(config)) {
    const double window = to_double(alpha_in) * static_cast<double>(b_in) / 2.0;
    const auto bp = fit_bernstein([](double x) { return gelu(x); },
                                  baseline->terms - 1, -window, window,
                                  baseline->bsl);
    const auto bp_report = mae_gelu(
        [&](double x, std::int64_t i) {
          return simulate_bernstein_sc(bp, x,
                                       mix64(seed, 0xBE, static_cast<std::uint64_t>(i)));
        },
        "bernstein", digest_hex(json{{"terms", baseline->terms},
                                     {"bsl", baseline->bsl}}
                                    .dump()),
        xs, dist, seed);
    json bp_eval = bp_report.to_json();
    bp_eval["manifest_digest"] = digest;
    bp_eval["terms"] = baseline->terms;
    bp_eval["bsl"] = baseline->bsl;
    write_json_file(out_dir / "eval_bernstein.json", bp_eval);
    outputs.push_back("eval_bernstein.json");
    std::cout << "bernstein terms=" << baseline->terms << " bsl=" << baseline->bsl
              << " mae=" << bp_report.mae << "\n";
  }
  write_manifest(out_dir, "gelu", config, outputs);
}

void run_softmax(const json& config, const fs::path& out_dir) {
  const SoftmaxConfig cfg = SoftmaxConfig::from_json(config.at("softmax"));
  const auto dist = Distribution::parse(config.at("dist").get<std::string>());
  const std::int64_t count = config.at("count").get<std::int64_t>();
  const auto seed = config.at("seed").get<std::uint64_t>();
  const bool trace = config.at("trace").get<bool>();
  const std::string digest = manifest_digest("softmax", config);

  const auto vectors = gen_vectors(dist, cfg.m, count, seed);
  const auto report = mae_softmax(cfg, vectors, dist, seed);
  json eval_json = report.to_json();
  eval_json["manifest_digest"] = digest;
  write_json_file(out_dir / "eval.json", eval_json);

  const auto cost = cost_softmax(cfg);
  json cost_json = cost.to_json();
  cost_json["manifest_digest"] = digest;
  write_json_file(out_dir / "cost.json", cost_json);

  std::vector<std::string> outputs{"eval.json", "cost.json"};
  if (trace) {
    json rows = json::array();
    for (const auto& x : vectors) {
      const auto streams = encode_softmax_input(x, cfg);
      std::vector<double> xq(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) xq[i] = decode(streams[i]);
      const auto sc = sc_softmax(streams, cfg);
      std::vector<double> sc_values(sc.size());
      for (std::size_t i = 0; i < sc.size(); ++i) sc_values[i] = decode(sc[i]);
      rows.push_back(json{{"x", x},
                          {"x_quantized", xq},
                          {"sc", sc_values},
                          {"float_iterative", float_iterative_softmax(xq, cfg.k)},
                          {"exact", exact_softmax(x)}});
    }
    write_json_file(out_dir / "trace.json",
                    json{{"manifest_digest", digest}, {"vectors", rows}});
    outputs.push_back("trace.json");
  }
  write_manifest(out_dir, "softmax", config, outputs);
  std::cout << "sc-softmax m=" << cfg.m << " k=" << cfg.k << " b_y=" << cfg.b_y
            << " mae=" << report.mae << " adp=" << cost.adp_proxy << "\n";
}

void run_dse(const json& config, const fs::path& out_dir, int threads) {
  const DseGrid grid = DseGrid::from_json(config.at("grid"));
  const std::string digest = manifest_digest("dse", config);
  auto points = evaluate_grid(grid, threads);
  write_results_csv(points, (out_dir / "results.csv").string(), digest);
  write_json_file(out_dir / "front.json", front_to_json(points, digest));
  write_manifest(out_dir, "dse", config, {"results.csv", "front.json"});

  std::size_t realizable = 0, on_front = 0;
  for (const auto& p : points) {
    realizable += p.realizable ? 1 : 0;
    on_front += p.on_front ? 1 : 0;
  }
  std::cout << "dse points=" << points.size() << " realizable=" << realizable
            << " front=" << on_front << "\n";
}

void run_cost(const json& config, const std::optional<fs::path>& out_dir) {
  const std::string kind = config.at("kind").get<std::string>();
  CostReport report;
  if (kind == "bsn") {
    report = cost_bsn(config.at("n").get<std::int64_t>());
  } else if (kind == "si") {
    const auto si = SiConfig::from_json(config.at("si_config"));
    report = cost_si(si);
  } else {
    const SoftmaxConfig cfg = SoftmaxConfig::from_json(config.at("softmax"));
    report = cost_softmax(cfg);
  }
  json j = report.to_json();
  std::cout << j.dump(2) << "\n";
  if (out_dir) {
    j["manifest_digest"] = manifest_digest("cost", config);
    write_json_file(*out_dir / "cost.json", j);
    write_manifest(*out_dir, "cost", config, {"cost.json"});
  }
}

int dispatch(const std::string& subcommand, const json& config,
             const fs::path& out_dir, int threads) {
  if (subcommand == "encode")
    run_encode(config, out_dir);
  else if (subcommand == "decode")
    run_decode(config, out_dir);
  else if (subcommand == "gelu")
    run_gelu(config, out_dir);
  else if (subcommand == "softmax")
    run_softmax(config, out_dir);
  else if (subcommand == "dse")
    run_dse(config, out_dir, threads);
  else if (subcommand == "cost")
    run_cost(config, out_dir);
  else
    throw IoError("manifest names unknown subcommand " + subcommand);
  return kExitOk;
}

int env_threads() {
  if (const char* env = std::getenv("SC_FORGE_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic stochastic-computing block simulator and design-space explorer"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  // encode ------------------------------------------------------------------
  auto* cmd_encode = app.add_subcommand("encode", "Encode a value into a thermometer stream");
  std::string enc_value, enc_alpha = "1";
  std::int64_t enc_bsl = 8;
  std::string enc_out;
  cmd_encode->add_option("--value", enc_value, "Value to encode")->required();
  cmd_encode->add_option("--bsl", enc_bsl, "Stream length");
  cmd_encode->add_option("--alpha", enc_alpha, "Scaling factor (p/q or decimal)");
  cmd_encode->add_option("--out", enc_out, "Output directory");

  // decode ------------------------------------------------------------------
  auto* cmd_decode = app.add_subcommand("decode", "Decode a thermometer stream");
  std::string dec_bits, dec_alpha = "1", dec_out;
  cmd_decode->add_option("--bits", dec_bits, "Stream text, e.g. \"1110 0000\"")->required();
  cmd_decode->add_option("--alpha", dec_alpha, "Scaling factor");
  cmd_decode->add_option("--out", dec_out, "Output directory");

  // gelu --------------------------------------------------------------------
  auto* cmd_gelu = app.add_subcommand("gelu", "Synthesize and evaluate a GELU block");
  std::int64_t gelu_bin = 8, gelu_bout = 0, gelu_samples = 20000;
  std::string gelu_ain, gelu_aout, gelu_dist = "uniform:-4:4", gelu_baseline, gelu_out = ".";
  std::uint64_t gelu_seed = 1;
  cmd_gelu->add_option("--bsl-in", gelu_bin, "Input stream length")->required();
  cmd_gelu->add_option("--bsl-out", gelu_bout, "Output stream length (default: bsl-in)");
  cmd_gelu->add_option("--alpha-in", gelu_ain, "Input scale (default 8/bsl-in)");
  cmd_gelu->add_option("--alpha-out", gelu_aout, "Output scale (default 8/bsl-out)");
  cmd_gelu->add_option("--dist", gelu_dist, "Sample distribution");
  cmd_gelu->add_option("--samples", gelu_samples, "Sample count");
  cmd_gelu->add_option("--seed", gelu_seed, "RNG seed");
  cmd_gelu->add_option("--baseline", gelu_baseline, "bernstein:TERMS:BSL comparison");
  cmd_gelu->add_option("--out", gelu_out, "Output directory");

  // softmax -----------------------------------------------------------------
  auto* cmd_softmax = app.add_subcommand("softmax", "Evaluate the iterative softmax block");
  std::int64_t sm_m = 0, sm_k = 1, sm_bx = 8, sm_by = 64, sm_s1 = 1, sm_s2 = 1,
               sm_count = 100;
  std::string sm_ax, sm_ay, sm_mode = "centered", sm_alpha_mode = "fixed",
              sm_dist = "gaussian:0:1:4", sm_out = ".";
  std::uint64_t sm_seed = 1;
  bool sm_no_special = false, sm_trace = false;
  cmd_softmax->add_option("--m", sm_m, "Row-vector length")->required();
  cmd_softmax->add_option("--k", sm_k, "Iteration count");
  cmd_softmax->add_option("--bx", sm_bx, "Input stream length");
  cmd_softmax->add_option("--by", sm_by, "State stream length");
  cmd_softmax->add_option("--s1", sm_s1, "Sub-sample rate after sum(z)");
  cmd_softmax->add_option("--s2", sm_s2, "Sub-sample rate after y*sum(z)");
  cmd_softmax->add_option("--alpha-x", sm_ax, "Input scale (default 8/bx)");
  cmd_softmax->add_option("--alpha-y", sm_ay, "State scale (default 2/by)");
  cmd_softmax->add_option("--mode", sm_mode, "Sub-sample mode: centered|floor");
  cmd_softmax->add_option("--alpha-mode", sm_alpha_mode, "State scale mode: fixed|adaptive");
  cmd_softmax->add_flag("--no-first-iteration-special", sm_no_special,
                        "Quantize y0=1/m instead of folding it into the scale");
  cmd_softmax->add_option("--dist", sm_dist, "Vector distribution");
  cmd_softmax->add_option("--count", sm_count, "Vector count");
  cmd_softmax->add_option("--seed", sm_seed, "RNG seed");
  cmd_softmax->add_flag("--trace", sm_trace, "Write per-vector trace.json");
  cmd_softmax->add_option("--out", sm_out, "Output directory");

  // dse ---------------------------------------------------------------------
  auto* cmd_dse = app.add_subcommand("dse", "Sweep the softmax design space");
  std::string dse_grid, dse_out = ".";
  int dse_threads = 0;
  cmd_dse->add_option("--grid", dse_grid, "Grid spec JSON (default: built-in grid)");
  cmd_dse->add_option("--threads", dse_threads, "Worker count (default: SC_FORGE_THREADS or auto)");
  cmd_dse->add_option("--out", dse_out, "Output directory");

  // cost --------------------------------------------------------------------
  auto* cmd_cost = app.add_subcommand("cost", "Cost-proxy reports");
  cmd_cost->require_subcommand(1);
  auto* cost_bsn_cmd = cmd_cost->add_subcommand("bsn", "Bitonic network cost");
  std::int64_t cost_n = 0;
  std::string cost_out;
  cost_bsn_cmd->add_option("--n", cost_n, "Network width (power of two)")->required();
  cost_bsn_cmd->add_option("--out", cost_out, "Output directory");
  auto* cost_si_cmd = cmd_cost->add_subcommand("si", "Selective-interconnect cost");
  std::string cost_si_config;
  cost_si_cmd->add_option("--config", cost_si_config, "SI config JSON path")->required();
  cost_si_cmd->add_option("--out", cost_out, "Output directory");
  auto* cost_sm_cmd = cmd_cost->add_subcommand("softmax", "Softmax block cost");
  std::int64_t cm = 8, ck = 1, cbx = 4, cby = 8, cs1 = 1, cs2 = 1;
  std::string cax, cay;
  cost_sm_cmd->add_option("--m", cm, "Row-vector length");
  cost_sm_cmd->add_option("--k", ck, "Iteration count");
  cost_sm_cmd->add_option("--bx", cbx, "Input stream length");
  cost_sm_cmd->add_option("--by", cby, "State stream length");
  cost_sm_cmd->add_option("--s1", cs1, "Sub-sample rate after sum(z)");
  cost_sm_cmd->add_option("--s2", cs2, "Sub-sample rate after y*sum(z)");
  cost_sm_cmd->add_option("--alpha-x", cax, "Input scale");
  cost_sm_cmd->add_option("--alpha-y", cay, "State scale");
  cost_sm_cmd->add_option("--out", cost_out, "Output directory");

  // rerun -------------------------------------------------------------------
  auto* cmd_rerun = app.add_subcommand("rerun", "Reproduce a run from its manifest");
  std::string rerun_manifest, rerun_out = ".";
  cmd_rerun->add_option("--manifest", rerun_manifest, "manifest.json path")->required();
  cmd_rerun->add_option("--out", rerun_out, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cmd_encode->parsed()) {
      json config{{"value", enc_value}, {"bsl", enc_bsl}, {"alpha", to_string(parse_rational(enc_alpha))}};
      std::optional<fs::path> dir;
      if (!enc_out.empty()) dir = prepare_out_dir(enc_out);
      run_encode(config, dir);
    } else if (cmd_decode->parsed()) {
      json config{{"bits", dec_bits}, {"alpha", to_string(parse_rational(dec_alpha))}};
      std::optional<fs::path> dir;
      if (!dec_out.empty()) dir = prepare_out_dir(dec_out);
      run_decode(config, dir);
    } else if (cmd_gelu->parsed()) {
      if (gelu_bout == 0) gelu_bout = gelu_bin;
      const Rational alpha_in =
          gelu_ain.empty() ? Rational(8, gelu_bin) : parse_rational(gelu_ain);
      const Rational alpha_out =
          gelu_aout.empty() ? Rational(8, gelu_bout) : parse_rational(gelu_aout);
      json config{{"b_in", gelu_bin},
                  {"b_out", gelu_bout},
                  {"alpha_in", to_string(alpha_in)},
                  {"alpha_out", to_string(alpha_out)},
                  {"dist", gelu_dist},
                  {"samples", gelu_samples},
                  {"seed", gelu_seed},
                  {"baseline", gelu_baseline.empty() ? json(nullptr) : json(gelu_baseline)}};
      run_gelu(config, prepare_out_dir(gelu_out));
    } else if (cmd_softmax->parsed()) {
      SoftmaxConfig cfg;
      cfg.m = sm_m;
      cfg.k = sm_k;
      cfg.b_x = sm_bx;
      cfg.b_y = sm_by;
      cfg.s1 = sm_s1;
      cfg.s2 = sm_s2;
      cfg.alpha_x = sm_ax.empty() ? SoftmaxConfig::default_alpha_x(sm_bx)
                                  : parse_rational(sm_ax);
      cfg.alpha_y = sm_ay.empty() ? SoftmaxConfig::default_alpha_y(sm_by)
                                  : parse_rational(sm_ay);
      if (sm_mode != "centered" && sm_mode != "floor")
        throw CLI::ValidationError("--mode", "expected centered or floor");
      cfg.mode = sm_mode == "floor" ? SubsampleMode::kHardwareFloor
                                    : SubsampleMode::kCentered;
      cfg.first_iteration_special_case = !sm_no_special;
      if (sm_alpha_mode != "fixed" && sm_alpha_mode != "adaptive")
        throw CLI::ValidationError("--alpha-mode", "expected fixed or adaptive");
      cfg.alpha_mode =
          sm_alpha_mode == "adaptive" ? AlphaMode::kAdaptive : AlphaMode::kFixed;
      cfg.validate();
      json config{{"softmax", cfg.to_json()},
                  {"dist", sm_dist},
                  {"count", sm_count},
                  {"seed", sm_seed},
                  {"trace", sm_trace}};
      run_softmax(config, prepare_out_dir(sm_out));
    } else if (cmd_dse->parsed()) {
      const json grid_json = dse_grid.empty() ? default_grid().to_json()
                                              : DseGrid::from_json(load_json_file(dse_grid)).to_json();
      json config{{"grid", grid_json}};
      const int threads = dse_threads > 0 ? dse_threads : env_threads();
      run_dse(config, prepare_out_dir(dse_out), threads);
    } else if (cmd_cost->parsed()) {
      json config;
      if (cost_bsn_cmd->parsed()) {
        config = json{{"kind", "bsn"}, {"n", cost_n}};
      } else if (cost_si_cmd->parsed()) {
        config = json{{"kind", "si"},
                      {"si_config", load_json_file(cost_si_config)}};
      } else {
        SoftmaxConfig cfg;
        cfg.m = cm;
        cfg.k = ck;
        cfg.b_x = cbx;
        cfg.b_y = cby;
        cfg.s1 = cs1;
        cfg.s2 = cs2;
        cfg.alpha_x = cax.empty() ? SoftmaxConfig::default_alpha_x(cbx)
                                  : parse_rational(cax);
        cfg.alpha_y = cay.empty() ? SoftmaxConfig::default_alpha_y(cby)
                                  : parse_rational(cay);
        cfg.validate();
        config = json{{"kind", "softmax"}, {"softmax", cfg.to_json()}};
      }
      std::optional<fs::path> dir;
      if (!cost_out.empty()) dir = prepare_out_dir(cost_out);
      run_cost(config, dir);
    } else if (cmd_rerun->parsed()) {
      const json manifest = load_json_file(rerun_manifest);
      const std::string subcommand = manifest.at("subcommand").get<std::string>();
      return dispatch(subcommand, manifest.at("config"),
                      prepare_out_dir(rerun_out), env_threads());
    }
    return kExitOk;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnrealizableError& e) {
    std::cerr << "unrealizable configuration: " << e.what() << "\n";
    return kExitUnrealizable;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
