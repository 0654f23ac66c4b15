#include "scforge/eval.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "scforge/digest.hpp"
#include "scforge/math.hpp"
#include "scforge/rng.hpp"

namespace scforge {

Distribution Distribution::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ':')) parts.push_back(token);
  if (parts.empty()) throw std::invalid_argument("empty distribution spec");

  Distribution d;
  if (parts[0] == "uniform") {
    if (parts.size() != 3)
      throw std::invalid_argument("expected uniform:LO:HI");
    d.kind = Kind::kUniform;
    d.lo = std::stod(parts[1]);
    d.hi = std::stod(parts[2]);
    if (!(d.hi > d.lo)) throw std::invalid_argument("empty uniform interval");
  } else if (parts[0] == "gaussian") {
    if (parts.size() != 4)
      throw std::invalid_argument("expected gaussian:MU:SIGMA:CLIP");
    d.kind = Kind::kGaussian;
    d.mu = std::stod(parts[1]);
    d.sigma = std::stod(parts[2]);
    d.clip = std::stod(parts[3]);
    if (d.sigma <= 0 || d.clip <= 0)
      throw std::invalid_argument("gaussian needs sigma > 0 and clip > 0");
  } else if (parts[0] == "file") {
    if (parts.size() < 2) throw std::invalid_argument("expected file:PATH");
    d.kind = Kind::kFile;
    // Paths may themselves contain ':'.
    d.path = text.substr(5);
  } else {
    throw std::invalid_argument("unknown distribution: " + parts[0]);
  }
  return d;
}

std::string Distribution::to_string() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::kUniform:
      out << "uniform:" << lo << ":" << hi;
      break;
    case Kind::kGaussian:
      out << "gaussian:" << mu << ":" << sigma << ":" << clip;
      break;
    case Kind::kFile:
      out << "file:" << path;
      break;
  }
  return out.str();
}

namespace {

std::vector<std::vector<double>> read_csv_vectors(const std::string& path,
                                                  std::int64_t m) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open vector file: " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  std::int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw std::runtime_error("malformed number in " + path + " line " +
                                 std::to_string(line_no));
      }
    }
    if (static_cast<std::int64_t>(row.size()) != m)
      throw std::runtime_error("row of length " + std::to_string(row.size()) +
                               " in " + path + " line " + std::to_string(line_no) +
                               "; expected " + std::to_string(m));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::runtime_error("no vectors in " + path);
  return rows;
}

}  // namespace

std::vector<std::vector<double>> gen_vectors(const Distribution& dist,
                                             std::int64_t m, std::int64_t count,
                                             std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("vector length must be >= 1");
  if (dist.kind == Distribution::Kind::kFile) return read_csv_vectors(dist.path, m);
  if (count < 1) throw std::invalid_argument("vector count must be >= 1");

  Rng rng(seed);
  std::vector<std::vector<double>> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t v = 0; v < count; ++v) {
    std::vector<double> row(static_cast<std::size_t>(m));
    for (auto& value : row) {
      if (dist.kind == Distribution::Kind::kUniform) {
        value = rng.uniform(dist.lo, dist.hi);
      } else {
        value = std::clamp(dist.mu + dist.sigma * rng.gaussian(), -dist.clip,
                           dist.clip);
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

nlohmann::json EvalReport::to_json() const {
  return nlohmann::json{
      {"block", block_id}, {"config_digest", config_digest},
      {"samples", samples}, {"mae", mae},
      {"max_abs_error", max_abs_error}, {"distribution", distribution},
      {"seed", seed},
  };
}

EvalReport mae_gelu(const std::function<double(double, std::int64_t)>& block,
                    const std::string& block_id, const std::string& config_digest,
                    std::span<const double> samples, const Distribution& dist,
                    std::uint64_t seed) {
  if (samples.empty()) throw std::invalid_argument("need at least one sample");
  double sum = 0.0;
  double max_err = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double err =
        std::fabs(block(samples[i], static_cast<std::int64_t>(i)) - gelu(samples[i]));
    sum += err;
    max_err = std::max(max_err, err);
  }
  EvalReport report;
  report.block_id = block_id;
  report.config_digest = config_digest;
  report.samples = static_cast<std::int64_t>(samples.size());
  report.mae = sum / static_cast<double>(samples.size());
  report.max_abs_error = max_err;
  report.distribution = dist.to_string();
  report.seed = seed;
  return report;
}

EvalReport mae_softmax(const SoftmaxConfig& cfg,
                       std::span<const std::vector<double>> vectors,
                       const Distribution& dist, std::uint64_t seed) {
  if (vectors.empty()) throw std::invalid_argument("need at least one vector");
  double sum = 0.0;
  double max_err = 0.0;
  std::int64_t elements = 0;
  for (const auto& x : vectors) {
    const auto streams = encode_softmax_input(x, cfg);
    const auto sc = sc_softmax(streams, cfg);
    const auto reference = exact_softmax(x);
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double err = std::fabs(decode(sc[i]) - reference[i]);
      sum += err;
      max_err = std::max(max_err, err);
      ++elements;
    }
  }
  EvalReport report;
  report.block_id = "sc-softmax";
  report.config_digest = digest_hex(cfg.to_json().dump());
  report.samples = elements;
  report.mae = sum / static_cast<double>(elements);
  report.max_abs_error = max_err;
  report.distribution = dist.to_string();
  report.seed = seed;
  return report;
}

}  // namespace scforge
