#include "scforge/si.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace scforge {

SiConfig::SiConfig(std::int64_t b_in, std::int64_t b_out, Rational alpha_in,
                   Rational alpha_out, std::vector<std::int64_t> level_table,
                   std::vector<SiOutputBit> bits)
    : b_in_(b_in),
      b_out_(b_out),
      alpha_in_(alpha_in),
      alpha_out_(alpha_out),
      level_table_(std::move(level_table)),
      bits_(std::move(bits)) {
  if (b_in_ < 1 || b_out_ < 1) throw std::invalid_argument("stream widths must be >= 1");
  if (alpha_in_ <= Rational(0) || alpha_out_ <= Rational(0))
    throw std::invalid_argument("scales must be positive");
  if (static_cast<std::int64_t>(level_table_.size()) != b_in_ + 1)
    throw std::invalid_argument("level table must have B_in + 1 entries");
  if (static_cast<std::int64_t>(bits_.size()) != b_out_)
    throw std::invalid_argument("one gate plan per output bit required");
}

SiGateSummary SiConfig::gate_summary() const {
  SiGateSummary s;
  for (const auto& bit : bits_) {
    if (bit.constant.has_value()) continue;
    for (const auto& iv : bit.intervals) {
      if (iv.fall.has_value()) {
        s.not_gates += 1;
        if (iv.rise > 0) s.and_gates += 1;
      }
    }
    s.or_gates += static_cast<std::int64_t>(bit.intervals.size()) - 1;
  }
  return s;
}

std::int64_t SiConfig::evaluate_bits(const std::vector<bool>& input_bits) const {
  if (static_cast<std::int64_t>(input_bits.size()) != b_in_)
    throw std::invalid_argument("input width mismatch");
  auto selection = [&](std::int64_t threshold) -> bool {
    if (threshold <= 0) return true;
    if (threshold > b_in_) return false;
    return input_bits[static_cast<std::size_t>(tap_index(threshold))];
  };
  std::int64_t level = 0;
  bool previous = true;
  for (const auto& bit : bits_) {
    bool value = false;
    if (bit.constant.has_value()) {
      value = *bit.constant;
    } else {
      for (const auto& iv : bit.intervals) {
        const bool rise = selection(iv.rise);
        const bool fall = iv.fall.has_value() && selection(*iv.fall);
        if (rise && !fall) {
          value = true;
          break;
        }
      }
    }
    if (value && !previous)
      throw std::logic_error("assist gates produced a non-thermometer output");
    previous = value;
    level += value ? 1 : 0;
  }
  return level;
}

nlohmann::json SiConfig::to_json() const {
  nlohmann::json bits = nlohmann::json::array();
  for (const auto& bit : bits_) {
    nlohmann::json jb;
    jb["rank"] = bit.rank;
    if (bit.constant.has_value()) {
      jb["constant"] = *bit.constant ? 1 : 0;
    } else {
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& iv : bit.intervals) {
        nlohmann::json term;
        term["rise"] = iv.rise;
        term["rise_tap"] = iv.rise > 0 ? nlohmann::json(tap_index(iv.rise))
                                       : nlohmann::json(nullptr);
        if (iv.fall.has_value()) {
          term["fall"] = *iv.fall;
          term["fall_tap"] = tap_index(*iv.fall);
        } else {
          term["fall"] = nullptr;
        }
        terms.push_back(term);
      }
      jb["terms"] = terms;
    }
    bits.push_back(jb);
  }
  const SiGateSummary g = gate_summary();
  return nlohmann::json{
      {"b_in", b_in_},
      {"b_out", b_out_},
      {"alpha_in", to_string(alpha_in_)},
      {"alpha_out", to_string(alpha_out_)},
      {"level_table", level_table_},
      {"output_bits", bits},
      {"gate_summary",
       {{"not", g.not_gates}, {"and", g.and_gates}, {"or", g.or_gates}}},
  };
}

SiConfig SiConfig::from_json(const nlohmann::json& j) {
  std::vector<SiOutputBit> bits;
  for (const auto& jb : j.at("output_bits")) {
    SiOutputBit bit;
    bit.rank = jb.at("rank").get<std::int64_t>();
    if (jb.contains("constant")) {
      bit.constant = jb.at("constant").get<int>() != 0;
    } else {
      for (const auto& term : jb.at("terms")) {
        SiInterval iv;
        iv.rise = term.at("rise").get<std::int64_t>();
        if (!term.at("fall").is_null()) iv.fall = term.at("fall").get<std::int64_t>();
        bit.intervals.push_back(iv);
      }
    }
    bits.push_back(std::move(bit));
  }
  return {j.at("b_in").get<std::int64_t>(),
          j.at("b_out").get<std::int64_t>(),
          parse_rational(j.at("alpha_in").get<std::string>()),
          parse_rational(j.at("alpha_out").get<std::string>()),
          j.at("level_table").get<std::vector<std::int64_t>>(),
          std::move(bits)};
}

std::vector<std::int64_t> target_profile(const std::function<double(double)>& f,
                                         std::int64_t b_in, std::int64_t b_out,
                                         const Rational& alpha_in,
                                         const Rational& alpha_out) {
  if (b_in < 1 || b_out < 1) throw std::invalid_argument("stream widths must be >= 1");
  std::vector<std::int64_t> table(static_cast<std::size_t>(b_in) + 1);
  const double ain = to_double(alpha_in);
  const double aout = to_double(alpha_out);
  for (std::int64_t n = 0; n <= b_in; ++n) {
    const double x = ain * (static_cast<double>(n) - static_cast<double>(b_in) / 2.0);
    const double shifted = f(x) / aout + static_cast<double>(b_out) / 2.0;
    auto level = static_cast<std::int64_t>(std::llround(shifted));
    table[static_cast<std::size_t>(n)] = std::clamp<std::int64_t>(level, 0, b_out);
  }
  return table;
}

SiConfig synthesize(const std::function<double(double)>& f, std::int64_t b_in,
                    std::int64_t b_out, const Rational& alpha_in,
                    const Rational& alpha_out) {
  if (b_out > b_in)
    throw std::invalid_argument(
        "B_out > B_in: no injective tap assignment is guaranteed");
  auto table = target_profile(f, b_in, b_out, alpha_in, alpha_out);

  std::vector<SiOutputBit> bits;
  bits.reserve(static_cast<std::size_t>(b_out));
  for (std::int64_t rank = 1; rank <= b_out; ++rank) {
    SiOutputBit bit;
    bit.rank = rank;
    // Maximal runs of ones in the profile [table[n] >= rank].
    std::int64_t n = 0;
    while (n <= b_in) {
      if (table[static_cast<std::size_t>(n)] >= rank) {
        SiInterval iv;
        iv.rise = n;
        while (n <= b_in && table[static_cast<std::size_t>(n)] >= rank) ++n;
        if (n <= b_in) iv.fall = n;  // run ended before the top: needs a fall
        bit.intervals.push_back(iv);
      } else {
        ++n;
      }
    }
    if (bit.intervals.empty()) {
      bit.constant = false;
    } else if (bit.intervals.size() == 1 && bit.intervals[0].rise == 0 &&
               !bit.intervals[0].fall.has_value()) {
      bit.constant = true;
      bit.intervals.clear();
    }
    bits.push_back(std::move(bit));
  }
  return {b_in, b_out, alpha_in, alpha_out, std::move(table), std::move(bits)};
}

ThermometerStream si_apply(const SiConfig& cfg, const ThermometerStream& x) {
  if (x.length() != cfg.b_in())
    throw std::invalid_argument("input width does not match the block");
  if (x.alpha() != cfg.alpha_in())
    throw std::invalid_argument("input scale does not match the block");
  const std::int64_t level =
      cfg.level_table()[static_cast<std::size_t>(x.ones())];
  return {cfg.b_out(), level, cfg.alpha_out()};
}

}  // namespace scforge
