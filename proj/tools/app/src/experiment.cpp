// SPDX-License-Identifier: Apache-2.0
//
// ristile: analysis toolkit for two-tile RIS-assisted 2x2 MIMO links
// Copyright (C) 2026 The ristile authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "ristile_app/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "ristile/analytic.hpp"

namespace ristile::app {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty()) throw std::invalid_argument("config: '" + key + "' expects a number, got '" + v + "'");
  return out;
}

std::uint64_t to_u64(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  unsigned long long out = 0;
  try {
    if (!v.empty() && v[0] != '-') out = std::stoull(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty())
    throw std::invalid_argument("config: '" + key + "' expects a non-negative integer, got '" + v + "'");
  return out;
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw std::invalid_argument("config: '" + key + "' expects true/false, got '" + v + "'");
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string o;
  for (char ch : s) {
    switch (ch) {
      case '<': o += "&lt;"; break;
      case '>': o += "&gt;"; break;
      case '&': o += "&amp;"; break;
      default: o += ch;
    }
  }
  return o;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (!std::isfinite(snr_db_min) || !std::isfinite(snr_db_max) || !(snr_db_min <= snr_db_max))
    throw std::invalid_argument("snr_db_min must be <= snr_db_max");
  if (!(snr_db_step > 0.0) || !std::isfinite(snr_db_step)) throw std::invalid_argument("snr_db_step must be > 0");
  if (!std::isfinite(threshold_db)) throw std::invalid_argument("threshold_db must be finite");
  if (trials < 100) throw std::invalid_argument("trials must be >= 100");
  if (schemes.empty()) throw std::invalid_argument("scheme list is empty");
}

std::vector<double> ExperimentConfig::grid() const {
  const auto n = static_cast<long>(std::floor((snr_db_max - snr_db_min) / snr_db_step + 1e-9)) + 1;
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(n));
  for (long k = 0; k < n; ++k) g.push_back(snr_db_min + static_cast<double>(k) * snr_db_step);
  return g;
}

void ConfigOverrides::apply(ExperimentConfig& c) const {
  if (snr_db_min) c.snr_db_min = *snr_db_min;
  if (snr_db_max) c.snr_db_max = *snr_db_max;
  if (snr_db_step) c.snr_db_step = *snr_db_step;
  if (threshold_db) c.threshold_db = *threshold_db;
  if (trials) c.trials = *trials;
  if (seed) c.seed = *seed;
  if (schemes) c.schemes = parse_scheme_list(*schemes);
  if (output_path) c.output_path = *output_path;
  if (emit_svg) c.emit_svg = *emit_svg;
  if (workers) c.workers = *workers;
  if (alt_random_start) c.alt_random_start = *alt_random_start;
}

ConfigOverrides parse_config(std::istream& in) {
  ConfigOverrides o;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key == "snr_db_min") o.snr_db_min = to_double(key, val);
    else if (key == "snr_db_max") o.snr_db_max = to_double(key, val);
    else if (key == "snr_db_step") o.snr_db_step = to_double(key, val);
    else if (key == "threshold_db") o.threshold_db = to_double(key, val);
    else if (key == "trials") o.trials = to_u64(key, val);
    else if (key == "seed") o.seed = to_u64(key, val);
    else if (key == "schemes") o.schemes = val;
    else if (key == "out") o.output_path = val;
    else if (key == "svg") o.emit_svg = to_bool(key, val);
    else if (key == "workers") o.workers = static_cast<unsigned>(to_u64(key, val));
    else if (key == "alt_random_start") o.alt_random_start = to_bool(key, val);
    else throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  return o;
}

ConfigOverrides load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  return parse_config(in);
}

std::vector<Scheme> parse_scheme_list(const std::string& csv) {
  std::vector<Scheme> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(Scheme::parse(item));
  }
  return out;
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& c, Metric metric) {
  c.validate();
  McOptions mo;
  mo.workers = c.workers;
  mo.alt_random_start = c.alt_random_start;
  const GainTable table = sample_gains(c.schemes, c.trials, c.seed, mo);
  const double gamma_th = std::pow(10.0, c.threshold_db / 10.0);
  std::vector<ResultRow> rows;
  for (double d : c.grid()) {
    const double gb = std::pow(10.0, d / 10.0);
    for (std::size_t s = 0; s < c.schemes.size(); ++s) {
      const Scheme& sc = c.schemes[s];
      ResultRow r;
      r.snr_db = d;
      r.scheme = sc.name();
      McEstimate e;
      if (metric == Metric::outage) {
        e = outage_from_gains(table.column(s), gb, gamma_th);
        if (!sc.is_alt()) r.analytic = outage_closed_form({sc.mode(), gamma_th / gb});
      } else {
        e = throughput_from_gains(table.column(s), gb);
        if (!sc.is_alt()) r.analytic = throughput(sc.mode(), gb);
      }
      r.mc = e.value;
      r.ci95 = e.ci_half_width;
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

void write_csv(const std::vector<ResultRow>& rows, std::ostream& os) {
  os << kCsvHeader << '\n';
  for (const ResultRow& r : rows) {
    os << fmt(r.snr_db) << ',' << r.scheme << ',' << (r.analytic ? fmt(*r.analytic) : std::string()) << ','
       << fmt(r.mc) << ',' << fmt(r.ci95) << '\n';
  }
}

std::string svg_path_for(const std::string& csv_path) {
  const auto slash = csv_path.find_last_of('/');
  const auto dot = csv_path.find_last_of('.');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) return csv_path.substr(0, dot) + ".svg";
  return csv_path + ".svg";
}

void write_svg(const std::vector<ResultRow>& rows, Metric metric, std::ostream& os) {
  constexpr double W = 760, H = 480, L = 70, R = 170, T = 30, B = 50;
  const bool log_y = metric == Metric::outage;

  std::vector<std::string> names;
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  auto usable = [&](double v) { return std::isfinite(v) && (!log_y || v > 0.0); };
  for (const ResultRow& r : rows) {
    if (std::find(names.begin(), names.end(), r.scheme) == names.end()) names.push_back(r.scheme);
    xmin = std::min(xmin, r.snr_db);
    xmax = std::max(xmax, r.snr_db);
    for (double v : {r.mc, r.analytic.value_or(r.mc)})
      if (usable(v)) {
        ymin = std::min(ymin, v);
        ymax = std::max(ymax, v);
      }
  }
  if (!std::isfinite(xmin)) xmin = 0, xmax = 1;
  if (xmax == xmin) xmax = xmin + 1;
  if (log_y) {
    ymin = std::isfinite(ymin) ? std::pow(10.0, std::floor(std::log10(ymin))) : 1e-6;
    ymax = 1.0;
    if (ymin >= ymax) ymin = ymax / 10;
  } else {
    ymin = 0.0;
    ymax = std::isfinite(ymax) && ymax > 0 ? std::ceil(ymax) : 1.0;
  }
  auto px = [&](double x) { return L + (x - xmin) / (xmax - xmin) * (W - L - R); };
  auto py = [&](double y) {
    const double f = log_y ? (std::log10(y) - std::log10(ymin)) / (std::log10(ymax) - std::log10(ymin))
                           : (y - ymin) / (ymax - ymin);
    return H - B - f * (H - T - B);
  };
  static const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                 "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

  char buf[256];
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"%g\" height=\"%g\" "
                "font-family=\"sans-serif\" font-size=\"12\">\n",
                W, H);
  os << buf << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  std::snprintf(buf, sizeof buf, "<rect x=\"%g\" y=\"%g\" width=\"%g\" height=\"%g\" fill=\"none\" stroke=\"black\"/>\n",
                L, T, W - L - R, H - T - B);
  os << buf;

  // x ticks every 5 dB (or at the ends for narrow ranges)
  const double xstep = (xmax - xmin) >= 10 ? 5.0 : (xmax - xmin);
  for (double x = std::ceil(xmin / xstep) * xstep; x <= xmax + 1e-9; x += xstep) {
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.2f\" y1=\"%g\" x2=\"%.2f\" y2=\"%g\" stroke=\"#ddd\"/>"
                  "<text x=\"%.2f\" y=\"%g\" text-anchor=\"middle\">%g</text>\n",
                  px(x), T, px(x), H - B, px(x), H - B + 16, x);
    os << buf;
  }
  if (log_y) {
    for (double e = std::log10(ymin); e <= 1e-9; e += 1.0) {
      const double y = std::pow(10.0, e);
      std::snprintf(buf, sizeof buf,
                    "<line x1=\"%g\" y1=\"%.2f\" x2=\"%g\" y2=\"%.2f\" stroke=\"#ddd\"/>"
                    "<text x=\"%g\" y=\"%.2f\" text-anchor=\"end\">1e%d</text>\n",
                    L, py(y), W - R, py(y), L - 6, py(y) + 4, static_cast<int>(std::lround(e)));
      os << buf;
    }
  } else {
    for (int k = 0; k <= 5; ++k) {
      const double y = ymin + (ymax - ymin) * k / 5.0;
      std::snprintf(buf, sizeof buf,
                    "<line x1=\"%g\" y1=\"%.2f\" x2=\"%g\" y2=\"%.2f\" stroke=\"#ddd\"/>"
                    "<text x=\"%g\" y=\"%.2f\" text-anchor=\"end\">%g</text>\n",
                    L, py(y), W - R, py(y), L - 6, py(y) + 4, y);
      os << buf;
    }
  }
  std::snprintf(buf, sizeof buf, "<text x=\"%g\" y=\"%g\" text-anchor=\"middle\">average SNR [dB]</text>\n",
                (L + W - R) / 2, H - 12);
  os << buf;
  std::snprintf(buf, sizeof buf,
                "<text x=\"16\" y=\"%g\" text-anchor=\"middle\" transform=\"rotate(-90 16 %g)\">%s</text>\n",
                (T + H - B) / 2, (T + H - B) / 2, log_y ? "outage probability" : "throughput [nats/s/Hz]");
  os << buf;

  for (std::size_t k = 0; k < names.size(); ++k) {
    const char* color = colors[k % 10];
    std::string mc_pts, an_pts;
    for (const ResultRow& r : rows) {
      if (r.scheme != names[k]) continue;
      if (usable(r.mc)) {
        std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px(r.snr_db), py(r.mc));
        mc_pts += buf;
      }
      if (r.analytic && usable(*r.analytic)) {
        std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px(r.snr_db), py(*r.analytic));
        an_pts += buf;
      }
    }
    if (!an_pts.empty())
      os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-dasharray=\"6,3\" points=\"" << an_pts << "\"/>\n";
    if (!mc_pts.empty())
      os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"" << mc_pts << "\"/>\n";
    const double ly = T + 14 + 18.0 * static_cast<double>(k);
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" stroke=\"%s\" stroke-width=\"2\"/>"
                  "<text x=\"%g\" y=\"%g\">",
                  W - R + 12, ly, W - R + 36, ly, color, W - R + 42, ly + 4);
    os << buf << xml_escape(names[k]) << "</text>\n";
  }
  std::snprintf(buf, sizeof buf, "<text x=\"%g\" y=\"%g\" fill=\"#555\">solid: MC, dashed: analytic</text>\n", W - R + 12,
                T + 14 + 18.0 * static_cast<double>(names.size()) + 6);
  os << buf << "</svg>\n";
}

}  // namespace ristile::app
