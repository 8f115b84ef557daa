#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <stdexcept>

#include "adcgap/metrics.hpp"
#include "adcgap/report.hpp"

namespace adcgap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_frequency(std::string_view key) {
  return key == "bandwidth_hz" || key == "fs_hz" || key == "nyquist_hz";
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Axis {
  Scale scale = Scale::log10;
  double low = 0.0;   // data units
  double high = 1.0;
  double pixel_low = 0.0;
  double pixel_high = 1.0;

  double t(double v) const { return scale == Scale::log10 ? std::log10(v) : v; }
  double to_pixel(double v) const {
    const double frac = (t(v) - t(low)) / (t(high) - t(low));
    return pixel_low + frac * (pixel_high - pixel_low);
  }
  double clamp(double v) const { return std::clamp(v, low, high); }
};

/// Data range padded to whole decades (log) or a 5% margin (linear).
std::pair<double, double> axis_range(const std::vector<double>& values, Scale scale) {
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  double lo = *lo_it, hi = *hi_it;
  if (scale == Scale::log10) {
    lo = std::pow(10.0, std::floor(std::log10(lo)));
    hi = std::pow(10.0, std::ceil(std::log10(hi)));
    if (lo == hi) {
      lo /= 10.0;
      hi *= 10.0;
    }
    return {lo, hi};
  }
  if (lo == hi) {
    const double d = lo == 0.0 ? 1.0 : std::abs(lo) * 0.1;
    return {lo - d, hi + d};
  }
  const double padding = 0.05 * (hi - lo);
  return {lo - padding, hi + padding};
}

std::vector<double> ticks(const Axis& axis) {
  std::vector<double> out;
  if (axis.scale == Scale::log10) {
    const int first = static_cast<int>(std::lround(std::log10(axis.low)));
    const int last = static_cast<int>(std::lround(std::log10(axis.high)));
    const int step = std::max(1, (last - first + 7) / 8);
    for (int e = first; e <= last; e += step) out.push_back(std::pow(10.0, e));
    return out;
  }
  const double span = axis.high - axis.low;
  const double raw = span / 6.0;
  const double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
  double step = magnitude;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    step = m * magnitude;
    if (step >= raw) break;
  }
  for (double v = std::ceil(axis.low / step) * step; v <= axis.high + 1e-9 * span; v += step)
    out.push_back(std::abs(v) < 1e-12 * span ? 0.0 : v);
  return out;
}

std::string tick_label(double value, std::string_view key) {
  if (key == "year") return format_sig(value, 6);
  return format_sig(value * display_unit(key).scale, 3);
}

std::string axis_title(std::string_view key) {
  const DisplayUnit unit = display_unit(key);
  std::string title(key);
  if (!unit.label.empty()) title += " [" + std::string(unit.label) + "]";
  return title;
}

/// Abscissa samples: every decade and eight steps between (log) or 64 steps (linear).
std::vector<double> sample_x(double low, double high, Scale scale) {
  std::vector<double> xs;
  if (scale == Scale::log10) {
    const double a = std::log10(low), b = std::log10(high);
    const int first = static_cast<int>(std::floor(a)), last = static_cast<int>(std::ceil(b));
    for (int e = first; e <= last; ++e)
      for (int k = 0; k < 8; ++k) {
        const double x = std::pow(10.0, e + k / 8.0);
        if (x >= low * (1 - 1e-12) && x <= high * (1 + 1e-12)) xs.push_back(x);
      }
  } else {
    for (int k = 0; k <= 64; ++k) xs.push_back(low + (high - low) * k / 64.0);
  }
  return xs;
}

/// Through-centroid anchoring for reference tendencies of fixed slope.
double centroid_offset(const SeriesFile& series, double slope, bool log_x, double base) {
  double sum = 0.0;
  int n = 0;
  for (const auto& r : series.rows) {
    if (!(r.y > 0.0) || (log_x && !(r.x > 0.0))) continue;
    const double x = log_x ? std::log10(r.x) : r.x;
    const double y = std::log(r.y) / std::log(base);
    sum += y - slope * x;
    ++n;
  }
  return n ? sum / n : 0.0;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf"};

}  // namespace

std::optional<DataBox> requirement_region(const RequirementSpec& spec, std::string_view x_key,
                                          std::string_view y_key, double osr) {
  auto span_for = [&](std::string_view key) -> std::optional<std::pair<double, double>> {
    if (key == "bandwidth_hz") return std::pair{spec.min_bandwidth, kInf};
    if (key == "nyquist_hz") return std::pair{spec.min_nyquist, kInf};
    if (key == "fs_hz") return std::pair{spec.min_nyquist * osr, kInf};
    if (key == "enob") return std::pair{spec.min_enob, kInf};
    if (key == "area_mm2") return std::pair{0.0, spec.max_area};
    if (key == "ebit") return std::pair{0.0, spec.max_energy_per_bit};
    return std::nullopt;
  };
  const auto xs = span_for(x_key);
  const auto ys = span_for(y_key);
  if (!xs && !ys) return std::nullopt;
  const auto x = xs.value_or(std::pair{-kInf, kInf});
  const auto y = ys.value_or(std::pair{-kInf, kInf});
  return DataBox{x.first, x.second, y.first, y.second};
}

std::vector<std::pair<double, double>> overlay_curve(const Overlay& overlay, const PlotSpec& spec,
                                                     double x_low, double x_high,
                                                     const SeriesFile& series) {
  std::vector<std::pair<double, double>> out;
  const auto xs = sample_x(x_low, x_high, spec.x_scale);

  if (const auto* jitter = std::get_if<JitterBound>(&overlay)) {
    if (!is_frequency(spec.x_key) || (spec.y_key != "enob" && spec.y_key != "sndr_db")) return out;
    // The bound is evaluated at the signal bandwidth implied by the abscissa.
    const double to_bandwidth = spec.x_key == "bandwidth_hz" ? 1.0
                                : spec.x_key == "nyquist_hz" ? 0.5
                                                             : 0.5 / spec.osr;
    for (double x : xs) {
      if (!(x > 0.0)) continue;
      const double f = x * to_bandwidth;
      const double y = spec.y_key == "enob" ? jitter_enob_limit(f, jitter->sigma)
                                            : jitter_snr_limit(f, jitter->sigma);
      out.emplace_back(x, y);
    }
    return out;
  }

  if (const auto* ref = std::get_if<ReferenceOverlay>(&overlay)) {
    const ReferenceTrend& trend = reference_trend(ref->name);
    if (trend.axis == FitAxis::year && spec.x_key == "year") {
      const double slope = 1.0 / trend.value;
      const double offset = centroid_offset(series, slope, false, 2.0);
      for (double x : xs) out.emplace_back(x, std::exp2(offset + slope * x));
    } else if (trend.axis == FitAxis::tech_node && spec.x_key == "tech_nm") {
      const double offset = centroid_offset(series, trend.value, true, 10.0);
      for (double x : xs)
        if (x > 0.0) out.emplace_back(x, std::pow(10.0, offset) * std::pow(x, trend.value));
    }
    return out;
  }

  if (const auto* fitted = std::get_if<FittedOverlay>(&overlay)) {
    if (const auto* t = std::get_if<TrendFit>(&fitted->fit)) {
      if (spec.x_key == "year")
        for (double x : xs) out.emplace_back(x, extrapolate(*t, x));
    } else if (spec.x_key == "tech_nm") {
      const auto& p = std::get<PowerLawFit>(fitted->fit);
      for (double x : xs)
        if (x > 0.0) out.emplace_back(x, p.evaluate(x));
    }
  }
  return out;
}

std::string emit_scatter_svg(const SeriesFile& series, const PlotSpec& spec, const Geometry& g) {
  if (series.rows.empty()) throw std::invalid_argument("cannot plot an empty series");

  std::string offending;
  for (const auto& r : series.rows) {
    const bool bad = (spec.x_scale == Scale::log10 && !(r.x > 0.0)) ||
                     (spec.y_scale == Scale::log10 && !(r.y > 0.0));
    if (bad) offending += (offending.empty() ? "" : ", ") + r.id;
  }
  if (!offending.empty())
    throw std::invalid_argument("non-positive values on a log axis: " + offending);

  std::vector<double> xv, yv;
  for (const auto& r : series.rows) {
    xv.push_back(r.x);
    yv.push_back(r.y);
  }
  const auto [x_low, x_high] = axis_range(xv, spec.x_scale);
  const auto [y_low, y_high] = axis_range(yv, spec.y_scale);
  const double left = g.margin_left, right = g.width - g.margin_right;
  const double top = g.margin_top, bottom = g.height - g.margin_bottom;
  const Axis x{spec.x_scale, x_low, x_high, left, right};
  const Axis y{spec.y_scale, y_low, y_high, bottom, top};

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(g.width) +
       "\" height=\"" + fmt(g.height) + "\" viewBox=\"0 0 " + fmt(g.width) + " " + fmt(g.height) + "\">\n";
  s += "<desc>x: " + escape(spec.x_key) + " " + std::string(to_string(spec.x_scale)) + " [" +
       format_sig(x_low, 6) + ", " + format_sig(x_high, 6) + "] -> px [" + fmt(left) + ", " + fmt(right) +
       "]; y: " + escape(spec.y_key) + " " + std::string(to_string(spec.y_scale)) + " [" +
       format_sig(y_low, 6) + ", " + format_sig(y_high, 6) + "] -> px [" + fmt(bottom) + ", " + fmt(top) +
       "]; " + escape(series.provenance) + "</desc>\n";
  s += "<defs><clipPath id=\"plot-area\"><rect x=\"" + fmt(left) + "\" y=\"" + fmt(top) + "\" width=\"" +
       fmt(right - left) + "\" height=\"" + fmt(bottom - top) + "\"/></clipPath></defs>\n";
  s += "<rect x=\"0\" y=\"0\" width=\"" + fmt(g.width) + "\" height=\"" + fmt(g.height) +
       "\" fill=\"white\"/>\n";
  if (!spec.title.empty())
    s += "<text x=\"" + fmt(g.width / 2) + "\" y=\"" + fmt(top / 2 + 6) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">" + escape(spec.title) +
         "</text>\n";

  // Grid and ticks.
  s += "<g font-family=\"sans-serif\" font-size=\"11\" stroke-width=\"1\">\n";
  for (double v : ticks(x)) {
    const std::string px = fmt(x.to_pixel(v));
    s += "<line x1=\"" + px + "\" y1=\"" + fmt(top) + "\" x2=\"" + px + "\" y2=\"" + fmt(bottom) +
         "\" stroke=\"#e0e0e0\"/>\n";
    s += "<text x=\"" + px + "\" y=\"" + fmt(bottom + 16) + "\" text-anchor=\"middle\">" +
         escape(tick_label(v, spec.x_key)) + "</text>\n";
  }
  for (double v : ticks(y)) {
    const std::string py = fmt(y.to_pixel(v));
    s += "<line x1=\"" + fmt(left) + "\" y1=\"" + py + "\" x2=\"" + fmt(right) + "\" y2=\"" + py +
         "\" stroke=\"#e0e0e0\"/>\n";
    s += "<text x=\"" + fmt(left - 6) + "\" y=\"" + fmt(y.to_pixel(v) + 4) + "\" text-anchor=\"end\">" +
         escape(tick_label(v, spec.y_key)) + "</text>\n";
  }
  s += "<rect x=\"" + fmt(left) + "\" y=\"" + fmt(top) + "\" width=\"" + fmt(right - left) +
       "\" height=\"" + fmt(bottom - top) + "\" fill=\"none\" stroke=\"black\"/>\n";
  s += "<text x=\"" + fmt((left + right) / 2) + "\" y=\"" + fmt(g.height - 16) +
       "\" text-anchor=\"middle\" font-size=\"13\">" + escape(axis_title(spec.x_key)) + "</text>\n";
  s += "<text transform=\"translate(18 " + fmt((top + bottom) / 2) +
       ") rotate(-90)\" text-anchor=\"middle\" font-size=\"13\">" + escape(axis_title(spec.y_key)) +
       "</text>\n";
  s += "</g>\n";

  // Overlays.
  s += "<g clip-path=\"url(#plot-area)\" fill=\"none\" stroke-width=\"1.5\">\n";
  for (const Overlay& overlay : spec.overlays) {
    if (const auto* box = std::get_if<RequirementBox>(&overlay)) {
      const auto region = requirement_region(box->spec, spec.x_key, spec.y_key, spec.osr);
      if (!region) continue;
      const double x0 = x.to_pixel(x.clamp(std::max(region->x_low, x_low)));
      const double x1 = x.to_pixel(x.clamp(std::min(region->x_high, x_high)));
      const double y0 = y.to_pixel(y.clamp(std::max(region->y_low, y_low)));
      const double y1 = y.to_pixel(y.clamp(std::min(region->y_high, y_high)));
      s += "<rect class=\"requirement\" x=\"" + fmt(std::min(x0, x1)) + "\" y=\"" + fmt(std::min(y0, y1)) +
           "\" width=\"" + fmt(std::abs(x1 - x0)) + "\" height=\"" + fmt(std::abs(y1 - y0)) +
           "\" stroke=\"#444444\" stroke-dasharray=\"2 3\"><title>" + escape(box->spec.name) +
           "</title></rect>\n";
      continue;
    }
    const auto curve = overlay_curve(overlay, spec, x_low, x_high, series);
    std::string points;
    for (const auto& [cx, cy] : curve) {
      if (spec.y_scale == Scale::log10 && !(cy > 0.0)) continue;
      if (!std::isfinite(cy)) continue;
      // Keep far-off-scale points bounded; the clip path trims the rest.
      const double py = std::clamp(y.to_pixel(cy), -10.0 * g.height, 11.0 * g.height);
      points += (points.empty() ? "" : " ") + fmt(x.to_pixel(cx)) + "," + fmt(py);
    }
    if (points.empty()) continue;
    std::string cls, stroke, dash, label;
    if (const auto* j = std::get_if<JitterBound>(&overlay)) {
      cls = "jitter";
      stroke = "#555555";
      label = "jitter " + format_sig(j->sigma * 1e12) + " ps";
    } else if (const auto* r = std::get_if<ReferenceOverlay>(&overlay)) {
      cls = "reference";
      stroke = "#888888";
      dash = "8 4";
      label = r->name;
    } else {
      cls = "fitted";
      stroke = "#000000";
      dash = "4 3";
      label = std::get<FittedOverlay>(overlay).label;
    }
    s += "<polyline class=\"" + cls + "\" points=\"" + points + "\" stroke=\"" + stroke + "\"";
    if (!dash.empty()) s += " stroke-dasharray=\"" + dash + "\"";
    s += "><title>" + escape(label) + "</title></polyline>\n";
  }
  s += "</g>\n";

  // Markers, one colour per label.
  std::map<std::string, std::size_t> colour;
  for (const auto& r : series.rows) colour.emplace(r.label, 0);
  std::size_t next = 0;
  for (auto& [label, index] : colour) index = next++ % std::size(kPalette);
  s += "<g stroke=\"none\">\n";
  for (const auto& r : series.rows) {
    s += "<circle cx=\"" + fmt(x.to_pixel(r.x)) + "\" cy=\"" + fmt(y.to_pixel(r.y)) + "\" r=\"3.5\" fill=\"" +
         kPalette[colour[r.label]] + "\" fill-opacity=\"0.8\"><title>" + escape(r.id) + " (" +
         std::to_string(r.year) + ")</title></circle>\n";
  }
  s += "</g>\n";

  if (colour.size() > 1) {
    s += "<g font-family=\"sans-serif\" font-size=\"11\">\n";
    double ly = top + 14;
    for (const auto& [label, index] : colour) {
      s += "<circle cx=\"" + fmt(right - 150) + "\" cy=\"" + fmt(ly - 4) + "\" r=\"3.5\" fill=\"" +
           kPalette[index] + "\"/>\n";
      s += "<text x=\"" + fmt(right - 140) + "\" y=\"" + fmt(ly) + "\">" + escape(label) + "</text>\n";
      ly += 15;
    }
    s += "</g>\n";
  }
  s += "</svg>\n";
  return s;
}

}  // namespace adcgap
