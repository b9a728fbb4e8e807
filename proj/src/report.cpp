#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qwalk/experiment.hpp"

namespace qwalk {

namespace {

std::string fmt(const char* pattern, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, value);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << content;
  out.close();
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

std::string xml_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
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

}  // namespace

std::string format_csv(const FidelitySeries& series) {
  if (series.has_noise() && series.noisy.size() != series.noiseless.size()) {
    throw std::invalid_argument("noisy and noiseless series differ in length");
  }
  std::string out = "t,fidelity_noiseless,fidelity_noisy\n";
  for (std::size_t t = 0; t < series.size(); ++t) {
    out += std::to_string(t);
    out += ',';
    out += fmt("%.12g", series.noiseless[t]);
    out += ',';
    if (series.has_noise()) out += fmt("%.12g", series.noisy[t]);
    out += '\n';
  }
  return out;
}

void write_csv(const FidelitySeries& series, const std::filesystem::path& path) {
  write_file(path, format_csv(series));
}

FidelitySeries parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "t,fidelity_noiseless,fidelity_noisy") {
    throw std::invalid_argument("missing fidelity CSV header");
  }
  FidelitySeries series;
  std::size_t expected_t = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) throw std::invalid_argument("malformed CSV row: " + line);
    if (std::stoul(line.substr(0, c1)) != expected_t++) throw std::invalid_argument("CSV rows out of order");
    series.noiseless.push_back(std::stod(line.substr(c1 + 1, c2 - c1 - 1)));
    const std::string noisy = line.substr(c2 + 1);
    if (!noisy.empty()) series.noisy.push_back(std::stod(noisy));
  }
  if (series.has_noise() && series.noisy.size() != series.noiseless.size()) {
    throw std::invalid_argument("noisy column is only partially filled");
  }
  return series;
}

std::string format_svg(const FidelitySeries& series, const std::string& title) {
  if (series.size() == 0) throw std::invalid_argument("cannot plot an empty series");

  constexpr double width = 720, height = 440;
  constexpr double left = 70, right = 170, top = 50, bottom = 60;
  constexpr double plot_w = width - left - right;
  constexpr double plot_h = height - top - bottom;

  const std::size_t last = series.size() - 1;
  const double x_span = last == 0 ? 1.0 : static_cast<double>(last);
  auto x_of = [&](std::size_t t) { return left + plot_w * static_cast<double>(t) / x_span; };
  auto y_of = [&](double f) { return top + plot_h * (1.0 - f); };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n"
      << "<text x=\"" << left + plot_w / 2 << "\" y=\"28\" text-anchor=\"middle\" font-size=\"15\">"
      << xml_escape(title) << "</text>\n";

  // Axes and grid.
  svg << "<g stroke=\"#cccccc\" stroke-width=\"0.5\">\n";
  for (int i = 0; i <= 4; ++i) {
    const double y = y_of(i / 4.0);
    svg << "<line x1=\"" << left << "\" y1=\"" << fmt("%.2f", y) << "\" x2=\"" << left + plot_w << "\" y2=\""
        << fmt("%.2f", y) << "\"/>\n";
  }
  svg << "</g>\n";
  svg << "<g stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\"" << left + plot_w << "\" y2=\""
      << top + plot_h << "\"/>\n"
      << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << top + plot_h << "\"/>\n"
      << "</g>\n";

  svg << "<g text-anchor=\"end\">\n";
  for (int i = 0; i <= 4; ++i) {
    svg << "<text x=\"" << left - 6 << "\" y=\"" << fmt("%.2f", y_of(i / 4.0) + 4) << "\">" << fmt("%.2f", i / 4.0)
        << "</text>\n";
  }
  svg << "</g>\n";

  const std::size_t x_step = std::max<std::size_t>(1, (last + 9) / 10);
  svg << "<g text-anchor=\"middle\">\n";
  for (std::size_t t = 0; t <= last; t += x_step) {
    svg << "<text x=\"" << fmt("%.2f", x_of(t)) << "\" y=\"" << top + plot_h + 18 << "\">" << t << "</text>\n";
  }
  svg << "</g>\n"
      << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 15 << "\" text-anchor=\"middle\">time step</text>\n"
      << "<text x=\"18\" y=\"" << top + plot_h / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << top + plot_h / 2 << ")\">fidelity</text>\n";

  struct Curve {
    const std::vector<double>* values;
    const char* label;
    const char* color;
    const char* dash;
  };
  std::vector<Curve> curves = {{&series.noiseless, "noiseless", "#1f77b4", ""}};
  if (series.has_noise()) curves.push_back({&series.noisy, "noisy", "#d62728", " stroke-dasharray=\"6 3\""});

  for (const auto& curve : curves) {
    if (series.size() == 1) {
      svg << "<circle class=\"marker\" cx=\"" << fmt("%.2f", x_of(0)) << "\" cy=\""
          << fmt("%.2f", y_of((*curve.values)[0])) << "\" r=\"4\" fill=\"" << curve.color << "\"/>\n";
      continue;
    }
    svg << "<polyline fill=\"none\" stroke=\"" << curve.color << "\" stroke-width=\"1.5\"" << curve.dash
        << " points=\"";
    for (std::size_t t = 0; t <= last; ++t) {
      if (t) svg << ' ';
      svg << fmt("%.2f", x_of(t)) << ',' << fmt("%.2f", y_of((*curve.values)[t]));
    }
    svg << "\"/>\n";
  }

  const double legend_x = left + plot_w + 15;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const double y = top + 15 + 20 * static_cast<double>(i);
    svg << "<line x1=\"" << legend_x << "\" y1=\"" << y << "\" x2=\"" << legend_x + 25 << "\" y2=\"" << y
        << "\" stroke=\"" << curves[i].color << "\" stroke-width=\"2\"" << curves[i].dash << "/>\n"
        << "<text x=\"" << legend_x + 32 << "\" y=\"" << y + 4 << "\">" << curves[i].label << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void render_svg(const FidelitySeries& series, const std::filesystem::path& path, const std::string& title) {
  write_file(path, format_svg(series, title));
}

std::string format_matrix_csv(const ComplexMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ',';
      // Negative zero would print as "-0.000000"; normalize for diffing.
      const double v = m(r, c).real();
      out += fmt("%.6f", v == 0.0 ? 0.0 : v);
    }
    out += '\n';
  }
  return out;
}

void write_series_files(const std::vector<NamedSeries>& results, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& r : results) {
    write_csv(r.series, dir / (r.name + ".csv"));
    render_svg(r.series, dir / (r.name + ".svg"), r.name);
  }
}

}  // namespace qwalk
