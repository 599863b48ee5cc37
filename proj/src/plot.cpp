#include "cyclemod/plot.hpp"

#include <cstdio>
#include <sstream>

namespace cyclemod {

namespace {

constexpr double kLeft = 80.0;
constexpr double kRight = 780.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 340.0;

// Above this many points the markers are dropped and only the line is drawn.
constexpr std::size_t kMaxMarkers = 2000;

std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

std::string render_residue_map(const SeedSequence& seq) {
  const u128 top_value = seq.modulus.value() - 1;
  const double k_span = seq.k_end > seq.k_start ? static_cast<double>(seq.k_end - seq.k_start) : 1.0;
  const auto x_of = [&](std::uint64_t k) {
    return kLeft + static_cast<double>(k - seq.k_start) / k_span * (kRight - kLeft);
  };
  const auto y_of = [&](u128 v) {
    const auto frac = static_cast<long double>(v) / static_cast<long double>(top_value);
    return kBottom - static_cast<double>(frac) * (kBottom - kTop);
  };
  const std::string p = std::to_string(seq.modulus.p());

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kPlotWidth << "\" height=\"" << kPlotHeight
     << "\" viewBox=\"0 0 " << kPlotWidth << ' ' << kPlotHeight << "\">\n";
  os << "<title>d_k mod 3^" << p << "</title>\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << kPlotWidth << "\" height=\"" << kPlotHeight
     << "\" fill=\"#ffffff\"/>\n";
  os << "<text x=\"400\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">d_k mod 3^"
     << p << " (M = " << to_string(seq.modulus.value()) << ", k = " << seq.k_start << ".." << seq.k_end
     << ")</text>\n";

  // Axes.
  os << "<g stroke=\"#000000\" stroke-width=\"1\">\n";
  os << "<line x1=\"" << fmt2(kLeft) << "\" y1=\"" << fmt2(kBottom) << "\" x2=\"" << fmt2(kRight) << "\" y2=\""
     << fmt2(kBottom) << "\"/>\n";
  os << "<line x1=\"" << fmt2(kLeft) << "\" y1=\"" << fmt2(kTop) << "\" x2=\"" << fmt2(kLeft) << "\" y2=\""
     << fmt2(kBottom) << "\"/>\n";
  os << "</g>\n";

  os << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  const std::uint64_t k_ticks[] = {seq.k_start, seq.k_start + (seq.k_end - seq.k_start) / 2, seq.k_end};
  for (std::uint64_t k : k_ticks) {
    os << "<text class=\"xtick\" x=\"" << fmt2(x_of(k)) << "\" y=\"" << fmt2(kBottom + 16)
       << "\" text-anchor=\"middle\">" << k << "</text>\n";
  }
  const u128 y_ticks[] = {0, top_value / 2, top_value};
  for (u128 v : y_ticks) {
    os << "<text class=\"ytick\" x=\"" << fmt2(kLeft - 6) << "\" y=\"" << fmt2(y_of(v) + 4)
       << "\" text-anchor=\"end\">" << to_string(v) << "</text>\n";
  }
  os << "<text x=\"400\" y=\"" << fmt2(kBottom + 40) << "\" text-anchor=\"middle\">k</text>\n";
  os << "<text x=\"20\" y=\"195\" text-anchor=\"middle\" transform=\"rotate(-90 20 195)\">d_k</text>\n";
  os << "</g>\n";

  os << "<polyline fill=\"none\" stroke=\"#9bb7d4\" stroke-width=\"1\" points=\"";
  for (std::size_t i = 0; i < seq.records.size(); ++i) {
    const auto& r = seq.records[i];
    os << (i == 0 ? "" : " ") << fmt2(x_of(r.k)) << ',' << fmt2(y_of(r.d_k.value()));
  }
  os << "\"/>\n";

  if (seq.records.size() <= kMaxMarkers) {
    os << "<g fill=\"#1f4e79\">\n";
    for (const auto& r : seq.records) {
      os << "<circle cx=\"" << fmt2(x_of(r.k)) << "\" cy=\"" << fmt2(y_of(r.d_k.value())) << "\" r=\"2\"/>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace cyclemod
