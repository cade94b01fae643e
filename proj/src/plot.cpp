#include "knotsig/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "knotsig/error.hpp"
#include "knotsig/report.hpp"

namespace knotsig {

namespace {

constexpr int kDigits = 12;
// pi and pi/2 to kDigits decimals.
constexpr const char* kPi = "3.141592653590";
constexpr const char* kHalfPi = "1.570796326795";
constexpr double kPiD = 3.14159265358979323846;

struct Arc {
  std::string phi_lo, phi_hi, z_lo, z_hi;
  double x_lo = 0, x_hi = 0;  // fraction of the horizontal range
  int value = 0;
};

Rational mid(const Rational& a, const Rational& b) { return (a + b) / 2; }

// The arc between consecutive roots, endpoints at the witness midpoints.
std::vector<Arc> arcs(const SignatureProfile& p) {
  const double span = p.half_angles ? kPiD / 2 : kPiD;
  std::vector<Arc> out;
  const std::size_t m = p.jumps.size();
  for (std::size_t k = 0; k < p.plateaus.size(); ++k) {
    Arc a;
    a.value = p.plateaus[k];
    if (k == 0) {
      a.phi_lo = decimal(Rational(0), kDigits);
      a.z_hi = decimal(Rational(2), kDigits);
      a.x_lo = 0;
    } else {
      const auto& w = p.jumps[k - 1];
      const Rational phi = mid(w.angle_lo, w.angle_hi);
      a.phi_lo = decimal(phi, kDigits);
      a.z_hi = decimal(mid(w.lo, w.hi), kDigits);
      a.x_lo = phi.get_d() / span;
    }
    if (k == m) {
      a.phi_hi = p.half_angles ? kHalfPi : kPi;
      a.z_lo = decimal(Rational(-2), kDigits);
      a.x_hi = 1;
    } else {
      const auto& w = p.jumps[k];
      const Rational phi = mid(w.angle_lo, w.angle_hi);
      a.phi_hi = decimal(phi, kDigits);
      a.z_lo = decimal(mid(w.lo, w.hi), kDigits);
      a.x_hi = phi.get_d() / span;
    }
    out.push_back(std::move(a));
  }
  return out;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string profile_csv(const SignatureProfile& profile) {
  std::ostringstream out;
  out << (profile.half_angles ? "alpha_lo,alpha_hi" : "phi_lo,phi_hi") << ",signature,z_lo,z_hi\n";
  for (const auto& a : arcs(profile)) {
    out << a.phi_lo << "," << a.phi_hi << "," << a.value << "," << a.z_lo << "," << a.z_hi << "\n";
  }
  return out.str();
}

std::string profile_svg(const SignatureProfile& profile, const std::string& title) {
  constexpr double kW = 640, kH = 360;
  constexpr double kLeft = 60, kRight = 20, kTop = 40, kBottom = 50;
  const double pw = kW - kLeft - kRight;
  const double ph = kH - kTop - kBottom;

  const auto as = arcs(profile);
  int lo = 0, hi = 0;
  for (const auto& a : as) {
    lo = std::min(lo, a.value);
    hi = std::max(hi, a.value);
  }
  lo -= 2;
  hi += 2;
  auto X = [&](double f) { return kLeft + f * pw; };
  auto Y = [&](int v) { return kTop + (hi - v) * ph / (hi - lo); };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
    << "\" viewBox=\"0 0 " << kW << " " << kH << "\">\n";
  s << "<rect x=\"0\" y=\"0\" width=\"" << kW << "\" height=\"" << kH << "\" fill=\"white\"/>\n";
  if (!title.empty()) {
    s << "<text x=\"" << fmt(kW / 2) << "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" "
      << "font-size=\"14\">" << escape(title) << "</text>\n";
  }
  // Horizontal grid at even signature values.
  for (int v = lo; v <= hi; ++v) {
    if (v % 2 != 0) continue;
    s << "<line x1=\"" << fmt(X(0)) << "\" y1=\"" << fmt(Y(v)) << "\" x2=\"" << fmt(X(1)) << "\" y2=\""
      << fmt(Y(v)) << "\" stroke=\"" << (v == 0 ? "#888" : "#ddd") << "\" stroke-width=\"1\"/>\n";
    s << "<text x=\"" << fmt(kLeft - 8) << "\" y=\"" << fmt(Y(v) + 4)
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << v << "</text>\n";
  }
  s << "<rect x=\"" << fmt(kLeft) << "\" y=\"" << fmt(kTop) << "\" width=\"" << fmt(pw) << "\" height=\""
    << fmt(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";
  // Jump locations.
  for (std::size_t k = 1; k < as.size(); ++k) {
    s << "<line x1=\"" << fmt(X(as[k].x_lo)) << "\" y1=\"" << fmt(kTop) << "\" x2=\"" << fmt(X(as[k].x_lo))
      << "\" y2=\"" << fmt(kTop + ph) << "\" stroke=\"#c33\" stroke-dasharray=\"4 3\"/>\n";
  }
  // Plateaus as horizontal segments; the value at a root itself is left open.
  for (const auto& a : as) {
    s << "<line x1=\"" << fmt(X(a.x_lo)) << "\" y1=\"" << fmt(Y(a.value)) << "\" x2=\"" << fmt(X(a.x_hi))
      << "\" y2=\"" << fmt(Y(a.value)) << "\" stroke=\"#1f4e9c\" stroke-width=\"3\"/>\n";
  }
  const char* axis = profile.half_angles ? "alpha" : "phi";
  const char* right = profile.half_angles ? "pi/2" : "pi";
  s << "<text x=\"" << fmt(X(0)) << "\" y=\"" << fmt(kTop + ph + 18)
    << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">0</text>\n";
  s << "<text x=\"" << fmt(X(1)) << "\" y=\"" << fmt(kTop + ph + 18)
    << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << right << "</text>\n";
  s << "<text x=\"" << fmt(X(0.5)) << "\" y=\"" << fmt(kH - 10)
    << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << axis << "</text>\n";
  s << "<text x=\"16\" y=\"" << fmt(kTop + ph / 2) << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
    << "font-size=\"12\" transform=\"rotate(-90 16 " << fmt(kTop + ph / 2) << ")\">signature</text>\n";
  s << "</svg>\n";
  return s.str();
}

void emit_profile_plot(const SignatureProfile& profile, const std::filesystem::path& svg_path,
                       const std::string& title) {
  auto write = [](const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot open " + p.string() + " for writing");
    out << text;
    if (!out) throw Error(ErrorCode::IoError, "write to " + p.string() + " failed");
  };
  write(svg_path, profile_svg(profile, title));
  std::filesystem::path csv = svg_path;
  csv.replace_extension(".csv");
  write(csv, profile_csv(profile));
}

}  // namespace knotsig
