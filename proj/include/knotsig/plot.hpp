#pragma once

#include <filesystem>
#include <string>

#include "knotsig/inertia.hpp"

namespace knotsig {

// Columns phi_lo, phi_hi, signature, z_lo, z_hi; one row per plateau.
std::string profile_csv(const SignatureProfile& profile);
std::string profile_svg(const SignatureProfile& profile, const std::string& title = "");

// Writes the SVG to `svg_path` and the CSV companion next to it (same stem,
// .csv extension). Throws Error{IoError}.
void emit_profile_plot(const SignatureProfile& profile, const std::filesystem::path& svg_path,
                       const std::string& title = "");

}  // namespace knotsig
