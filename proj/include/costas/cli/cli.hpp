#pragma once

#include <iosfwd>
#include <string>

#include "costas/cloud/cloud.hpp"

namespace costas::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes: 0 success, 1 verification failed, 2 invalid parameters,
/// 3 search cap exceeded or internal failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Static 1:1 scatter plot of a cloud, one circle per point.
std::string svg_scatter(const cloud::CloudState& state);

}  // namespace costas::cli
