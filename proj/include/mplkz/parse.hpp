#pragma once

// Text forms used by the command line: complex literals and parameter lists.

#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace mplkz {

/// "0.5", "2i", "-i", "0.5+1i", "1e-3-2.5i". Throws std::invalid_argument.
std::complex<double> parse_complex(std::string_view text);

/// Shortest round-trip rendering in the same syntax, e.g. "0.5+1i".
std::string format_complex(std::complex<double> z);

/// Comma separated complex values: "0.1,0.2,0.9".
std::vector<std::complex<double>> parse_complex_list(std::string_view text);

}  // namespace mplkz
