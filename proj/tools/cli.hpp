#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace goldenk3::cli {

inline constexpr const char* kSchemaVersion = "1";

/// Exit codes: success or certificate pass, usage error, certificate fail.
enum ExitCode : int { kOk = 0, kUsage = 1, kCertificateFail = 2 };

/// Runs the command line tool. `args` excludes the program name. Results go
/// to `out`, diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Real number rounded to 12 significant digits, as stored in JSON output.
double round12(double x);

/// "%.12g" rendering with -0 normalised to 0.
std::string format_real(double x);

}  // namespace goldenk3::cli
