#pragma once

#include "leibrack/report.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace leibrack::cli {

/// Exit codes shared by all commands.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitParseError = 2;

struct GlobalOpts {
    bool json = false;
    std::uint64_t seed;
    double step;
    std::optional<double> tol;              // overrides the per-check defaults
    std::optional<std::string> ideal_path;  // extra splitting candidate for analyze
    std::ostream* out = nullptr;            // defaults to std::cout
    std::ostream* err = nullptr;            // defaults to std::cerr

    GlobalOpts();
};

/// Targets name either a built-in fixture or a JSON file path.
int cmd_check(const std::string& target, const std::string& kind, const GlobalOpts& opts);
int cmd_analyze(const std::string& target, const GlobalOpts& opts);
int cmd_digroup(const std::string& target, const std::string& subcommand, const GlobalOpts& opts);
int cmd_diff(const std::string& target, const GlobalOpts& opts);
int cmd_enumerate(std::size_t order, const GlobalOpts& opts);
int cmd_expad(const std::string& target, const GlobalOpts& opts);

}  // namespace leibrack::cli
