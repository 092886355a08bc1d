#pragma once

#include "sepinv/orbits.hpp"
#include "sepinv/types.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sepinv::cli {

/// Exit codes shared by every command.
inline constexpr int kExitClean = 0;    // no collision / search inconclusive / success
inline constexpr int kExitError = 1;    // usage, parse or I/O error
inline constexpr int kExitWitness = 2;  // collision, counterexample or witness found

/// Point file: {"n":3,"x":["1","2","3"],"y":["1","0","2"]}, rationals as strings.
/// Throws std::invalid_argument on malformed input.
PointPair parse_point_json(std::string_view text);
std::string point_to_json(const PointPair& p);

PointPair read_point_file(const std::filesystem::path& path);
void write_point_file(const std::filesystem::path& path, const PointPair& p);

/// Comma-separated rational strings, e.g. "-1,0,1/2,2".
GridSpec parse_grid(std::string_view csv);

/// "j,k" -> BiIndex.
BiIndex parse_index(std::string_view text);

/// Runs one command line (without the program name) and returns its exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sepinv::cli
