#pragma once

#include <iosfwd>
#include <string>

namespace quadtile::cli {

inline constexpr int kExitYes = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitNo = 10;

struct Options {
  std::string problem;  // empty or "-" reads stdin
  std::string tiling;
  std::string out;  // empty writes the document to `out`
  std::string svg;
  bool classify = false;
};

int cmd_decide(const Options& opts, std::ostream& out, std::ostream& err);
int cmd_tile(const Options& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const Options& opts, std::ostream& out, std::ostream& err);
int cmd_certify(const Options& opts, std::ostream& out, std::ostream& err);

/// Parses `quadtile <subcommand> [options]` and dispatches.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace quadtile::cli
