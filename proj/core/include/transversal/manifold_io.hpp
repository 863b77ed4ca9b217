#pragma once

// Plain-text manifold specification:
//
//   # comment
//   dims <d> <n>
//   chart
//   box <lo1> <hi1> ... <lod> <hid>
//   <component 1 expression>
//   ...
//   <component n expression>
//   chart
//   ...
//
// '#' starts a comment anywhere on a line; blank lines are ignored.

#include <filesystem>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "transversal/manifold.hpp"

namespace transversal {

class ManifoldFileError : public std::runtime_error {
 public:
  ManifoldFileError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

ChartAtlas read_manifold(std::istream& in);
ChartAtlas read_manifold_file(const std::filesystem::path& path);

/// Writes `atlas`; `header` lines are emitted as leading comments.
void write_manifold(std::ostream& out, const ChartAtlas& atlas,
                    const std::vector<std::string>& header = {});
void write_manifold_file(const std::filesystem::path& path, const ChartAtlas& atlas,
                         const std::vector<std::string>& header = {});

}  // namespace transversal
