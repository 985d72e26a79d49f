#pragma once

// Instance files: `[section]` headers followed by `key = value` lines.
//
//   [ring]
//   vars = x, y
//   field = F(101)            # or QQ
//   hypersurface = x*y - z^2  # optional
//   [ideal]
//   generators = x, y
//   [M]
//   quotient = x              # R/(x); an empty value gives R
//   [N]
//   directsum = x | x, y      # R/(x) + R/(x,y)
//
// A module section may instead list `degrees = d1, d2, ...` and any number of
// `relation = p1, p2, ...` lines (one entry per generator). An empty module
// section is the zero module. `#` starts a comment.

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "glc/glc.hpp"

namespace glc {

using AnyInstance = std::variant<Instance<PrimeField>, Instance<RationalField>>;

/// Parses and validates; errors are ParseError (with line and column) or InstanceError.
AnyInstance parse_instance(std::string_view text, std::string id = "",
                           MonomialOrder order = MonomialOrder::grevlex);
/// Reads a file; the id is the file name without extension.
AnyInstance load_instance(const std::filesystem::path& path, MonomialOrder order = MonomialOrder::grevlex);

/// Canonical text: modules written as explicit presentations.
template <CoefficientField F>
std::string print_instance(const Instance<F>& inst);
std::string print_instance(const AnyInstance& inst);

const std::string& instance_id(const AnyInstance& inst);

}  // namespace glc
