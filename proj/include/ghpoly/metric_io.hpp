#ifndef GHPOLY_METRIC_IO_HPP
#define GHPOLY_METRIC_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ghpoly/metric_space.hpp"

namespace ghpoly {

enum class MatrixFormat { csv, json };

/// Malformed file contents (as opposed to a well-formed but non-metric matrix,
/// which surfaces as InvalidMetricError).
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// CSV: first row holds the labels, then one row per point.
/// JSON: {"labels": [...], "dist": [[...], ...]}.
/// Floats are written in shortest round-trip form, so reading back is bit-exact.
void write_space(std::ostream& os, const FiniteMetricSpace& space, MatrixFormat format);
void write_space(const std::filesystem::path& path, const FiniteMetricSpace& space,
                 MatrixFormat format);

/// Parses and validates. Matrices identical to a regular polygon get their
/// exact polygon structure back.
FiniteMetricSpace read_space(std::istream& is, MatrixFormat format, bool allow_pseudo = false);
FiniteMetricSpace read_space(const std::filesystem::path& path, bool allow_pseudo = false);

/// Picks the format from the extension; anything but ".json" is CSV.
MatrixFormat format_for(const std::filesystem::path& path);

std::string format_double(double x);

} // namespace ghpoly

#endif
