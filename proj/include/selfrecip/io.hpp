#pragma once

// CSV serialization for radial grid functions (columns: t,re,im) and chain
// densities (columns: tau,re,im).  Numbers are written in the shortest form
// that parses back to the identical double (std::to_chars), so re-running a
// writer on the same data produces byte-identical files and a written value
// never loses precision on the way back in.

#include <charconv>
#include <cmath>
#include <complex>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "selfrecip/eigenchain.hpp"
#include "selfrecip/grid.hpp"

namespace selfrecip {

/// Malformed file content, unreadable paths, or samples that violate the
/// layout a reader requires (non-log-uniform radial nodes, a tau column
/// that does not start at zero, ...).
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shortest decimal string that round-trips to exactly this double.
inline std::string format_shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace detail {

inline double parse_double_field(std::string_view field, const std::string& context) {
  double v = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last)
    throw io_error(context + ": cannot parse '" + std::string(field) + "' as a number");
  return v;
}

// Splits one CSV data line into exactly three fields.
inline void split3(std::string_view line, std::string_view out[3], const std::string& context) {
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t comma = line.find(',', start);
    if (i < 2) {
      if (comma == std::string_view::npos)
        throw io_error(context + ": expected 3 comma-separated fields in '" +
                       std::string(line) + "'");
      out[i] = line.substr(start, comma - start);
      start = comma + 1;
    } else {
      if (comma != std::string_view::npos)
        throw io_error(context + ": expected 3 comma-separated fields in '" +
                       std::string(line) + "'");
      out[i] = line.substr(start);
    }
  }
}

struct ParsedRows {
  std::vector<double> axis;
  std::vector<complex> values;
};

inline ParsedRows read_three_column_csv(const std::string& path, std::string_view header) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open '" + path + "' for reading");
  std::string line;
  if (!std::getline(in, line)) throw io_error("'" + path + "' is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != header)
    throw io_error("'" + path + "': expected header '" + std::string(header) + "', got '" +
                   line + "'");
  ParsedRows rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::string_view fields[3];
    const std::string context = "'" + path + "' line " + std::to_string(lineno);
    split3(line, fields, context);
    rows.axis.push_back(parse_double_field(fields[0], context));
    const double re = parse_double_field(fields[1], context);
    const double im = parse_double_field(fields[2], context);
    rows.values.emplace_back(re, im);
  }
  if (rows.axis.empty()) throw io_error("'" + path + "' has a header but no data rows");
  return rows;
}

}  // namespace detail

/// Rebuilds a GridFunction from explicit radial samples.  The nodes must be
/// positive, increasing, and log-uniform to within 1e-9 in the log
/// coordinate; the reconstructed grid reproduces the first node and the
/// spacing exactly rather than re-deriving them through extra roundings.
inline GridFunction grid_function_from_samples(const std::vector<double>& t,
                                               std::vector<complex> values) {
  if (t.size() != values.size())
    throw io_error("radial samples: node and value counts differ");
  const int n = static_cast<int>(t.size());
  if (n < 16) throw io_error("radial samples: need at least 16 rows, got " + std::to_string(n));
  for (double v : t)
    if (!(v > 0.0) || !std::isfinite(v))
      throw io_error("radial samples: nodes must be positive and finite");
  RadialGrid grid;
  grid.count = n;
  grid.u_min = std::log(t.front());
  grid.h = (std::log(t.back()) - grid.u_min) / (n - 1);
  if (!(grid.h > 0.0)) throw io_error("radial samples: nodes must be strictly increasing");
  for (int j = 0; j < n; ++j) {
    const double u = std::log(t[static_cast<std::size_t>(j)]);
    if (std::abs(u - grid.u(j)) > 1e-9 * std::max(1.0, std::abs(u)))
      throw io_error("radial samples: nodes are not log-uniform (node " + std::to_string(j) +
                     ")");
  }
  return GridFunction{grid, std::move(values)};
}

/// Writes a radial function as CSV with header `t,re,im`.
inline void write_radial_csv(const std::string& path, const GridFunction& x) {
  std::ostringstream out;
  out << "t,re,im\n";
  for (int j = 0; j < x.grid.count; ++j) {
    const complex v = x.values[static_cast<std::size_t>(j)];
    out << format_shortest(x.grid.node(j)) << ',' << format_shortest(v.real()) << ','
        << format_shortest(v.imag()) << '\n';
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw io_error("cannot open '" + path + "' for writing");
  file << out.str();
  if (!file) throw io_error("failed writing '" + path + "'");
}

/// Reads a `t,re,im` CSV back into a GridFunction (log-uniform nodes
/// required).
inline GridFunction read_radial_csv(const std::string& path) {
  detail::ParsedRows rows = detail::read_three_column_csv(path, "t,re,im");
  return grid_function_from_samples(rows.axis, std::move(rows.values));
}

/// Writes a chain density as CSV with header `tau,re,im` (the tau grid of a
/// Mellin-image file: uniform from 0).
inline void write_tau_csv(const std::string& path, const TauFunction& phi) {
  std::ostringstream out;
  out << "tau,re,im\n";
  for (int k = 0; k < phi.count(); ++k) {
    const complex v = phi.values[static_cast<std::size_t>(k)];
    out << format_shortest(phi.tau(k)) << ',' << format_shortest(v.real()) << ','
        << format_shortest(v.imag()) << '\n';
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw io_error("cannot open '" + path + "' for writing");
  file << out.str();
  if (!file) throw io_error("failed writing '" + path + "'");
}

/// Reads a `tau,re,im` CSV back into a TauFunction.  The tau column must
/// start at 0 and be uniform to within 1e-9 relative.
inline TauFunction read_tau_csv(const std::string& path) {
  detail::ParsedRows rows = detail::read_three_column_csv(path, "tau,re,im");
  const int n = static_cast<int>(rows.axis.size());
  if (n < 8) throw io_error("'" + path + "': need at least 8 tau rows, got " + std::to_string(n));
  if (rows.axis.front() != 0.0)
    throw io_error("'" + path + "': the tau column must start at 0");
  const double step = rows.axis.back() / (n - 1);
  if (!(step > 0.0) || !std::isfinite(step))
    throw io_error("'" + path + "': tau samples must be increasing");
  for (int k = 0; k < n; ++k) {
    const double want = k * step;
    if (std::abs(rows.axis[static_cast<std::size_t>(k)] - want) >
        1e-9 * std::max(1.0, std::abs(want)))
      throw io_error("'" + path + "': tau samples are not uniform (row " + std::to_string(k) +
                     ")");
  }
  return TauFunction{step, std::move(rows.values)};
}

}  // namespace selfrecip
