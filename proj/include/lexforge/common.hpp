#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lexforge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration value or malformed config file.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Input data violates a documented precondition.
class DataError : public Error {
 public:
  using Error::Error;
};

/// Token requested from a model that does not contain it.
class OovError : public Error {
 public:
  using Error::Error;
};

/// Matrix dimensions do not line up.
class ShapeError : public Error {
 public:
  using Error::Error;
};

void warn(const std::string& message);

/// FNV-1a over a byte string; used to stamp artifacts with stable ids.
std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a_hex(std::string_view bytes);

/// Shortest decimal representation that round-trips (std::to_chars).
std::string format_double(double value);
double parse_double(std::string_view text);
long parse_long(std::string_view text);

/// Uniform integer in [0, n). Rejection sampling on raw engine output so
/// results do not depend on the standard library's distribution code.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

/// Uniform double in [0, 1).
double uniform_unit(std::mt19937_64& rng);

template <typename T>
void shuffle_vec(std::vector<T>& values, std::mt19937_64& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(values[i - 1], values[j]);
  }
}

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

std::vector<std::string> split_on(std::string_view line, char sep);

}  // namespace lexforge
