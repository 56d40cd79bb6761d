#pragma once

#include <stdexcept>
#include <string>

namespace ttp {

/// Operand shapes or index lists that do not fit the operation.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed matrix, tree or report text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Edge set that does not describe a labelled tree on 1..n.
class TreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A spectral quantity that is undefined for the given input.
class SpectralError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace ttp
