#pragma once

#include <stdexcept>
#include <string>

namespace proxim {

/// Malformed input to a builder or operation (bad vertex, bad parameter).
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A distance computation reached a graph that is not connected.
class DisconnectedGraph : public std::runtime_error {
public:
  DisconnectedGraph(std::size_t unreached_vertex)
      : std::runtime_error("graph is disconnected: vertex " + std::to_string(unreached_vertex) +
                           " is unreachable"),
        unreached_(unreached_vertex) {}

  std::size_t unreached_vertex() const { return unreached_; }

private:
  std::size_t unreached_;
};

/// A constructed family failed one of its claimed properties. Always fatal.
class ConstructionIntegrityError : public std::runtime_error {
public:
  ConstructionIntegrityError(const std::string& family, const std::string& claim)
      : std::runtime_error(family + ": construction integrity check failed: " + claim), claim_(claim) {}

  const std::string& claim() const { return claim_; }

private:
  std::string claim_;
};

/// Error while reading or decoding an input file / line.
class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace proxim
