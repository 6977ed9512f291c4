#pragma once

#include <stdexcept>
#include <string>

namespace visipoly {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violations (bad vertex index, empty set where forbidden, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed graph6 input or an order the encoding does not support.
class Graph6Error : public Error {
 public:
  using Error::Error;
};

/// A distance-dependent operation was given a disconnected graph.
/// Carries one vertex from each of two distinct components.
class DisconnectedError : public Error {
 public:
  DisconnectedError(int u, int v)
      : Error("graph is disconnected: vertex " + std::to_string(u) +
              " and vertex " + std::to_string(v) +
              " lie in different components"),
        u_(u),
        v_(v) {}

  int vertex_in_first_component() const { return u_; }
  int vertex_in_second_component() const { return v_; }

 private:
  int u_;
  int v_;
};

/// An exponential-cost operation exceeded its configured resource cap.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// A graph spec string ("path:5", "corona(...)", ...) failed to resolve.
class GraphSpecError : public Error {
 public:
  using Error::Error;
};

}  // namespace visipoly
