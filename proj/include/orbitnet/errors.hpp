#pragma once

#include <stdexcept>
#include <string>

namespace orbitnet {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// TLE / orbital
struct ChecksumMismatch : Error { using Error::Error; };
struct MalformedLine : Error { using Error::Error; };
struct EccentricityOutOfRange : Error { using Error::Error; };
struct NonConvergence : Error { using Error::Error; };

// splines / envelopes
struct DuplicateKnot : Error { using Error::Error; };

// triangulation
struct DegenerateInput : Error { using Error::Error; };
struct NodeSetMismatch : Error { using Error::Error; };
struct Unsupported : Error { using Error::Error; };

// graphs
struct NegativeWeight : Error { using Error::Error; };
struct NegativeCycleDetected : Error { using Error::Error; };
struct EmptyTimeSet : Error { using Error::Error; };
struct NotFifo : Error { using Error::Error; };

// routing
struct NotDelivered : Error { using Error::Error; };
struct ZeroDistance : Error { using Error::Error; };
struct Disconnected : Error {
  Disconnected(int a_, int b_, const std::string& what) : Error(what), a(a_), b(b_) {}
  int a;
  int b;
};

// experiments / CLI
struct ConfigError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace orbitnet
