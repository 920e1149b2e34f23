// Copyright 2026 The pfcurv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace pfcurv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Topology.
class DuplicateCell : public Error {
 public:
  using Error::Error;
};
class NonManifold : public Error {
 public:
  using Error::Error;
};
class InconsistentOrientation : public Error {
 public:
  using Error::Error;
};
class BrokenCycle : public Error {
 public:
  using Error::Error;
};
class InvalidMesh : public Error {
 public:
  using Error::Error;
};

// Geometry.
class DegenerateSimplex : public Error {
 public:
  using Error::Error;
};
class NotIncident : public Error {
 public:
  using Error::Error;
};
class ZeroMeasureElement : public Error {
 public:
  using Error::Error;
};

// Curvature / requests.
class BoundaryHinge : public Error {
 public:
  using Error::Error;
};
class BoundaryElement : public Error {
 public:
  using Error::Error;
};
class UnsupportedPair : public Error {
 public:
  using Error::Error;
};
class UnsupportedRequest : public Error {
 public:
  using Error::Error;
};

}  // namespace pfcurv
