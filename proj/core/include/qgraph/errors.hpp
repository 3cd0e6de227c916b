#pragma once

#include <stdexcept>
#include <string>

namespace qgraph {

/// Malformed or inconsistent input data (files, shapes, missing fields).
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A mathematical precondition or invariant failed (non-Hermitian data,
/// missing self-orthogonality, cardinality mismatch, ...).
class invariant_error : public std::runtime_error {
 public:
  explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qgraph
