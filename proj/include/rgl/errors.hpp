#pragma once

#include <stdexcept>
#include <string>

namespace rgl {

class lattice_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (+inf) + (-inf) and friends.
class indeterminate_form : public lattice_error {
 public:
  explicit indeterminate_form(const std::string& what) : lattice_error("indeterminate form: " + what) {}
};

class precondition_violation : public lattice_error {
 public:
  using lattice_error::lattice_error;
};

class ambient_mismatch : public lattice_error {
 public:
  using lattice_error::lattice_error;
};

class size_cap_exceeded : public lattice_error {
 public:
  using lattice_error::lattice_error;
};

/// The supplied cutset is not an antichain cutset of the lattice.
class invalid_cutset : public lattice_error {
 public:
  using lattice_error::lattice_error;
};

class parse_error : public lattice_error {
 public:
  using lattice_error::lattice_error;
};

}  // namespace rgl
