#pragma once

#include <stdexcept>
#include <string>

namespace quadwalk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Operation does not apply to the model's class.
class ClassMismatch : public Error {
 public:
  using Error::Error;
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// Encoded entry absent for this model/flavor pair.
class NotEncoded : public Error {
 public:
  using Error::Error;
};

class VanishingAmplitude : public Error {
 public:
  using Error::Error;
};

class DegenerateGeometry : public Error {
 public:
  using Error::Error;
};

}  // namespace quadwalk
