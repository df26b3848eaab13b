#pragma once

#include <stdexcept>
#include <string>

namespace wald {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class IdenticalPointsError : public Error {
 public:
  using Error::Error;
};

class DuplicatePointError : public Error {
 public:
  using Error::Error;
};

class NonUniqueConicError : public Error {
 public:
  using Error::Error;
};

class WrongDegreeError : public Error {
 public:
  using Error::Error;
};

class CollinearVerticesError : public Error {
 public:
  using Error::Error;
};

class BadPrimeError : public Error {
 public:
  using Error::Error;
};

class UnverifiedCurveError : public Error {
 public:
  using Error::Error;
};

class ProportionalCurvesError : public Error {
 public:
  using Error::Error;
};

class InsufficientMultiplicityError : public Error {
 public:
  InsufficientMultiplicityError(const std::string& msg, std::size_t point)
      : Error(msg), point_(point) {}
  std::size_t point() const { return point_; }

 private:
  std::size_t point_;
};

class InconsistentBoundsError : public Error {
 public:
  using Error::Error;
};

class UnknownFixtureError : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace wald
