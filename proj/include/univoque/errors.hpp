#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace univoque {

// Base of every domain error raised by the library. The CLI maps Undecided
// (and its subclasses) to exit status 2 and everything else to 1.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

class PreconditionViolated : public Error {
public:
  using Error::Error;
};

// A decision could not be made within the available digit or precision
// budget. `budget` records what was exhausted.
class Undecided : public Error {
public:
  Undecided(const std::string& what, std::size_t budget)
      : Error(what), budget_(budget) {}
  std::size_t budget() const noexcept { return budget_; }

private:
  std::size_t budget_;
};

// A greedy digit of a Float base landed within tolerance of the branch point.
class UndecidableDigit : public Undecided {
public:
  using Undecided::Undecided;
};

class NotParry : public Error {
public:
  using Error::Error;
};

class MiddleGap : public Error {
public:
  using Error::Error;
};

class OutOfDomain : public Error {
public:
  using Error::Error;
};

class BoundaryAmbiguity : public Error {
public:
  using Error::Error;
};

class NotInImage : public Error {
public:
  using Error::Error;
};

class TooLarge : public Error {
public:
  using Error::Error;
};

}  // namespace univoque
