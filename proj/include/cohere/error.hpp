#ifndef COHERE_ERROR_HPP
#define COHERE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cohere {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class IndexOutOfRange : public Error
{
public:
  using Error::Error;
};

/// Group closure grew past the enumeration cap.
class CapExceeded : public Error
{
public:
  explicit CapExceeded(std::size_t cap)
  : Error("group order exceeds enumeration cap " + std::to_string(cap)), cap(cap)
  {}
  std::size_t cap;
};

class NotTransitive : public Error
{
public:
  using Error::Error;
};

class ParseError : public Error
{
public:
  using Error::Error;
};

/// A relation matrix failed one of the four coherent-configuration axioms.
/// `axiom` is 1..4 and (x, y) is a cell exhibiting the failure.
class AxiomViolation : public Error
{
public:
  AxiomViolation(int axiom, std::size_t x, std::size_t y, const std::string &what)
  : Error("axiom (" + std::to_string(axiom) + ") violated at (" + std::to_string(x) + "," +
          std::to_string(y) + "): " + what),
    axiom(axiom), x(x), y(y)
  {}
  int axiom;
  std::size_t x, y;
};

class SplitFailure : public Error
{
public:
  using Error::Error;
};

class NonIntegerTrace : public Error
{
public:
  using Error::Error;
};

class MissingFixtureBasis : public Error
{
public:
  using Error::Error;
};

class UnsupportedOrder : public Error
{
public:
  using Error::Error;
};

class FixtureCorrupt : public Error
{
public:
  using Error::Error;
};

class DivisibilityFails : public Error
{
public:
  using Error::Error;
};

} // namespace cohere

#endif // COHERE_ERROR_HPP
