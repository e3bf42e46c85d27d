#pragma once

#include <stdexcept>
#include <string>

namespace ncg {

// Base class for every error raised by the library. The CLI maps any of
// these to exit code 2.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidGraph : public Error {
public:
  explicit InvalidGraph(const std::string& what)
    : Error("invalid graph: " + what) {}
};

class InvalidMove : public Error {
public:
  explicit InvalidMove(const std::string& what)
    : Error("invalid move: " + what) {}
};

class InvalidStrategy : public Error {
public:
  explicit InvalidStrategy(const std::string& what)
    : Error("invalid strategy: " + what) {}
};

class InstanceTooLarge : public Error {
public:
  explicit InstanceTooLarge(const std::string& what)
    : Error("instance too large: " + what) {}
};

class NotATree : public Error {
public:
  NotATree() : Error("graph is not a tree") {}
};

class NotGreedyEquilibrium : public Error {
public:
  NotGreedyEquilibrium()
    : Error("precondition violated: instance is not in greedy equilibrium") {}
};

class DomainError : public Error {
public:
  explicit DomainError(const std::string& what)
    : Error("parameter out of domain: " + what) {}
};

class ParseError : public Error {
public:
  explicit ParseError(const std::string& what)
    : Error("parse error: " + what) {}
};

} // namespace ncg
