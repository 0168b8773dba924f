#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wedgedeg {

// Bad input: malformed tables, specs, non-normal subgroups, wrong modes.
// The CLI maps these to exit status 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured size or enumeration cap was hit. CLI exit status 3.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotAGroup : public InputError {
 public:
  using InputError::InputError;
};

class NotASubgroup : public InputError {
 public:
  using InputError::InputError;
};

class NotNormal : public InputError {
 public:
  using InputError::InputError;
};

class TrivialGroupHasNoPrime : public InputError {
 public:
  TrivialGroupHasNoPrime()
      : InputError("the trivial group has no prime divisor") {}
};

class NotCoprime : public InputError {
 public:
  using InputError::InputError;
};

class WrongMode : public InputError {
 public:
  using InputError::InputError;
};

class MissingExteriorStructure : public InputError {
 public:
  MissingExteriorStructure()
      : InputError("wedge-trivial relation requires an exterior structure") {}
};

class IncompleteTable : public InputError {
 public:
  IncompleteTable() : InputError("coset table is not complete") {}
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class SizeLimitExceeded : public ResourceError {
 public:
  explicit SizeLimitExceeded(std::size_t cap)
      : ResourceError("group closure exceeded " + std::to_string(cap) +
                      " elements"),
        cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

class LimitExceeded : public ResourceError {
 public:
  explicit LimitExceeded(std::size_t limit)
      : ResourceError("coset enumeration needs more than " +
                      std::to_string(limit) + " cosets"),
        limit_(limit) {}
  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

class GroupTooLarge : public ResourceError {
 public:
  GroupTooLarge(std::size_t order, std::size_t cap)
      : ResourceError("group of order " + std::to_string(order) +
                      " exceeds the cap of " + std::to_string(cap)) {}
};

class TooLarge : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

}  // namespace wedgedeg
