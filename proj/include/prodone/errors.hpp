#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace prodone {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Cayley table that fails the group axioms, or a bad constructor parameter.
class GroupError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input (group shorthand, table file, sequence syntax, cache file).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operands living over different groups, or a violated precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed its configured state budget.
class ResourceError : public Error {
 public:
  ResourceError(std::string what, std::uint64_t attempted, std::uint64_t limit)
      : Error(what + " (attempted " + std::to_string(attempted) +
              " states, budget " + std::to_string(limit) + ")"),
        attempted_(attempted),
        limit_(limit) {}

  std::uint64_t attempted() const noexcept { return attempted_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t attempted_;
  std::uint64_t limit_;
};

/// State caps for the two dynamic programs.
///
/// `dp_states` bounds the per-sequence sub-multiset lattice used by
/// product_set and friends. `table_entries` bounds the whole-group tables of
/// every multiset up to a given length (atom enumeration, Davenport search,
/// bijection verification).
struct Budget {
  std::uint64_t dp_states = 2'000'000;
  std::uint64_t table_entries = 64'000'000;
};

}  // namespace prodone
