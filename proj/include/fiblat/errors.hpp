#pragma once

#include <stdexcept>
#include <string>

namespace fiblat {

// Base class of everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A letter outside {1..n}, or an unparseable word string.
struct InvalidWordError : Error {
  using Error::Error;
};

// A rewrite/local-move site that does not match the word or tree it is
// applied to.
struct InvalidSiteError : Error {
  using Error::Error;
};

// Malformed tree input (inner vertex with fewer than two children, bad JSON).
struct InvalidTreeError : Error {
  using Error::Error;
};

// Argument outside an operation's mathematical domain (not a simple, not a
// power of the top generator, ...).
struct DomainError : Error {
  using Error::Error;
};

// A word that is not the post-order label word of any Schroeder tree.
struct NotInImageError : Error {
  using Error::Error;
};

// A configured cap (class size, rank, leaf count) was exceeded.
struct ResourceLimitError : Error {
  using Error::Error;
};

// A meet/join oracle found no unique extremum. Never raised on Div(Delta_n);
// raising it would falsify the lattice theorem.
struct LatticeViolationError : Error {
  using Error::Error;
};

}  // namespace fiblat
