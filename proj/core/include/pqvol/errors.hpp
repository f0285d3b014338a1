#pragma once

#include <stdexcept>

namespace pqvol {

// Malformed graph-spec / bipartite-spec input. The message names the
// offending token.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation that assumes a connected (bipartite) graph was handed a
// disconnected one. Never downgraded to a partial answer.
struct DisconnectedError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An instance exceeded one of the documented enumeration guards. The
// message states the guard and the instance size.
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A cross-check that must hold by construction failed; this always means
// an implementation bug, never bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace pqvol
