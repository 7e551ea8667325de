#ifndef DPGRAPH_ERRORS_HPP
#define DPGRAPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dpgraph {

// Base class for everything this library throws on bad input or
// violated preconditions. Catch this to handle all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// build_graph: an edge endpoint is outside [0, order).
struct InvalidEdge : Error {
    using Error::Error;
};

// build_graph / edge-list parser: an edge (i, i) was supplied.
struct LoopRejected : Error {
    using Error::Error;
};

// A VertexSet's universe does not match the graph it is applied to.
struct DimensionError : Error {
    using Error::Error;
};

// dp/sdp predicates are defined for connected graphs only.
struct DisconnectedInput : Error {
    using Error::Error;
};

// A product factor has no vertices.
struct EmptyFactor : Error {
    using Error::Error;
};

// A stated precondition of an operation does not hold.
struct PreconditionViolated : Error {
    using Error::Error;
};

// A vertex sequence passed as a walk has non-adjacent consecutive entries.
struct NotAWalk : Error {
    using Error::Error;
};

// graph6 parsing errors.
struct BadHeader : Error {
    using Error::Error;
};
struct BadLength : Error {
    using Error::Error;
};
struct BadChar : Error {
    using Error::Error;
};

// Graph exceeds a representation or format limit.
struct TooLarge : Error {
    using Error::Error;
};

// verify subcommand: claim id not recognised.
struct UnknownClaim : Error {
    using Error::Error;
};

// A search would exceed the configured size cap.
struct ScaleExceeded : Error {
    using Error::Error;
};

} // namespace dpgraph

#endif
