#pragma once

#include <stdexcept>
#include <string>

namespace topo {

/// Base class of every domain error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed cell input: duplicate vertices, empty vertex list, degenerate cycle.
class InvalidCell : public Error {
public:
    using Error::Error;
};

/// Rank outside what the domain supports (e.g. 3-cells in a 2-D cell complex).
class UnsupportedRank : public Error {
public:
    using Error::Error;
};

/// Insertion would break the rank monotonicity of a combinatorial complex.
class RankViolation : public Error {
public:
    using Error::Error;
};

/// Queried cell is not present in the complex.
class NotFound : public Error {
public:
    using Error::Error;
};

/// Signed incidence requested on a domain without an orientation.
class UnsupportedSignedIncidence : public Error {
public:
    using Error::Error;
};

/// via_rank lies on the wrong side of rank for the requested neighborhood.
class InvalidNeighborhood : public Error {
public:
    using Error::Error;
};

/// Eigensolver input is not symmetric.
class NotSymmetric : public Error {
public:
    using Error::Error;
};

/// Iterative eigensolver hit its iteration cap; carries the best residual reached.
class NoConvergence : public Error {
public:
    NoConvergence(const std::string& what, double residual)
        : Error(what), achieved_residual(residual) {}

    double achieved_residual;
};

/// Operation requires a non-empty skeleton.
class EmptyDomain : public Error {
public:
    using Error::Error;
};

/// Embedding dimension incompatible with the skeleton size.
class InvalidDim : public Error {
public:
    using Error::Error;
};

/// Incompatible matrix shapes in a message passing layer.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Malformed input document (JSON schema, OFF, Matrix Market, TSV).
class ParseError : public Error {
public:
    using Error::Error;
};

/// OFF face that is not a triangle.
class UnsupportedFace : public Error {
public:
    using Error::Error;
};

} // namespace topo
