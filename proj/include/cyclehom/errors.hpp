#pragma once

#include <stdexcept>
#include <string>

namespace cyclehom {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Shape of an operand does not match its partner.
struct DimensionMismatch : Error { using Error::Error; };

// Composite of consecutive differentials is nonzero.
struct NotAComplex : Error { using Error::Error; };

// A simplicial face/degeneracy identity fails.
struct SimplicialIdentityViolation : Error { using Error::Error; };

// Squares or the commuting condition of a double complex fail.
struct NotADoubleComplex : Error { using Error::Error; };

// Declared group action generator is not an automorphism.
struct NotAnAutomorphism : Error { using Error::Error; };

// Declared map between groups is not a homomorphism.
struct NotAHomomorphism : Error { using Error::Error; };

// Requested degree is not stable under the given truncation.
struct TruncationTooSmall : Error { using Error::Error; };

// Spectral page arithmetic requires a prime modulus.
struct CompositeModulus : Error { using Error::Error; };

// Structural validation failed (group axioms, torsion chains, file contents).
struct ValidationError : Error { using Error::Error; };

// Input file or CLI argument could not be parsed.
struct ParseError : Error { using Error::Error; };

// Coefficient ring not supported by the requested operation.
struct UnsupportedCoefficient : Error { using Error::Error; };

// Integer linear system has no exact solution.
struct NoIntegralSolution : Error { using Error::Error; };

}  // namespace cyclehom
