#pragma once

#include <stdexcept>
#include <string>

namespace framelat {

enum class ErrorKind {
    // construction and validation
    NotAPoset,
    NotALattice,
    InvalidMooreFamily,
    DuplicateLabel,
    UnknownLabel,
    EmptyInput,
    // od graph / congruence machinery
    NotDClosed,
    NotACover,
    NotAJoinIrreducible,
    MethodDisagreement,
    // morphisms
    NotAMorphism,
    NotBoundPreserving,
    NotAnEmbedding,
    DomainMismatch,
    // frames
    UnknownWorld,
    UnknownAction,
    InvalidPMorphism,
    NotSurjective,
    EmptyComponent,
    FrameNotS4,
    FrameNotRooted,
    FrameNotFull,
    // ultrametric spaces
    NotReduced,
    NotSymmetric,
    TriangleViolation,
    ModuleLawViolation,
    EmptyFiber,
    NotPairwiseComplete,
    // relational lattices and normalization
    NotASubset,
    NotSI,
    NotAtomistic,
    NotTopPreserving,
    NoInjectiveComponent,
    // reduction pipeline
    LIsBoolean,
    EmptyF0,
    InvalidAtomStructure,
    // horn
    MalformedTerm,
    UnknownVariable,
    // resources and i/o
    SizeCapExceeded,
    ParseError,
    UnknownCommand,
    UnsupportedKind,
    // a theorem-backed internal check failed; indicates inconsistent input
    InternalCheckFailed,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace framelat
