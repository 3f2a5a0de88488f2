#include "framelat/error.hpp"

namespace framelat {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::NotAPoset: return "NotAPoset";
        case ErrorKind::NotALattice: return "NotALattice";
        case ErrorKind::InvalidMooreFamily: return "InvalidMooreFamily";
        case ErrorKind::DuplicateLabel: return "DuplicateLabel";
        case ErrorKind::UnknownLabel: return "UnknownLabel";
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::NotDClosed: return "NotDClosed";
        case ErrorKind::NotACover: return "NotACover";
        case ErrorKind::NotAJoinIrreducible: return "NotAJoinIrreducible";
        case ErrorKind::MethodDisagreement: return "MethodDisagreement";
        case ErrorKind::NotAMorphism: return "NotAMorphism";
        case ErrorKind::NotBoundPreserving: return "NotBoundPreserving";
        case ErrorKind::NotAnEmbedding: return "NotAnEmbedding";
        case ErrorKind::DomainMismatch: return "DomainMismatch";
        case ErrorKind::UnknownWorld: return "UnknownWorld";
        case ErrorKind::UnknownAction: return "UnknownAction";
        case ErrorKind::InvalidPMorphism: return "InvalidPMorphism";
        case ErrorKind::NotSurjective: return "NotSurjective";
        case ErrorKind::EmptyComponent: return "EmptyComponent";
        case ErrorKind::FrameNotS4: return "FrameNotS4";
        case ErrorKind::FrameNotRooted: return "FrameNotRooted";
        case ErrorKind::FrameNotFull: return "FrameNotFull";
        case ErrorKind::NotReduced: return "NotReduced";
        case ErrorKind::NotSymmetric: return "NotSymmetric";
        case ErrorKind::TriangleViolation: return "TriangleViolation";
        case ErrorKind::ModuleLawViolation: return "ModuleLawViolation";
        case ErrorKind::EmptyFiber: return "EmptyFiber";
        case ErrorKind::NotPairwiseComplete: return "NotPairwiseComplete";
        case ErrorKind::NotASubset: return "NotASubset";
        case ErrorKind::NotSI: return "NotSI";
        case ErrorKind::NotAtomistic: return "NotAtomistic";
        case ErrorKind::NotTopPreserving: return "NotTopPreserving";
        case ErrorKind::NoInjectiveComponent: return "NoInjectiveComponent";
        case ErrorKind::LIsBoolean: return "LIsBoolean";
        case ErrorKind::EmptyF0: return "EmptyF0";
        case ErrorKind::InvalidAtomStructure: return "InvalidAtomStructure";
        case ErrorKind::MalformedTerm: return "MalformedTerm";
        case ErrorKind::UnknownVariable: return "UnknownVariable";
        case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::UnknownCommand: return "UnknownCommand";
        case ErrorKind::UnsupportedKind: return "UnsupportedKind";
        case ErrorKind::InternalCheckFailed: return "InternalCheckFailed";
    }
    return "Error";
}

}  // namespace framelat
