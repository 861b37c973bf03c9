#ifndef RELGADGET_ERRORS_HPP
#define RELGADGET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace relgadget {

enum class Err {
    BadInput,
    SignatureMismatch,
    ObjectMismatch,
    ArityMismatch,
    NotAGraph,
    NotDirected,
    NotUndirected,
    ModeMismatch,
    NotWellFounded,
    OverlappingMarks,
    AlphaEqualsBeta,
    EdgeAbsent,
    NotAHom,
    NotAGadgetHom,
    NotSimple,
    NotASystem,
    ArcNotAPath,
    IsolatedPoint,
    HypothesisFailed,
    NoIsoFound,
    NotAGaifmanPath,
    TooSmall,
};

inline const char* err_name(Err e) {
    switch (e) {
        case Err::BadInput: return "BadInput";
        case Err::SignatureMismatch: return "SignatureMismatch";
        case Err::ObjectMismatch: return "ObjectMismatch";
        case Err::ArityMismatch: return "ArityMismatch";
        case Err::NotAGraph: return "NotAGraph";
        case Err::NotDirected: return "NotDirected";
        case Err::NotUndirected: return "NotUndirected";
        case Err::ModeMismatch: return "ModeMismatch";
        case Err::NotWellFounded: return "NotWellFounded";
        case Err::OverlappingMarks: return "OverlappingMarks";
        case Err::AlphaEqualsBeta: return "AlphaEqualsBeta";
        case Err::EdgeAbsent: return "EdgeAbsent";
        case Err::NotAHom: return "NotAHom";
        case Err::NotAGadgetHom: return "NotAGadgetHom";
        case Err::NotSimple: return "NotSimple";
        case Err::NotASystem: return "NotASystem";
        case Err::ArcNotAPath: return "ArcNotAPath";
        case Err::IsolatedPoint: return "IsolatedPoint";
        case Err::HypothesisFailed: return "HypothesisFailed";
        case Err::NoIsoFound: return "NoIsoFound";
        case Err::NotAGaifmanPath: return "NotAGaifmanPath";
        case Err::TooSmall: return "TooSmall";
    }
    return "Unknown";
}

// Domain error. CLI maps these to exit code 1; anything else is a usage bug.
class Error : public std::runtime_error {
public:
    Error(Err kind, const std::string& what)
        : std::runtime_error(std::string(err_name(kind)) + ": " + what), kind_(kind) {}
    Err kind() const { return kind_; }

private:
    Err kind_;
};

} // namespace relgadget

#endif
