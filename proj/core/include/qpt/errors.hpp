#ifndef QPT_ERRORS_HPP
#define QPT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qpt {

// Error taxonomy. The CLI maps categories to exit codes: invalid input -> 1,
// unsupported computation -> 2, bound exceeded -> 3.
enum class ErrorKind { InvalidInput, Unsupported, BoundExceeded, Internal };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& name, const std::string& what)
        : std::runtime_error(name + ": " + what), kind_(kind), name_(name) {}
    ErrorKind kind() const { return kind_; }
    const std::string& name() const { return name_; }

private:
    ErrorKind kind_;
    std::string name_;
};

struct UnknownVertex : Error {
    explicit UnknownVertex(const std::string& w) : Error(ErrorKind::InvalidInput, "UnknownVertex", w) {}
};
struct ReductionUnsupported : Error {
    explicit ReductionUnsupported(const std::string& w) : Error(ErrorKind::Unsupported, "ReductionUnsupported", w) {}
};
struct NonHomogeneousPotential : Error {
    explicit NonHomogeneousPotential(const std::string& w) : Error(ErrorKind::Unsupported, "NonHomogeneousPotential", w) {}
};
struct JacobianNotFinite : Error {
    explicit JacobianNotFinite(const std::string& w) : Error(ErrorKind::Unsupported, "JacobianNotFinite", w) {}
};
struct NotFiniteType : Error {
    explicit NotFiniteType(const std::string& w) : Error(ErrorKind::Unsupported, "NotFiniteType", w) {}
};
struct OpaqueOperand : Error {
    explicit OpaqueOperand(const std::string& w) : Error(ErrorKind::Unsupported, "OpaqueOperand", w) {}
};
struct OpaqueSource : Error {
    explicit OpaqueSource(const std::string& w) : Error(ErrorKind::Unsupported, "OpaqueSource", w) {}
};
struct OpaqueHeart : Error {
    explicit OpaqueHeart(const std::string& w) : Error(ErrorKind::Unsupported, "OpaqueHeart", w) {}
};
struct OpaqueCompanion : Error {
    explicit OpaqueCompanion(const std::string& w) : Error(ErrorKind::Unsupported, "OpaqueCompanion", w) {}
};
struct NotIndependentSet : Error {
    explicit NotIndependentSet(const std::string& w) : Error(ErrorKind::InvalidInput, "NotIndependentSet", w) {}
};
struct BoundExceeded : Error {
    explicit BoundExceeded(const std::string& w) : Error(ErrorKind::BoundExceeded, "BoundExceeded", w) {}
};
struct PairingViolation : Error {
    explicit PairingViolation(const std::string& w) : Error(ErrorKind::Internal, "PairingViolation", w) {}
};
struct HeartNotLifted : Error {
    explicit HeartNotLifted(const std::string& w) : Error(ErrorKind::InvalidInput, "HeartNotLifted", w) {}
};
struct IsomorphismFailure : Error {
    explicit IsomorphismFailure(const std::string& w) : Error(ErrorKind::Internal, "IsomorphismFailure", w) {}
};
struct ChordNotPresent : Error {
    explicit ChordNotPresent(const std::string& w) : Error(ErrorKind::InvalidInput, "ChordNotPresent", w) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error(ErrorKind::InvalidInput, "ParseError", w) {}
};

} // namespace qpt

#endif
