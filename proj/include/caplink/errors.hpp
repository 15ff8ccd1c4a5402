#ifndef CAPLINK_ERRORS_HPP
#define CAPLINK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace caplink {

// Exit classes used by the CLI: bad input (2), a mathematically non-generic
// or otherwise unusable instance (3), broken internal invariant (4).
enum class ErrorClass { Input = 2, Domain = 3, Internal = 4 };

class Error : public std::runtime_error {
  public:
    Error(ErrorClass cls, std::string module, const std::string& what)
        : std::runtime_error(what), cls_(cls), module_(std::move(module)) {}
    ErrorClass error_class() const { return cls_; }
    const std::string& module() const { return module_; }

  private:
    ErrorClass cls_;
    std::string module_;
};

class InputError : public Error {
  public:
    InputError(const std::string& module, const std::string& what)
        : Error(ErrorClass::Input, module, what) {}
};

class DomainError : public Error {
  public:
    DomainError(const std::string& module, const std::string& what)
        : Error(ErrorClass::Domain, module, what) {}
};

class InternalError : public Error {
  public:
    InternalError(const std::string& module, const std::string& what)
        : Error(ErrorClass::Internal, module, what) {}
};

// poly
struct MalformedInput : InputError {
    explicit MalformedInput(const std::string& w) : InputError("poly", w) {}
};
struct NotHomogeneous : InputError {
    explicit NotHomogeneous(const std::string& w) : InputError("poly", w) {}
};
struct ZeroPolynomial : InputError {
    explicit ZeroPolynomial(const std::string& w) : InputError("poly", w) {}
};
struct DegreeMismatch : InputError {
    explicit DegreeMismatch(const std::string& w) : InputError("poly", w) {}
};
struct BothZero : InputError {
    explicit BothZero(const std::string& w) : InputError("poly", w) {}
};
struct DegreeZero : InputError {
    explicit DegreeZero(const std::string& w) : InputError("poly", w) {}
};
struct DependentPoints : InputError {
    explicit DependentPoints(const std::string& w) : InputError("poly", w) {}
};
struct IdenticallyZero : DomainError {
    explicit IdenticallyZero(const std::string& w) : DomainError("poly", w) {}
};

// orient
struct DifferentSpans : InputError {
    explicit DifferentSpans(const std::string& w) : InputError("orient", w) {}
};
struct RankDeficient : InputError {
    explicit RankDeficient(const std::string& w) : InputError("orient", w) {}
};
struct Singular : InputError {
    explicit Singular(const std::string& w) : InputError("orient", w) {}
};
struct NotComplementary : InputError {
    explicit NotComplementary(const std::string& w) : InputError("orient", w) {}
};
struct NotTransverse : DomainError {
    explicit NotTransverse(const std::string& w) : DomainError("orient", w) {}
};

// solve
struct InconsistentDims : InputError {
    explicit InconsistentDims(const std::string& w) : InputError("solve", w) {}
};
struct CommonFactor : DomainError {
    CommonFactor(const std::string& w, std::string gcd)
        : DomainError("solve", w), gcd_text(std::move(gcd)) {}
    std::string gcd_text;
};
struct Degenerate : DomainError {
    explicit Degenerate(const std::string& w) : DomainError("solve", w) {}
};
struct SingularOrTangent : DomainError {
    SingularOrTangent(const std::string& w, std::string where)
        : DomainError("solve", w), point_text(std::move(where)) {}
    std::string point_text;
};

// slice
struct RealP : DomainError {
    explicit RealP(const std::string& w) : DomainError("slice", w) {}
};

// linking
struct RealRoot : DomainError {
    explicit RealRoot(const std::string& w) : DomainError("linking", w) {}
};
struct RootAtInfinity : DomainError {
    explicit RootAtInfinity(const std::string& w) : DomainError("linking", w) {}
};
struct LineMeetsBase : DomainError {
    explicit LineMeetsBase(const std::string& w) : DomainError("linking", w) {}
};
struct DegenerateAuxiliary : DomainError {
    explicit DegenerateAuxiliary(const std::string& w) : DomainError("linking", w) {}
};

// cli
struct ExhaustedRetries : DomainError {
    explicit ExhaustedRetries(const std::string& w) : DomainError("cli", w) {}
};
struct EmptyWindow : InputError {
    explicit EmptyWindow(const std::string& w) : InputError("cli", w) {}
};

} // namespace caplink

#endif
