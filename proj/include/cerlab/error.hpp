#ifndef CERLAB_ERROR_HPP
#define CERLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cerlab {

/// Bad input: malformed hypergraph, node outside the node set, and so on.
class InvalidArgument : public std::invalid_argument {
public:
    explicit InvalidArgument(const std::string &what) : std::invalid_argument(what) {}
};

/// An operation was called on data that breaks its documented precondition
/// (e.g. asking whether a non-alpha-cycle is chordless).
class PreconditionError : public std::logic_error {
public:
    explicit PreconditionError(const std::string &what) : std::logic_error(what) {}
};

/// Refusal to run an enumeration that exceeds the desk-scale limits.
class SizeGuard : public std::runtime_error {
public:
    explicit SizeGuard(const std::string &what) : std::runtime_error(what) {}
};

/// A structural claim failed to re-verify. Always an implementation bug or a
/// wrong fixture, never something callers are expected to recover from.
class VerificationFailure : public std::runtime_error {
public:
    explicit VerificationFailure(const std::string &what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string &msg)
{
    if (!cond)
        throw InvalidArgument(msg);
}

inline void guard(bool cond, const std::string &msg)
{
    if (!cond)
        throw SizeGuard(msg);
}

} // namespace cerlab

#endif
