#pragma once

#include <stdexcept>
#include <string>

namespace defectk {

/// A declared node failed verification, or a constructed instance is degenerate.
class AuditFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The hyperplane passes through a point of the set; redraw and retry.
class NonGenericHyperplane : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A Gotzmann probe hit its degree cap without a verdict.
class InconclusiveProbe : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace defectk
