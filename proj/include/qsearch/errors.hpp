#pragma once

#include <stdexcept>
#include <string>

namespace qsearch {

// Base class for all library errors so callers can catch qsearch failures
// separately from generic std exceptions.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Level weights do not sum to one (beyond the renormalization window),
// or a level carries an invalid weight/multiplicity.
class NormalizationError : public Error {
public:
    using Error::Error;
};

// No eigenphase-zero level with positive weight: the source state would
// have zero overlap with the target and the search cannot start.
class EmptyKernelError : public Error {
public:
    using Error::Error;
};

// An angle is out of range, non-finite, or the oracle phase is zero.
class PhaseRangeError : public Error {
public:
    using Error::Error;
};

// The spectrum has no nonzero eigenphase, so the gap is undefined.
class GapError : public Error {
public:
    using Error::Error;
};

class ToleranceError : public Error {
public:
    using Error::Error;
};

// A root interval degenerated (endpoints too close to bracket).
class BracketError : public Error {
public:
    using Error::Error;
};

// An eigenphase coincides with a pole of the overlap formulas.
class SingularityError : public Error {
public:
    using Error::Error;
};

// First moment is nonzero where the construction requires it to vanish.
class MomentError : public Error {
public:
    using Error::Error;
};

// A parameter solve found no sign change on its admissible interval.
class NoRootError : public Error {
public:
    using Error::Error;
};

class SizeError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class IndexError : public Error {
public:
    using Error::Error;
};

class TargetError : public Error {
public:
    using Error::Error;
};

// A probability curve has no usable maximum (e.g. identically zero).
class PeakError : public Error {
public:
    using Error::Error;
};

} // namespace qsearch
