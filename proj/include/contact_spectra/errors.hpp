#pragma once

#include <stdexcept>
#include <string>

namespace contact_spectra {

// Bad family parameters, malformed descriptors, division by zero.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A requested degree/length window is not certified by the family's
// exponent hypotheses.  Raised instead of returning a silently wrong table.
class WindowError : public std::runtime_error {
public:
    explicit WindowError(const std::string& what) : std::runtime_error(what) {}
};

// Half-integer grading from inconsistent stratum data.
class ParityError : public std::runtime_error {
public:
    explicit ParityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace contact_spectra
