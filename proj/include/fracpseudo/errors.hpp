#ifndef FRACPSEUDO_ERRORS_HPP
#define FRACPSEUDO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fracpseudo {

// Thrown when an argument violates a documented precondition.  The message
// names the violated invariant so callers can surface it verbatim.
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// Thrown when an algorithm fails to reach its target accuracy (series blowup,
// quadrature non-convergence, term-cap exhaustion).  Carries the best error
// estimate achieved so the caller can report how far off the result was.
class computation_error : public std::runtime_error {
public:
    computation_error(const std::string& what, double achieved_error)
        : std::runtime_error(what), achieved_error_(achieved_error) {}

    double achieved_error() const noexcept { return achieved_error_; }

private:
    double achieved_error_;
};

}

#endif
