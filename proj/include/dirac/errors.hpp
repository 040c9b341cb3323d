#ifndef DIRAC_ERRORS_HPP
#define DIRAC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dirac {

// Malformed or out-of-contract input (bad file, bad flag, unsolvable system).
// The CLI maps this to exit code 2.
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A mathematical identity the library guarantees did not hold numerically.
// The CLI maps this to exit code 3.
class identity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dirac

#endif
