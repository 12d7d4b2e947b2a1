#pragma once

#include <stdexcept>
#include <string>

namespace icm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotCoFinite : Error {
    using Error::Error;
};

struct NotMinimalGenerator : Error {
    using Error::Error;
};

// i/j name the violated inequality: j < 0 means the box bound x_i <= k_i,
// otherwise x_i + k_j + floor((i+j)/m) >= x_{(i+j) mod m} failed.
struct KunzViolation : Error {
    int i;
    int j;
    KunzViolation(std::string msg, int i_, int j_) : Error(std::move(msg)), i(i_), j(j_) {}
};

struct AmbientMismatch : Error {
    using Error::Error;
};

struct IsFullIdeal : Error {
    using Error::Error;
};

struct NotALattice : Error {
    using Error::Error;
};

struct PreconditionViolated : Error {
    using Error::Error;
};

} // namespace icm
