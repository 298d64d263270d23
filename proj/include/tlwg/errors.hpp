#pragma once

#include <stdexcept>
#include <string>

namespace tlwg {

// Base class for all library-domain failures.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct size_limit_exceeded : error {
    using error::error;
};

struct size_mismatch : error {
    using error::error;
};

struct not_an_interval : error {
    using error::error;
};

struct not_common_interval : error {
    using error::error;
};

struct parse_error : error {
    using error::error;
};

struct not_non_crossing : error {
    using error::error;
};

struct not_involution : error {
    using error::error;
};

struct division_by_zero : error {
    using error::error;
};

struct singular_matrix : error {
    using error::error;
};

struct singular_gram : error {
    using error::error;
};

struct index_out_of_range : error {
    using error::error;
};

struct invalid_choice : error {
    using error::error;
};

struct outside_convergence_region : error {
    using error::error;
};

struct verification_failure : error {
    using error::error;
};

} // namespace tlwg
