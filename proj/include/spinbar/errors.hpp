#pragma once

#include <stdexcept>
#include <string>

namespace spinbar {

/* Inputs that violate a documented precondition. */
struct order_mismatch_error : std::invalid_argument {
    explicit order_mismatch_error(const std::string& what) : std::invalid_argument(what) {}
};

struct invalid_inverse_error : std::invalid_argument {
    explicit invalid_inverse_error(const std::string& what) : std::invalid_argument(what) {}
};

struct invalid_prime_error : std::invalid_argument {
    explicit invalid_prime_error(const std::string& what) : std::invalid_argument(what) {}
};

struct invalid_abacus_error : std::invalid_argument {
    explicit invalid_abacus_error(const std::string& what) : std::invalid_argument(what) {}
};

struct wrong_residue_class_error : std::invalid_argument {
    explicit wrong_residue_class_error(const std::string& what) : std::invalid_argument(what) {}
};

struct ill_formed_specialization_error : std::invalid_argument {
    explicit ill_formed_specialization_error(const std::string& what) : std::invalid_argument(what) {}
};

/* An internal exactness assertion failed (odd coefficient where an even one
 * was required, a non-exact division, two closed forms disagreeing).  These
 * signal a formula transcription bug, never bad user input. */
struct exactness_error : std::logic_error {
    explicit exactness_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace spinbar
