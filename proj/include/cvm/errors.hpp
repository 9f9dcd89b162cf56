#ifndef CVM_ERRORS_HPP
#define CVM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cvm {

/// Base class for all errors thrown by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A root specification violates its invariants (duplicate roots,
/// non-positive multiplicity, empty root list).
class invalid_spec_error : public error {
public:
    explicit invalid_spec_error(const std::string& msg) : error(msg) {}
};

/// Operands have incompatible shapes (matrix products, right-hand sides,
/// jagged derivative tables).
class dimension_error : public error {
public:
    explicit dimension_error(const std::string& msg) : error(msg) {}
};

/// Elimination met a pivot that is zero to working precision.
class singular_matrix_error : public error {
public:
    explicit singular_matrix_error(const std::string& msg) : error(msg) {}
};

/// A file could not be opened, read, or written.
class io_error : public error {
public:
    explicit io_error(const std::string& msg) : error(msg) {}
};

} // namespace cvm

#endif // CVM_ERRORS_HPP
