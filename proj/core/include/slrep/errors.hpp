#ifndef SLREP_ERRORS_HPP
#define SLREP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace slrep {

// Error taxonomy used across the library and reflected in CLI exit codes:
//   domain_error        -- a caller violated a precondition (exit 1)
//   inconsistency_error -- a property that must hold by theorem failed;
//                          always indicates a bug somewhere (exit 1)
//   resource_error      -- an explicit cap (closure size, retries,
//                          rationalization variables) was exceeded (exit 2)

class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

class inconsistency_error : public std::runtime_error {
public:
    explicit inconsistency_error(const std::string& what) : std::runtime_error(what) {}
};

class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace slrep

#endif
