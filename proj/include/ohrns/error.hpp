#ifndef OHRNS_ERROR_HPP
#define OHRNS_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ohrns {

using i64 = std::int64_t;

// Every domain failure carries a stable name ("NonCoprime", "Unroutable", ...)
// so callers can dispatch without string-matching the human-readable text.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

} // namespace ohrns

#endif
