#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace specgraph {

// Exit-code taxonomy used by the CLI: input 2, validity/construction 3, capacity 4.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class input_error : public error {
public:
    using error::error;
};

// Malformed textual input; offset is the byte position of the first bad byte.
class parse_error : public input_error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : input_error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class validity_error : public error {
public:
    using error::error;
};

class construction_error : public error {
public:
    construction_error(const std::string& what, std::string failed_check)
        : error(what + " [check: " + failed_check + "]"), failed_check_(std::move(failed_check)) {}
    const std::string& failed_check() const noexcept { return failed_check_; }

private:
    std::string failed_check_;
};

class capacity_error : public error {
public:
    using error::error;
};

} // namespace specgraph
