#pragma once

#include <stdexcept>
#include <string>

namespace csadim {

/// An index (n, dimension, or table row) lies outside the valid domain.
class range_error : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// An argument that must be even (or match the parity of n) does not.
class parity_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured resource cap (memory, oracle size) would be exceeded.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Failure while reading or writing a table cache file.
class cache_error : public std::runtime_error {
public:
    enum class kind { io, magic, version, checksum, corrupt, locked };

    cache_error(kind k, const std::string& what) : std::runtime_error(what), kind_(k) {}

    kind code() const noexcept { return kind_; }

private:
    kind kind_;
};

} // namespace csadim
