#pragma once

#include <stdexcept>
#include <string>

namespace goldbach {

enum class ErrorKind {
    domain,
    cap_exceeded,
    index_out_of_range,
    not_both_prime,
    partner_composite,
};

/// Base of every error raised by the library. The kind decides the CLI exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(ErrorKind::domain, what) {}
};

struct CapExceeded : Error {
    explicit CapExceeded(const std::string& what) : Error(ErrorKind::cap_exceeded, what) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error(ErrorKind::index_out_of_range, what) {}
};

struct NotBothPrime : Error {
    explicit NotBothPrime(const std::string& what) : Error(ErrorKind::not_both_prime, what) {}
};

struct PartnerComposite : Error {
    explicit PartnerComposite(const std::string& what) : Error(ErrorKind::partner_composite, what) {}
};

} // namespace goldbach
