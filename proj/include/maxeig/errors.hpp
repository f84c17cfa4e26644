#pragma once

#include <stdexcept>
#include <string>

namespace maxeig {

/// A factorization met a pivot below its threshold (or an exact zero).
class SingularMatrix : public std::runtime_error {
public:
    SingularMatrix(const std::string& what, int pivot_index)
        : std::runtime_error(what), pivot_index_(pivot_index) {}

    /// Index of the offending pivot, or -1 when the backend could not name one.
    int pivot_index() const noexcept { return pivot_index_; }

private:
    int pivot_index_;
};

/// The coarse shifted factorization stayed singular after the perturbation guard.
class CoarseSingular : public SingularMatrix {
public:
    using SingularMatrix::SingularMatrix;
};

/// A subdomain shifted factorization stayed singular after the perturbation guard.
class LocalSingular : public SingularMatrix {
public:
    LocalSingular(const std::string& what, int pivot_index, int subdomain)
        : SingularMatrix(what, pivot_index), subdomain_(subdomain) {}

    int subdomain() const noexcept { return subdomain_; }

private:
    int subdomain_;
};

/// An iterative method ran out of its iteration budget.
class NoConvergence : public std::runtime_error {
public:
    NoConvergence(const std::string& what, int iterations)
        : std::runtime_error(what), iterations_(iterations) {}

    int iterations() const noexcept { return iterations_; }

private:
    int iterations_;
};

/// Invalid user-facing configuration (CLI flags, config files, domain specs).
class ConfigError : public std::runtime_error {
public:
    enum class Kind { unknown_key, type_error, missing_required, invalid_value };

    ConfigError(Kind kind, const std::string& key, const std::string& what)
        : std::runtime_error(what), kind_(kind), key_(key) {}

    Kind kind() const noexcept { return kind_; }
    const std::string& key() const noexcept { return key_; }

private:
    Kind kind_;
    std::string key_;
};

}  // namespace maxeig
