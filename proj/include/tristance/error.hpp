#pragma once

#include <stdexcept>
#include <string>

namespace tristance {

// Every recoverable failure carries a short machine code so the CLI and the
// HTTP layer can report it without parsing messages.
class DomainError : public std::domain_error {
public:
    DomainError(std::string code, const std::string& what)
        : std::domain_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class BudgetError : public DomainError {
public:
    explicit BudgetError(const std::string& what) : DomainError("budget", what) {}
};

}  // namespace tristance
