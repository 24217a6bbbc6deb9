#pragma once

#include <stdexcept>
#include <string>

namespace frontal
{

// Every recoverable failure carries a short machine-readable kind
// (e.g. "NoStabilization") next to the human-readable message.
class error : public std::runtime_error
{
public:
    error(std::string kind, const std::string &detail)
        : std::runtime_error(detail), kind_(std::move(kind))
    {
    }

    const std::string &kind() const noexcept
    {
        return kind_;
    }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const std::string &kind, const std::string &detail)
{
    throw error(kind, kind + ": " + detail);
}

} // namespace frontal
