#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace jamguard {

/// Configuration rejected. Carries every issue found, not just the first;
/// what() joins them with newlines.
class config_error : public std::runtime_error {
public:
    explicit config_error(std::vector<std::string> issues)
        : std::runtime_error(join(issues)), issues_(std::move(issues)) {}

    explicit config_error(std::string issue)
        : config_error(std::vector<std::string>{std::move(issue)}) {}

    const std::vector<std::string>& issues() const { return issues_; }

private:
    static std::string join(const std::vector<std::string>& issues) {
        std::string out;
        for (const auto& s : issues) {
            if (!out.empty()) {
                out += '\n';
            }
            out += s;
        }
        return out;
    }

    std::vector<std::string> issues_;
};

} // namespace jamguard
