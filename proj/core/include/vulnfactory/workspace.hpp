#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "vulnfactory/bigint.hpp"
#include "vulnfactory/census.hpp"
#include "vulnfactory/errors.hpp"

namespace vulnfactory {

/// On-disk layout of a factory workspace:
///   <root>/vuln_counter.txt, <root>/vuln_counter.lock, <root>/vuln_modules/
struct WorkspaceLayout {
    std::filesystem::path root = ".";

    [[nodiscard]] std::filesystem::path modules_dir() const { return root / "vuln_modules"; }
    [[nodiscard]] std::filesystem::path counter_file() const { return root / "vuln_counter.txt"; }
};

/// A module file for the current n already exists with different content.
class IntegrityError : public Error {
public:
    explicit IntegrityError(const std::string& message) : Error("integrity_error", message) {}
};

/// Raised when a generate run stops part way. Modules already written stay
/// written and the counter matches them.
class GenerateError : public Error {
public:
    GenerateError(const Error& cause, std::vector<std::filesystem::path> written)
        : Error(cause.code(), cause.what()), written_(std::move(written)) {}

    [[nodiscard]] const std::vector<std::filesystem::path>& written() const noexcept { return written_; }

private:
    std::vector<std::filesystem::path> written_;
};

/// Runs the factory cycle `count` times: read n, write
/// vuln_modules/vuln_module_<n>.c, increment. Each cycle holds the counter
/// lock. An existing identical file is left in place; a differing one is an
/// IntegrityError. Throws DomainError for count <= 0.
std::vector<std::filesystem::path> generate_modules(const WorkspaceLayout& layout,
                                                    const BigInt& count);

struct WorkspaceCensus {
    CensusReport report;
    std::size_t module_files = 0;
    std::vector<std::string> warnings;  // counter / module-file mismatches
};

/// Census from the counter value k. Module files are cross-checked against
/// k; disagreement becomes a warning, never an error.
[[nodiscard]] WorkspaceCensus workspace_census(const WorkspaceLayout& layout);

/// Removes the counter and the modules directory.
void reset_workspace(const WorkspaceLayout& layout);

}  // namespace vulnfactory
