#include "vulnfactory/workspace.hpp"

#include <fstream>
#include <iterator>
#include <regex>
#include <system_error>

#include "vulnfactory/counter_store.hpp"
#include "vulnfactory/factory.hpp"

namespace vulnfactory {
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) {
        throw PersistenceError("cannot read '" + p.string() + "'");
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void ensure_directory(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw PersistenceError("cannot create '" + dir.string() + "': " + ec.message());
    }
}

fs::path generate_one(const WorkspaceLayout& layout) {
    const CounterLock lock(layout.counter_file());
    const BigInt n = read_counter(layout.counter_file());
    const ModuleSpec module = render_module(n);
    const fs::path target = layout.modules_dir() / module.file_name;

    std::error_code ec;
    if (fs::exists(target, ec)) {
        if (slurp(target) != module.source) {
            throw IntegrityError("'" + target.string() +
                                 "' exists with content that does not match module " + to_decimal(n));
        }
    } else {
        write_file_atomically(target, module.source);
    }
    increment_counter(lock);
    return target;
}

}  // namespace

std::vector<fs::path> generate_modules(const WorkspaceLayout& layout, const BigInt& count) {
    if (count <= 0) {
        throw DomainError("generate count must be positive");
    }
    ensure_directory(layout.root);
    ensure_directory(layout.modules_dir());

    std::vector<fs::path> written;
    for (BigInt i = 0; i < count; ++i) {
        try {
            written.push_back(generate_one(layout));
        } catch (const Error& e) {
            throw GenerateError(e, std::move(written));
        }
    }
    return written;
}

WorkspaceCensus workspace_census(const WorkspaceLayout& layout) {
    WorkspaceCensus result;
    const BigInt k = read_counter(layout.counter_file());
    result.report = census_after(k);

    static const std::regex module_name(R"(^vuln_module_(0|[1-9]\d*)\.c$)");
    std::error_code ec;
    if (fs::is_directory(layout.modules_dir(), ec)) {
        for (const auto& entry : fs::directory_iterator(layout.modules_dir())) {
            std::smatch m;
            const std::string name = entry.path().filename().string();
            if (!std::regex_match(name, m, module_name)) {
                continue;
            }
            ++result.module_files;
            if (parse_decimal(m[1].str()) >= k) {
                result.warnings.push_back("module file " + name + " is at or beyond counter value " +
                                          to_decimal(k));
            }
        }
    }
    if (BigInt(result.module_files) != k) {
        result.warnings.push_back("counter value " + to_decimal(k) + " but " +
                                  std::to_string(result.module_files) + " module files present");
    }
    return result;
}

void reset_workspace(const WorkspaceLayout& layout) {
    std::error_code ec;
    if (!fs::exists(layout.root, ec)) {
        return;
    }
    const CounterLock lock(layout.counter_file());
    reset_counter(lock);
    fs::remove_all(layout.modules_dir(), ec);
    if (ec) {
        throw PersistenceError("cannot remove '" + layout.modules_dir().string() + "': " + ec.message());
    }
}

}  // namespace vulnfactory
