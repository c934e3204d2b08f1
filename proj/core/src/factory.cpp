#include "vulnfactory/factory.hpp"

#include <algorithm>
#include <sstream>

#include "vulnfactory/errors.hpp"

namespace vulnfactory {
namespace {

constexpr std::array<CweClass, 11> kCatalog = {{
    {121, "Stack Buffer Overflow"},
    {122, "Heap Buffer Overflow"},
    {134, "Format String"},
    {190, "Integer Overflow"},
    {416, "Use After Free"},
    {415, "Double Free"},
    {78, "OS Command Injection"},
    {367, "TOCTOU Race"},
    {476, "NULL Pointer Dereference"},
    {457, "Uninitialised Variable"},
    {22, "Path Traversal"},
}};

CweClass catalog_entry(int id) {
    auto found = find_cwe(id);
    if (!found) {
        throw DomainError("CWE-" + std::to_string(id) + " is not in the catalog");
    }
    return *found;
}

// Emission template. Each weakness function contains exactly one
// parameterised literal; the scanner keys on these shapes.
void emit_module(std::ostream& out, const ParamSet& p) {
    const std::string n = to_decimal(p.n);

    out << manifest_header(p.n) << '\n'
        << "/*\n"
        << " * Generated weakness module " << n << ".\n"
        << " * Intentionally unsafe code for vulnerability research. Never link into\n"
        << " * production software and never execute outside an isolated sandbox.\n"
        << " */\n"
        << "#include <limits.h>\n"
        << "#include <stdio.h>\n"
        << "#include <stdlib.h>\n"
        << "#include <string.h>\n"
        << '\n'
        << "const char *" << kManifestFunction << "(void)\n"
        << "{\n"
        << "    return \"" << manifest_string(p.n) << "\";\n"
        << "}\n"
        << '\n'
        << "/* CWE-121: stack-based buffer overflow */\n"
        << "void " << weakness_function_name(121, p.n) << "(const char *input)\n"
        << "{\n"
        << "    char buffer[" << to_decimal(p.buffer_size) << "];\n"
        << "    strcpy(buffer, input);\n"
        << "    puts(buffer);\n"
        << "}\n"
        << '\n'
        << "/* CWE-134: externally controlled format string */\n"
        << "void " << weakness_function_name(134, p.n) << "(const char *input)\n"
        << "{\n"
        << "    static const char context[] = \"module " << to_decimal(p.format_context) << "\";\n"
        << "    fputs(context, stdout);\n"
        << "    printf(input);\n"
        << "}\n"
        << '\n'
        << "/* CWE-190: integer overflow */\n"
        << "int " << weakness_function_name(190, p.n) << "(int value)\n"
        << "{\n"
        << "    int threshold = INT_MAX - " << to_decimal(p.overflow_offset) << ";\n"
        << "    return threshold + value;\n"
        << "}\n"
        << '\n'
        << "/* CWE-416: use after free */\n"
        << "void " << weakness_function_name(416, p.n) << "(const char *input)\n"
        << "{\n"
        << "    char *block = malloc(" << to_decimal(p.alloc_size) << ");\n"
        << "    if (block == NULL)\n"
        << "        return;\n"
        << "    free(block);\n"
        << "    block[0] = input[0];\n"
        << "}\n"
        << '\n'
        << "/* CWE-78: OS command injection */\n"
        << "void " << weakness_function_name(78, p.n) << "(const char *input)\n"
        << "{\n"
        << "    char command[256];\n"
        << "    snprintf(command, sizeof command, \"echo module "
        << to_decimal(p.injection_context) << " %s\", input);\n"
        << "    system(command);\n"
        << "}\n";
}

}  // namespace

std::span<const CweClass, 11> cwe_catalog() noexcept { return kCatalog; }

std::optional<CweClass> find_cwe(int id) noexcept {
    auto it = std::find_if(kCatalog.begin(), kCatalog.end(),
                           [id](const CweClass& c) { return c.id == id; });
    if (it == kCatalog.end()) {
        return std::nullopt;
    }
    return *it;
}

std::optional<int> template_slot(int cwe_id) noexcept {
    auto it = std::find(kTemplateCwes.begin(), kTemplateCwes.end(), cwe_id);
    if (it == kTemplateCwes.end()) {
        return std::nullopt;
    }
    return static_cast<int>(it - kTemplateCwes.begin()) + 1;
}

ParamSet ParamSet::for_module(const BigInt& n) {
    if (n < 0) {
        throw DomainError("module index must be non-negative");
    }
    return ParamSet{n, n + kBufferBase, n, n, n + kAllocBase, n};
}

const BigInt& ParamSet::slot_value(int slot) const {
    switch (slot) {
        case 1: return buffer_size;
        case 2: return format_context;
        case 3: return overflow_offset;
        case 4: return alloc_size;
        case 5: return injection_context;
        default: throw DomainError("template slot must be in 1..5, got " + std::to_string(slot));
    }
}

std::string to_string(const VulnId& id) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, BaseVulnId>) {
                return "b" + std::to_string(v.base_index);
            } else {
                return "v_{" + to_decimal(v.module_index) + "," + std::to_string(v.template_index) + "}";
            }
        },
        id);
}

ComponentId component_for_module(const BigInt& n) { return {"vuln_module_" + to_decimal(n)}; }

std::string module_file_name(const BigInt& n) { return "vuln_module_" + to_decimal(n) + ".c"; }

std::string weakness_function_name(int cwe_id, const BigInt& n) {
    return "vuln_" + std::to_string(cwe_id) + "_" + to_decimal(n);
}

std::string manifest_string(const BigInt& n) { return "n=" + to_decimal(n) + ";vulns=5"; }

std::string manifest_header(const BigInt& n) { return "/* VULN_MODULE n=" + to_decimal(n) + " v=5 */"; }

std::array<Vulnerability, kTemplatesPerModule> module_vulnerabilities(const BigInt& n) {
    const ParamSet params = ParamSet::for_module(n);
    const ComponentId component = component_for_module(n);
    const std::string file = module_file_name(n);

    std::array<Vulnerability, kTemplatesPerModule> out;
    for (std::size_t i = 0; i < kTemplatesPerModule; ++i) {
        const int cwe = kTemplateCwes[i];
        out[i] = Vulnerability{GeneratedVulnId{n, static_cast<int>(i) + 1}, component,
                               catalog_entry(cwe), params,
                               SourceLocation{file, weakness_function_name(cwe, n)}};
    }
    return out;
}

ModuleSpec render_module(const BigInt& n) {
    const ParamSet params = ParamSet::for_module(n);
    std::ostringstream out;
    emit_module(out, params);
    return ModuleSpec{n, component_for_module(n), module_vulnerabilities(n), out.str(),
                      module_file_name(n)};
}

std::string base_file_name(int base_index) {
    if (base_index < 1 || base_index > static_cast<int>(kBaseSetSize)) {
        throw DomainError("base index must be in 1..11, got " + std::to_string(base_index));
    }
    return "base_set/cwe_" + std::to_string(kCatalog[base_index - 1].id) + ".c";
}

std::vector<Vulnerability> base_catalog() {
    std::vector<Vulnerability> out;
    out.reserve(kBaseSetSize);
    for (int j = 1; j <= static_cast<int>(kBaseSetSize); ++j) {
        const CweClass& cwe = kCatalog[j - 1];
        out.push_back(Vulnerability{BaseVulnId{j}, ComponentId{std::string(kBaseComponent)}, cwe,
                                    std::nullopt,
                                    SourceLocation{base_file_name(j), "base_cwe_" + std::to_string(cwe.id)}});
    }
    return out;
}

}  // namespace vulnfactory
