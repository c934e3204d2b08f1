#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vulnfactory/bigint.hpp"

namespace vulnfactory {

/// One of the eleven weakness classes the factory knows about.
struct CweClass {
    int id = 0;
    std::string_view name;

    friend bool operator==(const CweClass& a, const CweClass& b) noexcept { return a.id == b.id; }
};

/// The closed catalog, in base-set order b1..b11.
[[nodiscard]] std::span<const CweClass, 11> cwe_catalog() noexcept;

/// Catalog lookup; nullopt for ids outside the closed set.
[[nodiscard]] std::optional<CweClass> find_cwe(int id) noexcept;

/// CWE ids of the five templates, in emission order (slot 1..5).
inline constexpr std::array<int, 5> kTemplateCwes = {121, 134, 190, 416, 78};
inline constexpr std::size_t kTemplatesPerModule = kTemplateCwes.size();
inline constexpr std::size_t kBaseSetSize = 11;

/// Template slot (1-based) for a template CWE id, nullopt otherwise.
[[nodiscard]] std::optional<int> template_slot(int cwe_id) noexcept;

/// Parameterisation of module n. Every field is a pure function of n.
struct ParamSet {
    BigInt n;
    BigInt buffer_size;        // 16 + n
    BigInt format_context;     // n
    BigInt overflow_offset;    // n, emitted as INT_MAX - n
    BigInt alloc_size;         // 8 + n
    BigInt injection_context;  // n

    [[nodiscard]] static ParamSet for_module(const BigInt& n);

    /// Value of the field that parameterises template `slot` (1..5).
    [[nodiscard]] const BigInt& slot_value(int slot) const;

    friend bool operator==(const ParamSet&, const ParamSet&) = default;
};

inline constexpr int kBufferBase = 16;
inline constexpr int kAllocBase = 8;

struct BaseVulnId {
    int base_index = 0;  // 1..11
    friend auto operator<=>(const BaseVulnId&, const BaseVulnId&) = default;
};

struct GeneratedVulnId {
    BigInt module_index;
    int template_index = 0;  // 1..5
    friend bool operator==(const GeneratedVulnId&, const GeneratedVulnId&) = default;
};

/// Either b_j or v_{n,i}; the variant guarantees exactly one shape.
using VulnId = std::variant<BaseVulnId, GeneratedVulnId>;

[[nodiscard]] std::string to_string(const VulnId& id);

struct ComponentId {
    std::string name;
    friend bool operator==(const ComponentId&, const ComponentId&) = default;
    friend auto operator<=>(const ComponentId&, const ComponentId&) = default;
};

inline constexpr std::string_view kBaseComponent = "base";

[[nodiscard]] ComponentId component_for_module(const BigInt& n);

/// "vuln_module_<n>.c"
[[nodiscard]] std::string module_file_name(const BigInt& n);

/// Where the weakness lives in source: file relative to the workspace and
/// the function that carries it.
struct SourceLocation {
    std::string file;
    std::string function;
    friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
};

/// (component, CWE class, parameters). Base entries carry no ParamSet.
struct Vulnerability {
    VulnId id;
    ComponentId component;
    CweClass cwe;
    std::optional<ParamSet> params;
    SourceLocation location;
};

/// Canonical weakness function name in module n: vuln_<cwe>_<n>.
[[nodiscard]] std::string weakness_function_name(int cwe_id, const BigInt& n);

inline constexpr std::string_view kManifestFunction = "vuln_module_manifest";

/// "n=<n>;vulns=5", returned by the emitted manifest function.
[[nodiscard]] std::string manifest_string(const BigInt& n);

/// "/* VULN_MODULE n=<n> v=5 */"
[[nodiscard]] std::string manifest_header(const BigInt& n);

struct ModuleSpec {
    BigInt n;
    ComponentId component;
    std::array<Vulnerability, kTemplatesPerModule> vulns;
    std::string source;
    std::string file_name;
};

/// The five generated vulnerabilities of module n without rendering text.
[[nodiscard]] std::array<Vulnerability, kTemplatesPerModule> module_vulnerabilities(const BigInt& n);

/// Renders module n. Byte-identical for equal n; ASCII with LF endings.
/// Throws DomainError for negative n.
[[nodiscard]] ModuleSpec render_module(const BigInt& n);

/// The eleven base-set entries b1..b11 (metadata only).
[[nodiscard]] std::vector<Vulnerability> base_catalog();

/// Relative path of base entry b_j in the executable base corpus.
[[nodiscard]] std::string base_file_name(int base_index);

}  // namespace vulnfactory
