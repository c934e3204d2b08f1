#include "vulnfactory/scanner.hpp"

#include <algorithm>
#include <map>
#include <regex>

#include "vulnfactory/errors.hpp"

namespace vulnfactory {
namespace {

struct Line {
    std::size_t number;
    std::string text;
};

struct Function {
    std::string name;
    std::vector<Line> body;
};

const std::regex& header_re() {
    static const std::regex re(R"(^/\* VULN_MODULE n=(\d+) v=5 \*/$)");
    return re;
}

// Column-0 definition header: return type, name, parameter list, no ';'.
const std::regex& function_header_re() {
    static const std::regex re(R"(^[A-Za-z_][\w\s\*]*?\b([A-Za-z_]\w*)\s*\([^;]*\)\s*\{?\s*$)");
    return re;
}

const std::regex& fixed_buffer_re() {
    static const std::regex re(R"(\bchar\s+([A-Za-z_]\w*)\s*\[\s*(\d+)\s*\]\s*;)");
    return re;
}

const std::regex& strcpy_re() {
    static const std::regex re(R"(\bstrcpy\s*\(\s*([A-Za-z_]\w*)\s*,)");
    return re;
}

const std::regex& format_sink_re() {
    static const std::regex re(
        R"(\b(?:printf\s*\(|fprintf\s*\(\s*\w+\s*,)\s*([A-Za-z_]\w*)\s*\))");
    return re;
}

const std::regex& module_context_re() {
    static const std::regex re(R"re("[^"]*\bmodule\s+(\d+)\b[^"]*")re");
    return re;
}

const std::regex& int_max_re() {
    static const std::regex re(R"(\bint\s+([A-Za-z_]\w*)\s*=\s*INT_MAX\s*-\s*(\d+)\s*;)");
    return re;
}

const std::regex& malloc_re() {
    static const std::regex re(
        R"(\b([A-Za-z_]\w*)\s*=\s*(?:\([^)]*\)\s*)?malloc\s*\(\s*(\d+)\s*\))");
    return re;
}

const std::regex& command_build_re() {
    static const std::regex re(R"re(\bsnprintf\s*\(\s*([A-Za-z_]\w*)\s*,.*"([^"]*%s[^"]*)")re");
    return re;
}

const std::regex& command_sink_re() {
    static const std::regex re(R"(\b(?:system|popen)\s*\(\s*([A-Za-z_]\w*)\s*[,)])");
    return re;
}

const std::regex& canonical_name_re() {
    static const std::regex re(R"(^vuln_(\d+)_(0|[1-9]\d*)$)");
    return re;
}

const std::regex& manifest_return_re() {
    static const std::regex re(R"re(\breturn\s+"n=(\d+);vulns=5"\s*;)re");
    return re;
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_lines(std::string_view source) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= source.size()) {
        const auto nl = source.find('\n', start);
        std::string_view line = source.substr(start, nl == std::string_view::npos ? std::string_view::npos
                                                                                   : nl - start);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        lines.emplace_back(line);
        if (nl == std::string_view::npos) {
            break;
        }
        start = nl + 1;
    }
    return lines;
}

std::vector<Function> split_functions(const std::vector<std::string>& lines) {
    std::vector<Function> out;
    int depth = 0;
    std::string pending_name;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string& text = lines[i];
        std::smatch m;
        if (depth == 0 && std::regex_match(text, m, function_header_re())) {
            pending_name = m[1];
        }
        const int opens = static_cast<int>(std::count(text.begin(), text.end(), '{'));
        const int closes = static_cast<int>(std::count(text.begin(), text.end(), '}'));
        if (depth == 0 && opens > 0) {
            out.push_back(Function{pending_name, {}});
            pending_name.clear();
        }
        if (depth > 0 || opens > 0) {
            if (!out.empty()) {
                out.back().body.push_back(Line{i + 1, text});
            }
        }
        depth = std::max(0, depth + opens - closes);
    }
    return out;
}

// Builds a regex matching `name` as a whole identifier.
std::string ident(const std::string& name) { return "\\b" + name + "\\b"; }

std::optional<BigInt> minus_base(const BigInt& value, int base) {
    if (value < base) {
        return std::nullopt;
    }
    return value - base;
}

ScanFinding make_finding(int cwe, std::optional<BigInt> n, const Line& sink, const Function& fn) {
    ScanFinding f;
    f.cwe = *find_cwe(cwe);
    f.recovered_n = std::move(n);
    f.line = sink.number;
    f.function = fn.name;
    f.evidence = trim(sink.text);
    std::smatch m;
    if (std::regex_match(fn.name, m, canonical_name_re()) && m[1].str() == std::to_string(cwe)) {
        f.name_n = parse_decimal(m[2].str());
    }
    return f;
}

void scan_stack_overflow(const Function& fn, std::vector<ScanFinding>& out) {
    std::map<std::string, BigInt> buffers;
    for (const Line& line : fn.body) {
        std::smatch m;
        if (std::regex_search(line.text, m, fixed_buffer_re())) {
            buffers[m[1]] = parse_decimal(m[2].str());
            continue;
        }
        if (std::regex_search(line.text, m, strcpy_re())) {
            auto it = buffers.find(m[1]);
            if (it != buffers.end()) {
                out.push_back(make_finding(121, minus_base(it->second, kBufferBase), line, fn));
            }
        }
    }
}

void scan_format_string(const Function& fn, std::vector<ScanFinding>& out) {
    std::optional<BigInt> context;
    const Line* sink = nullptr;
    for (const Line& line : fn.body) {
        std::smatch m;
        if (!context && std::regex_search(line.text, m, module_context_re())) {
            context = parse_decimal(m[1].str());
        }
        if (sink == nullptr && std::regex_search(line.text, m, format_sink_re())) {
            sink = &line;
        }
    }
    if (sink != nullptr) {
        out.push_back(make_finding(134, context, *sink, fn));
    }
}

void scan_integer_overflow(const Function& fn, std::vector<ScanFinding>& out) {
    std::optional<std::pair<std::string, BigInt>> threshold;
    for (const Line& line : fn.body) {
        std::smatch m;
        if (!threshold) {
            if (std::regex_search(line.text, m, int_max_re())) {
                threshold.emplace(m[1], parse_decimal(m[2].str()));
            }
            continue;
        }
        const std::string& var = threshold->first;
        const std::regex add("(" + ident(var) + R"(\s*\+[^+=])|([^+]\+\s*)" + ident(var) + ")");
        if (std::regex_search(line.text, add)) {
            out.push_back(make_finding(190, threshold->second, line, fn));
            return;
        }
    }
}

void scan_use_after_free(const Function& fn, std::vector<ScanFinding>& out) {
    std::optional<std::pair<std::string, BigInt>> block;
    bool freed = false;
    for (const Line& line : fn.body) {
        std::smatch m;
        if (!block) {
            if (std::regex_search(line.text, m, malloc_re())) {
                block.emplace(m[1], parse_decimal(m[2].str()));
            }
            continue;
        }
        const std::string& var = block->first;
        if (!freed) {
            if (std::regex_search(line.text, std::regex(R"(\bfree\s*\(\s*)" + var + R"(\s*\))"))) {
                freed = true;
            }
            continue;
        }
        const bool mentions = std::regex_search(line.text, std::regex(ident(var)));
        const bool reassigned =
            std::regex_search(line.text, std::regex(ident(var) + R"(\s*=[^=])"));
        if (mentions && !reassigned) {
            out.push_back(make_finding(416, minus_base(block->second, kAllocBase), line, fn));
            return;
        }
        if (reassigned) {
            return;
        }
    }
}

void scan_command_injection(const Function& fn, std::vector<ScanFinding>& out) {
    std::map<std::string, std::optional<BigInt>> commands;
    for (const Line& line : fn.body) {
        std::smatch m;
        if (std::regex_search(line.text, m, command_build_re())) {
            const std::string literal = "\"" + m[2].str() + "\"";
            std::smatch ctx;
            std::optional<BigInt> n;
            if (std::regex_search(literal, ctx, module_context_re())) {
                n = parse_decimal(ctx[1].str());
            }
            commands[m[1]] = n;
            continue;
        }
        if (std::regex_search(line.text, m, command_sink_re())) {
            auto it = commands.find(m[1]);
            if (it != commands.end()) {
                out.push_back(make_finding(78, it->second, line, fn));
            }
        }
    }
}

std::optional<BigInt> manifest_function_value(const std::vector<Function>& functions) {
    for (const Function& fn : functions) {
        if (fn.name != kManifestFunction) {
            continue;
        }
        for (const Line& line : fn.body) {
            std::smatch m;
            if (std::regex_search(line.text, m, manifest_return_re())) {
                return parse_decimal(m[1].str());
            }
        }
    }
    return std::nullopt;
}

bool is_consistent(const ScanReport& report) {
    if (report.findings.size() != kTemplatesPerModule) {
        return false;
    }
    for (int cwe : kTemplateCwes) {
        const auto hits = std::count_if(report.findings.begin(), report.findings.end(),
                                        [cwe](const ScanFinding& f) { return f.cwe.id == cwe; });
        if (hits != 1) {
            return false;
        }
    }
    const auto matches = [&](const std::optional<BigInt>& n) { return n && *n == report.manifest_n; };
    return matches(report.manifest_function_n) &&
           std::all_of(report.findings.begin(), report.findings.end(), [&](const ScanFinding& f) {
               return matches(f.recovered_n) && matches(f.name_n);
           });
}

}  // namespace

ScanReport scan_module(std::string_view source) {
    if (source.empty()) {
        throw FormatError("empty module source");
    }
    const std::vector<std::string> lines = split_lines(source);
    std::smatch header;
    if (!std::regex_match(lines.front(), header, header_re())) {
        throw FormatError("line 1 is not a VULN_MODULE manifest header");
    }

    ScanReport report;
    report.manifest_n = parse_decimal(header[1].str());

    const std::vector<Function> functions = split_functions(lines);
    report.manifest_function_n = manifest_function_value(functions);
    for (const Function& fn : functions) {
        scan_stack_overflow(fn, report.findings);
        scan_format_string(fn, report.findings);
        scan_integer_overflow(fn, report.findings);
        scan_use_after_free(fn, report.findings);
        scan_command_injection(fn, report.findings);
    }
    std::sort(report.findings.begin(), report.findings.end(),
              [](const ScanFinding& a, const ScanFinding& b) { return a.line < b.line; });
    report.consistent = is_consistent(report);
    return report;
}

bool verify_roundtrip(const BigInt& n) { return scan_module(render_module(n).source).consistent; }

}  // namespace vulnfactory
