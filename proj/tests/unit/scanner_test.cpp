#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <random>

#include "vulnfactory/errors.hpp"
#include "vulnfactory/factory.hpp"
#include "vulnfactory/scanner.hpp"

namespace vf = vulnfactory;

namespace {

std::string replace_once(std::string text, const std::string& from, const std::string& to) {
    const auto at = text.find(from);
    if (at == std::string::npos) {
        ADD_FAILURE() << "pattern not found: " << from;
        return text;
    }
    text.replace(at, from.size(), to);
    return text;
}

struct Mutation {
    std::string from;
    std::string to;
};

// Every literal in a rendered module that carries the module index.
std::vector<Mutation> parameter_mutations(long n, long delta) {
    const auto s = [](long v) { return std::to_string(v); };
    const long m = n + delta;
    std::vector<Mutation> out = {
        {"VULN_MODULE n=" + s(n) + " ", "VULN_MODULE n=" + s(m) + " "},
        {"\"n=" + s(n) + ";vulns=5\"", "\"n=" + s(m) + ";vulns=5\""},
        {"char buffer[" + s(16 + n) + "];", "char buffer[" + s(16 + m) + "];"},
        {"\"module " + s(n) + "\"", "\"module " + s(m) + "\""},
        {"INT_MAX - " + s(n) + ";", "INT_MAX - " + s(m) + ";"},
        {"malloc(" + s(8 + n) + ")", "malloc(" + s(8 + m) + ")"},
        {"\"echo module " + s(n) + " %s\"", "\"echo module " + s(m) + " %s\""},
    };
    for (int cwe : vf::kTemplateCwes) {
        out.push_back({vf::weakness_function_name(cwe, n) + "(", vf::weakness_function_name(cwe, m) + "("});
    }
    return out;
}

std::string fixture(const std::string& name) {
    std::ifstream in(std::string(VULNFACTORY_FIXTURE_DIR) + "/" + name, std::ios::binary);
    EXPECT_TRUE(in.good()) << name;
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST(ScanModule, RoundTripSeven) {
    const vf::ScanReport r = vf::scan_module(vf::render_module(7).source);
    ASSERT_EQ(r.findings.size(), 5u);
    EXPECT_EQ(r.manifest_n, 7);
    for (std::size_t i = 0; i < 5; ++i) {
        EXPECT_EQ(r.findings[i].cwe.id, vf::kTemplateCwes[i]);
        EXPECT_EQ(r.findings[i].recovered_n, 7);
        EXPECT_EQ(r.findings[i].name_n, 7);
    }
    EXPECT_TRUE(r.consistent);
}

TEST(ScanModule, FindingsPointAtSinks) {
    const std::string src = vf::render_module(7).source;
    const vf::ScanReport r = vf::scan_module(src);
    ASSERT_EQ(r.findings.size(), 5u);
    EXPECT_EQ(r.findings[0].evidence, "strcpy(buffer, input);");
    EXPECT_EQ(r.findings[1].evidence, "printf(input);");
    EXPECT_EQ(r.findings[2].evidence, "return threshold + value;");
    EXPECT_EQ(r.findings[3].evidence, "block[0] = input[0];");
    EXPECT_EQ(r.findings[4].evidence, "system(command);");
    EXPECT_EQ(r.findings[0].function, "vuln_121_7");

    // Line numbers are 1-based lines of the evidence.
    std::vector<std::string> lines;
    std::size_t start = 0;
    for (auto nl = src.find('\n'); nl != std::string::npos; nl = src.find('\n', start)) {
        lines.push_back(src.substr(start, nl - start));
        start = nl + 1;
    }
    for (const auto& f : r.findings) {
        ASSERT_LE(f.line, lines.size());
        EXPECT_NE(lines[f.line - 1].find(f.evidence), std::string::npos);
    }
}

TEST(ScanModule, BufferSizeRecoversFortyTwo) {
    const vf::ScanReport r = vf::scan_module(vf::render_module(42).source);
    ASSERT_FALSE(r.findings.empty());
    EXPECT_EQ(r.findings[0].cwe.id, 121);
    EXPECT_EQ(r.findings[0].recovered_n, 42);
    EXPECT_NE(r.findings[0].evidence.find("buffer"), std::string::npos);
    EXPECT_TRUE(r.consistent);
}

TEST(ScanModule, MutatedBufferSizeIsInconsistent) {
    const std::string src = replace_once(vf::render_module(3).source, "char buffer[19];", "char buffer[20];");
    const vf::ScanReport r = vf::scan_module(src);
    EXPECT_EQ(r.manifest_n, 3);
    ASSERT_EQ(r.findings.size(), 5u);
    EXPECT_EQ(r.findings[0].recovered_n, 4);
    EXPECT_FALSE(r.consistent);
}

TEST(ScanModule, BufferBelowBaseHasNoRecoverableIndex) {
    const std::string src = replace_once(vf::render_module(0).source, "char buffer[16];", "char buffer[4];");
    const vf::ScanReport r = vf::scan_module(src);
    ASSERT_EQ(r.findings.size(), 5u);
    EXPECT_FALSE(r.findings[0].recovered_n.has_value());
    EXPECT_FALSE(r.consistent);
}

TEST(ScanModule, EmptyBodyWithHeader) {
    const vf::ScanReport r = vf::scan_module("/* VULN_MODULE n=9 v=5 */\n");
    EXPECT_EQ(r.manifest_n, 9);
    EXPECT_TRUE(r.findings.empty());
    EXPECT_FALSE(r.consistent);
}

TEST(ScanModule, MissingHeaderIsFormatError) {
    EXPECT_THROW((void)vf::scan_module("int main(void) { return 0; }\n"), vf::FormatError);
    EXPECT_THROW((void)vf::scan_module(""), vf::FormatError);
    // Header must be the first line.
    EXPECT_THROW((void)vf::scan_module("\n" + vf::render_module(1).source), vf::FormatError);
    EXPECT_THROW((void)vf::scan_module("/* VULN_MODULE n=x v=5 */\n"), vf::FormatError);
}

TEST(ScanModule, MissingTemplateIsIncomplete) {
    std::string src = vf::render_module(5).source;
    src = replace_once(src, "    system(command);\n", "");
    const vf::ScanReport r = vf::scan_module(src);
    EXPECT_EQ(r.findings.size(), 4u);
    EXPECT_FALSE(r.consistent);
}

TEST(ScanModule, DuplicateTemplateIsInconsistent) {
    const std::string src = vf::render_module(5).source;
    const auto begin = src.find("/* CWE-121");
    const auto end = src.find("/* CWE-134");
    const std::string dup = src + "\n" + src.substr(begin, end - begin);
    const vf::ScanReport r = vf::scan_module(dup);
    EXPECT_EQ(r.findings.size(), 6u);
    EXPECT_FALSE(r.consistent);
}

TEST(ScanModule, BenignFixtureHasNoFindings) {
    const vf::ScanReport r = vf::scan_module(fixture("benign_module.c"));
    EXPECT_EQ(r.manifest_n, 3);
    EXPECT_TRUE(r.findings.empty());
    EXPECT_FALSE(r.consistent);
}

TEST(ScanModule, CrlfInputTolerated) {
    std::string src = vf::render_module(11).source;
    std::string crlf;
    for (char c : src) {
        if (c == '\n') {
            crlf += '\r';
        }
        crlf += c;
    }
    EXPECT_TRUE(vf::scan_module(crlf).consistent);
}

TEST(ScanModuleProperty, EverySingleLiteralMutationFlipsConsistency) {
    for (long n : {0L, 1L, 7L, 42L, 999L}) {
        const std::string src = vf::render_module(n).source;
        ASSERT_TRUE(vf::scan_module(src).consistent);
        for (long delta : {1L, -1L}) {
            if (n + delta < 0) {
                continue;
            }
            for (const Mutation& m : parameter_mutations(n, delta)) {
                const vf::ScanReport r = vf::scan_module(replace_once(src, m.from, m.to));
                EXPECT_FALSE(r.consistent) << "n=" << n << " mutation " << m.from << " -> " << m.to;
            }
        }
    }
}

TEST(ScanModuleProperty, RandomMutationsFlipConsistency) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> ndist(0, 100000);
    std::uniform_int_distribution<long> ddist(1, 50);
    for (int trial = 0; trial < 50; ++trial) {
        const long n = ndist(rng);
        const std::string src = vf::render_module(n).source;
        const auto mutations = parameter_mutations(n, ddist(rng));
        std::uniform_int_distribution<std::size_t> pick(0, mutations.size() - 1);
        const Mutation& m = mutations[pick(rng)];
        EXPECT_FALSE(vf::scan_module(replace_once(src, m.from, m.to)).consistent) << m.from;
    }
}

TEST(VerifyRoundtrip, Examples) {
    EXPECT_TRUE(vf::verify_roundtrip(0));
    EXPECT_TRUE(vf::verify_roundtrip(42));
    EXPECT_TRUE(vf::verify_roundtrip(1000));
    EXPECT_TRUE(vf::verify_roundtrip(vf::BigInt("123456789012345678901234567890")));
}
