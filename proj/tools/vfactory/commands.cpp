#include "commands.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "vulnfactory/abundance.hpp"
#include "vulnfactory/bigint.hpp"
#include "vulnfactory/census.hpp"
#include "vulnfactory/errors.hpp"
#include "vulnfactory/json_io.hpp"
#include "vulnfactory/model_checker.hpp"
#include "vulnfactory/scanner.hpp"
#include "vulnfactory/tm_model.hpp"
#include "vulnfactory/workspace.hpp"

namespace vfactory {
namespace vf = vulnfactory;
using nlohmann::ordered_json;

namespace {

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw vf::PersistenceError("cannot read '" + path + "'");
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

vf::BigInt parse_count(const std::string& text, const char* what) {
    if (!vf::is_decimal(text)) {
        throw vf::DomainError(std::string(what) + " must be a non-negative decimal integer, got '" + text + "'");
    }
    return vf::parse_decimal(text);
}

struct Options {
    std::string workspace = ".";
    std::string count = "1";
    std::string bound;
    std::string scan_path;
    std::string input;
    double abundance = 0.0;
    double deployment = 0.0;
    double p_exploit = 0.0;
    double target = 0.0;
    std::size_t invocations = 1;
    unsigned long cwes = 1447;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Deterministic vulnerability factory toolkit", "vfactory"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("-w,--workspace", opt.workspace, "Workspace root holding vuln_counter.txt and vuln_modules/");

    auto* generate = app.add_subcommand("generate", "Emit the next module(s) and advance the counter");
    generate->add_option("--count", opt.count, "Number of factory cycles")->capture_default_str();

    auto* census = app.add_subcommand("census", "Vulnerability census of the workspace");

    auto* check = app.add_subcommand("check", "Refute AG(|V| <= C) with a counterexample trace");
    check->add_option("--bound", opt.bound, "Bound C")->required();

    auto* scan = app.add_subcommand("scan", "Scan a module source for the seeded weakness patterns");
    scan->add_option("file", opt.scan_path, "Module source file")->required();

    auto* abundance = app.add_subcommand("abundance", "Abundance table from CWE counts");
    abundance->add_option("--input", opt.input, "Counts JSON document")->required();

    auto* exposure = app.add_subcommand("exposure", "Exploitation exposure A * D * P");
    exposure->add_option("--abundance", opt.abundance, "A(t_v)")->required();
    exposure->add_option("--deployment", opt.deployment, "D(s)")->required();
    exposure->add_option("--pexploit", opt.p_exploit, "P_exploit(v)")->required();

    auto* saturate = app.add_subcommand("saturate", "Fewest exploits reaching a deployment coverage target");
    saturate->add_option("--input", opt.input, "Shares JSON document")->required();
    saturate->add_option("--target", opt.target, "Coverage target in [0, 1]")->required();

    auto* tm_run = app.add_subcommand("tm-run", "Run the factory Turing machine from a fresh counter tape");
    tm_run->add_option("--invocations", opt.invocations, "Number of invocations")->capture_default_str();

    auto* fermi = app.add_subcommand("fermi", "Count of possible factories, 2^cwes");
    fermi->add_option("--cwes", opt.cwes, "Number of CWE classes")->capture_default_str();

    auto* reset = app.add_subcommand("reset", "Delete the counter and all generated modules");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        out << vf::json::error("usage_error", e.what()) << '\n';
        return 2;
    }

    const vf::WorkspaceLayout layout{opt.workspace};
    try {
        if (generate->parsed()) {
            const vf::BigInt count = parse_count(opt.count, "--count");
            ordered_json j;
            j["paths"] = ordered_json::array();
            try {
                for (const auto& p : vf::generate_modules(layout, count)) {
                    j["paths"].push_back(p.string());
                }
            } catch (const vf::GenerateError& e) {
                ordered_json fail;
                fail["error"] = e.code();
                fail["message"] = e.what();
                fail["written"] = ordered_json::array();
                for (const auto& p : e.written()) {
                    fail["written"].push_back(p.string());
                }
                err << "generate stopped after " << e.written().size() << " module(s): " << e.what() << '\n';
                out << fail.dump() << '\n';
                return 1;
            }
            out << j.dump() << '\n';
        } else if (census->parsed()) {
            const vf::WorkspaceCensus c = vf::workspace_census(layout);
            for (const auto& w : c.warnings) {
                err << "warning: workspace integrity: " << w << '\n';
            }
            out << vf::json::census(c.report) << '\n';
        } else if (check->parsed()) {
            out << vf::json::verdict(vf::check_bound(parse_count(opt.bound, "--bound"))) << '\n';
        } else if (scan->parsed()) {
            out << vf::json::scan_report(vf::scan_module(read_text(opt.scan_path))) << '\n';
        } else if (abundance->parsed()) {
            const auto doc = vf::json::parse_counts(read_text(opt.input));
            out << vf::json::abundance(vf::compute_abundance(doc.counts, doc.label)) << '\n';
        } else if (exposure->parsed()) {
            ordered_json j;
            j["exposure"] = vf::exposure({opt.abundance, opt.deployment, opt.p_exploit});
            out << j.dump() << '\n';
        } else if (saturate->parsed()) {
            const vf::DeploymentProfile profile = vf::json::parse_shares(read_text(opt.input));
            for (const auto& w : profile.validate()) {
                err << "warning: " << w << '\n';
            }
            const vf::CoverageResult r = vf::min_exploits_for_coverage(profile, opt.target);
            ordered_json j;
            j["target"] = opt.target;
            j["reachable"] = r.reachable;
            j["count"] = r.reachable ? ordered_json(r.count) : ordered_json(nullptr);
            j["selected"] = r.selected;
            out << j.dump() << '\n';
        } else if (tm_run->parsed()) {
            vf::TmState state;
            ordered_json j;
            j["invocations"] = opt.invocations;
            j["emissions"] = ordered_json::array();
            for (std::size_t i = 0; i < opt.invocations; ++i) {
                vf::Invocation inv = vf::tm_invoke(state);
                j["emissions"].push_back(ordered_json::parse(vf::json::emission(vf::summarize(inv.emission))));
                state = std::move(inv.state);
            }
            j["counter_tape"] = state.counter_tape;
            out << j.dump() << '\n';
        } else if (fermi->parsed()) {
            const vf::BigInt value = vf::fermi_factory_count(opt.cwes);
            const vf::ScientificForm sci = vf::scientific(value);
            std::ostringstream approx;
            approx.precision(2);
            approx << std::fixed << sci.mantissa << "e" << sci.exponent;
            ordered_json j;
            j["cwes"] = opt.cwes;
            j["digits"] = vf::decimal_digits(value);
            j["approx"] = approx.str();
            j["value"] = vf::to_decimal(value);
            out << j.dump() << '\n';
        } else if (reset->parsed()) {
            vf::reset_workspace(layout);
            out << ordered_json{{"reset", true}, {"workspace", opt.workspace}}.dump() << '\n';
        }
    } catch (const vf::Error& e) {
        err << "error: " << e.what() << '\n';
        out << vf::json::error(e.code(), e.what()) << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        out << vf::json::error("internal_error", e.what()) << '\n';
        return 1;
    }
    return 0;
}

}  // namespace vfactory
