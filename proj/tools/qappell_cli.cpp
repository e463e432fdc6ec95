// qappell command-line front end. Talks to the library only through the C API.

#include "qappell/qappell.h"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string family;
    std::optional<std::string> a, alpha, beta, lambda, q;
    int max_degree = 8;
    std::string format;
    std::string theorem = "all";
    std::uint64_t seed = 0;
    std::string input;
    std::string out;
};

struct UsageError {
    std::string message;
};

using FamilyPtr = std::unique_ptr<qa_family, decltype(&qa_family_free)>;
using MomentsPtr = std::unique_ptr<qa_moments, decltype(&qa_moments_free)>;

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { qa_string_free(ptr); }
};

// Library messages about a parameter start with its name; point at the flag.
void check(qa_status status) {
    if (status == QA_OK) return;
    std::string message = qa_last_error();
    for (const char* name : {"a", "alpha", "beta", "lambda", "q"}) {
        if (message.rfind(std::string(name) + ": ", 0) == 0) {
            message = "--" + message;
            break;
        }
    }
    throw UsageError{message};
}

const CLI::Validator& rational_validator() {
    static const CLI::Validator v(
        [](std::string& s) -> std::string {
            std::size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
            const auto slash = s.find('/', i);
            auto digits = [&](std::size_t from, std::size_t to) {
                if (from >= to) return false;
                for (std::size_t k = from; k < to; ++k) {
                    if (s[k] < '0' || s[k] > '9') return false;
                }
                return true;
            };
            const bool ok = slash == std::string::npos
                                ? digits(i, s.size())
                                : digits(i, slash) && digits(slash + 1, s.size());
            return ok ? std::string{} : "expected an integer or p/q rational, got '" + s + "'";
        },
        "RATIONAL");
    return v;
}

void add_family_options(CLI::App* cmd, Options& opt, bool with_theorem) {
    cmd->add_option("--family", opt.family, "asc, scaled or quasi")
        ->check(CLI::IsMember({"asc", "scaled", "quasi"}));
    cmd->add_option("--a", opt.a, "Al-Salam--Carlitz parameter a")->check(rational_validator());
    cmd->add_option("--alpha", opt.alpha, "alpha")->check(rational_validator());
    cmd->add_option("--beta", opt.beta, "beta")->check(rational_validator());
    cmd->add_option("--lambda", opt.lambda, "connection parameter lambda")
        ->check(rational_validator());
    cmd->add_option("--q", opt.q, "base q, not 0 or +-1")->check(rational_validator());
    cmd->add_option("--max-degree", opt.max_degree, "largest index N (<= 64)")
        ->check(CLI::Range(0, QA_MAX_DEGREE));
    cmd->add_option("--format", opt.format, "json, csv or latex (default $QAPPELL_FORMAT or json)")
        ->check(CLI::IsMember({"json", "csv", "latex"}));
    cmd->add_option("--out", opt.out, "write output to FILE instead of stdout");
    if (with_theorem) {
        cmd->add_option("--theorem", opt.theorem, "appell, quasi, rec31, rieszchihara or all")
            ->check(CLI::IsMember({"appell", "quasi", "rec31", "rieszchihara", "all"}));
        cmd->add_option("--seed", opt.seed, "seed for the spot-check evaluation points");
    }
    cmd->add_option("--input", opt.input, "read the family from a JSON file")
        ->check(CLI::ExistingFile);
}

const char* require(const std::optional<std::string>& value, const char* flag,
                    const std::string& family) {
    if (!value) throw UsageError{std::string(flag) + " is required for --family " + family};
    return value->c_str();
}

FamilyPtr make_family(const Options& opt) {
    qa_family* raw = nullptr;
    if (!opt.input.empty()) {
        if (!opt.family.empty()) throw UsageError{"--input and --family are exclusive"};
        std::ifstream in(opt.input);
        std::stringstream buf;
        buf << in.rdbuf();
        check(qa_family_from_json(buf.str().c_str(), &raw));
        return FamilyPtr(raw, &qa_family_free);
    }
    if (opt.family.empty()) throw UsageError{"--family or --input is required"};
    const std::string& f = opt.family;
    if (f == "asc") {
        check(qa_family_new_asc(require(opt.a, "--a", f), require(opt.q, "--q", f),
                                opt.max_degree, &raw));
    } else if (f == "scaled") {
        check(qa_family_new_scaled(require(opt.alpha, "--alpha", f),
                                   require(opt.beta, "--beta", f), require(opt.q, "--q", f),
                                   opt.max_degree, &raw));
    } else {
        check(qa_family_new_quasi(require(opt.alpha, "--alpha", f),
                                  require(opt.beta, "--beta", f),
                                  require(opt.lambda, "--lambda", f), require(opt.q, "--q", f),
                                  opt.max_degree, &raw));
    }
    return FamilyPtr(raw, &qa_family_free);
}

qa_format resolve_format(const std::string& flag) {
    std::string name = flag;
    if (name.empty()) {
        const char* env = std::getenv("QAPPELL_FORMAT");
        name = (env != nullptr && *env != '\0') ? env : "json";
    }
    static const std::map<std::string, qa_format> formats{
        {"json", QA_FORMAT_JSON}, {"csv", QA_FORMAT_CSV}, {"latex", QA_FORMAT_LATEX}};
    const auto it = formats.find(name);
    if (it == formats.end()) throw UsageError{"QAPPELL_FORMAT: unknown format '" + name + "'"};
    return it->second;
}

unsigned theorem_mask(const std::string& theorem) {
    if (theorem == "appell") return QA_CHECK_APPELL;
    if (theorem == "quasi") return QA_CHECK_QUASI;
    if (theorem == "rec31") return QA_CHECK_REC31;
    if (theorem == "rieszchihara") return QA_CHECK_RIESZ_CHIHARA;
    return QA_CHECK_ALL;
}

void emit(const Options& opt, const char* text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.out, std::ios::binary);
    if (!out) throw UsageError{"--out: cannot open '" + opt.out + "'"};
    out << text;
}

int run_gen(const Options& opt) {
    const auto family = make_family(opt);
    OwnedString text;
    check(qa_family_render(family.get(), resolve_format(opt.format), &text.ptr));
    emit(opt, text.ptr);
    return kExitPass;
}

int run_moments(const Options& opt) {
    const auto family = make_family(opt);
    std::size_t size = 0;
    check(qa_family_size(family.get(), &size));
    const std::size_t n = size - 1;
    // mu_0 .. mu_{2N-1}
    const std::size_t count = n == 0 ? 1 : 2 * n;
    qa_moments* raw = nullptr;
    check(qa_moments_new(family.get(), count, &raw));
    const MomentsPtr moments(raw, &qa_moments_free);
    OwnedString text;
    check(qa_moments_render(moments.get(), resolve_format(opt.format), &text.ptr));
    emit(opt, text.ptr);
    return kExitPass;
}

int run_verify(const Options& opt) {
    const auto family = make_family(opt);
    OwnedString text;
    int pass = 0;
    check(qa_verify(family.get(), theorem_mask(opt.theorem), opt.seed,
                    resolve_format(opt.format), &text.ptr, &pass));
    emit(opt, text.ptr);
    return pass != 0 ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact q-Appell and quasi-orthogonal polynomial families"};
    app.require_subcommand(1);
    Options opt;
    auto* gen = app.add_subcommand("gen", "print a polynomial family");
    auto* verify = app.add_subcommand("verify", "run verification checks on a family");
    auto* moments = app.add_subcommand("moments", "print mu_0..mu_{2N-1} of the related functional");
    add_family_options(gen, opt, false);
    add_family_options(verify, opt, true);
    add_family_options(moments, opt, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "qappell: error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*gen) return run_gen(opt);
        if (*moments) return run_moments(opt);
        return run_verify(opt);
    } catch (const UsageError& e) {
        std::cerr << "qappell: error: " << e.message << "\n";
        return kExitUsage;
    }
}
