#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qct/dsl.hpp"
#include "qct/suites.hpp"

namespace {

/* "N" or "LO..HI" */
qct::ParamRange parse_range(const std::string& text) {
    const size_t dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            size_t used = 0;
            const int64_t v = std::stoll(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return {v, v};
        }
        size_t ulo = 0, uhi = 0;
        const std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
        const int64_t l = std::stoll(lo, &ulo);
        const int64_t h = std::stoll(hi, &uhi);
        if (ulo != lo.size() || uhi != hi.size()) throw std::invalid_argument(text);
        return {l, h};
    } catch (const std::exception&) {
        throw std::invalid_argument("bad range '" + text +
                                    "' (expected INT or LO..HI)");
    }
}

std::string status_label(qct::Status s) {
    switch (s) {
        case qct::Status::Pass: return "PASS";
        case qct::Status::Fail: return "FAIL";
        case qct::Status::NoClaim: return "SKIP";
        case qct::Status::BudgetExceeded: return "OVER";
        case qct::Status::Error: return "ERR ";
    }
    return "????";
}

void print_report(const qct::VerifyReport& r) {
    std::ostringstream line;
    line << "[" << status_label(r.status) << "] " << r.identity;
    for (const auto& [k, v] : r.params) line << " " << k << "=" << v;
    line << " (" << r.millis << " ms)";
    if (!r.detail.empty()) line << "  " << r.detail;
    std::cout << line.str() << "\n";
    if (!r.lhs.empty()) std::cout << "    lhs: " << r.lhs << "\n";
    if (!r.rhs.empty()) std::cout << "    rhs: " << r.rhs << "\n";
}

int run_verify(const std::string& identity, qct::RunOptions& opt,
               const std::string& json_path, bool quiet) {
    std::ofstream jf;
    if (!json_path.empty()) {
        jf.open(json_path);
        if (!jf) {
            std::cerr << "error: cannot open '" << json_path << "' for writing\n";
            return 3;
        }
    }
    opt.sink = [&](const qct::VerifyReport& r) {
        if (jf.is_open()) jf << r.to_json_line() << "\n";
        if (!quiet) print_report(r);
    };
    qct::RunSummary sum;
    try {
        sum = qct::run_identity(identity, opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    std::cout << identity << ": " << sum.total << " points, " << sum.passed
              << " passed, " << sum.failed << " failed, " << sum.no_claim
              << " outside hypothesis, " << sum.budget_exceeded << " over budget, "
              << sum.errors << " errors\n";
    return sum.exit_code();
}

int run_ct(const std::string& file, const std::string& expr,
           const std::vector<std::string>& binds) {
    if (file.empty() == expr.empty()) {
        std::cerr << "error: give exactly one of --file and --expr\n";
        return 3;
    }
    std::string text = expr;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) {
            std::cerr << "error: cannot read '" << file << "'\n";
            return 3;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    qct::dsl::Bindings bindings;
    for (const std::string& b : binds) {
        const size_t eq = b.find('=');
        if (eq == std::string::npos || eq == 0) {
            std::cerr << "error: bad binding '" << b << "' (expected NAME=VALUE)\n";
            return 3;
        }
        try {
            size_t used = 0;
            const std::string val = b.substr(eq + 1);
            bindings[b.substr(0, eq)] = std::stoll(val, &used);
            if (used != val.size()) throw std::invalid_argument(val);
        } catch (const std::exception&) {
            std::cerr << "error: bad binding '" << b << "' (expected NAME=VALUE)\n";
            return 3;
        }
    }
    try {
        const qct::dsl::AstPtr ast = qct::dsl::parse(text);
        const qct::MultiLaurent value = qct::dsl::evaluate(ast, bindings);
        std::cout << value.to_string() << "\n";
        return 0;
    } catch (const qct::dsl::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const qct::BudgetExceeded&) {
        std::cerr << "error: term budget exhausted\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

int run_list() {
    for (const qct::IdentityInfo& info : qct::list_identities()) {
        std::cout << info.name << "  (parameters:";
        for (const std::string& p : info.param_names) std::cout << " " << p;
        std::cout << ")\n";
        /* wrap the description to keep the listing readable */
        std::istringstream words(info.description);
        std::string word, line;
        while (words >> word) {
            if (line.size() + word.size() + 1 > 74) {
                std::cout << "    " << line << "\n";
                line.clear();
            }
            line += (line.empty() ? "" : " ") + word;
        }
        if (!line.empty()) std::cout << "    " << line << "\n";
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of constant-term identities for q-series "
                 "kernels"};
    app.require_subcommand(1);

    auto* verify =
        app.add_subcommand("verify", "run one identity over a parameter grid");
    std::string identity;
    verify->add_option("identity", identity, "identity name (see `qct list`)")
        ->required();
    int jobs = 1;
    size_t budget = 0;
    std::string json_path;
    bool quiet = false;
    verify->add_option("--jobs", jobs, "worker threads (default 1)");
    verify->add_option("--budget", budget,
                       "per-point term budget; exhausted points abort instead of "
                       "failing");
    verify->add_option("--json", json_path,
                       "write one JSON object per grid point to this file");
    verify->add_flag("--quiet", quiet, "suppress per-point lines");

    std::map<std::string, std::string> range_vals;
    std::map<std::string, CLI::Option*> range_opts;
    for (const char* p :
         {"k", "a", "b", "c", "n", "i", "j", "t", "k1", "k2", "d", "r", "kset"}) {
        range_opts[p] = verify->add_option(
            "--" + std::string(p), range_vals[p],
            "override the grid range of parameter " + std::string(p) +
                " (INT or LO..HI)");
    }

    auto* ct = app.add_subcommand(
        "ct", "evaluate a constant-term expression and print the result");
    std::string file, expr;
    std::vector<std::string> binds;
    ct->add_option("--file,-f", file, "expression file");
    ct->add_option("--expr,-e", expr, "inline expression text");
    ct->add_option("--bind,-b", binds,
                   "integer parameter binding NAME=VALUE (repeatable)");

    auto* list =
        app.add_subcommand("list", "describe the verifiable identities");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    if (*list) return run_list();
    if (*ct) return run_ct(file, expr, binds);

    qct::RunOptions opt;
    opt.jobs = jobs;
    opt.budget = budget;
    for (const auto& [name, o] : range_opts) {
        if (!o->count()) continue;
        try {
            opt.overrides[name] = parse_range(range_vals[name]);
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 3;
        }
    }
    return run_verify(identity, opt, json_path, quiet);
}
