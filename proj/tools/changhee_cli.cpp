#include <changhee/gfparse.hpp>
#include <changhee/identities.hpp>
#include <changhee/sequences.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using changhee::Family;
using changhee::GridSpec;
using changhee::IdentityId;
using changhee::Polynomial;
using changhee::Rational;
using ojson = nlohmann::ordered_json;

constexpr unsigned default_n_max = 12;
constexpr unsigned default_k_max = 6;

/// Plain key=value file; recognized keys: n_max, k_max, truncation, format.
/// Blank lines and # comments are skipped.
std::map<std::string, std::string> load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open config file: " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(f, line)) {
        auto trim = [](std::string s) {
            const char* ws = " \t\r";
            auto b = s.find_first_not_of(ws);
            if (b == std::string::npos) return std::string();
            auto e = s.find_last_not_of(ws);
            return s.substr(b, e - b + 1);
        };
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("malformed config line: " + line);
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key != "n_max" && key != "k_max" && key != "truncation" && key != "format")
            throw std::runtime_error("unknown config key: " + key);
        kv[key] = value;
    }
    return kv;
}

long long parse_ll(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("invalid " + what + ": " + text);
    }
}

/// Precedence: explicit flag, then config file, then built-in default.
long long resolve_number(const CLI::Option* opt, long long flag_value,
                         const std::map<std::string, std::string>& cfg, const std::string& key,
                         long long fallback) {
    if (opt && opt->count() > 0) return flag_value;
    if (auto it = cfg.find(key); it != cfg.end()) return parse_ll(it->second, key);
    return fallback;
}

std::string resolve_format(const CLI::Option* opt, const std::string& flag_value,
                           const std::map<std::string, std::string>& cfg) {
    std::string fmt = flag_value;
    if (!(opt && opt->count() > 0)) {
        if (auto it = cfg.find("format"); it != cfg.end()) fmt = it->second;
    }
    if (fmt != "json" && fmt != "csv") throw std::runtime_error("invalid format: " + fmt);
    return fmt;
}

int write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "cannot open output file: " << out_path << "\n";
        return 2;
    }
    f << text;
    return 0;
}

std::string json_text(const ojson& j) { return j.dump(2) + "\n"; }

/// EGF coefficient rendering shared by expand: constant polynomials print
/// as rational strings, anything with x as a coefficient array.
ojson egf_value_json(const Polynomial& p) {
    auto deg = p.degree();
    if (!deg || *deg == 0) return p.coefficient(0).str();
    return ojson(changhee::coefficient_strings(p));
}

std::string egf_value_csv(const Polynomial& p) {
    auto deg = p.degree();
    if (!deg || *deg == 0) return p.coefficient(0).str();
    std::string out;
    for (const auto& c : changhee::coefficient_strings(p)) {
        if (!out.empty()) out += ';';
        out += c;
    }
    return out;
}

struct TableArgs {
    std::string family;
    long long k = 1;
    long long n_max = default_n_max;
    std::string format = "json";
    std::string out;
    std::string config;
    CLI::Option *o_n_max = nullptr, *o_format = nullptr;
};

int run_table(const TableArgs& a) {
    auto cfg = a.config.empty() ? std::map<std::string, std::string>{} : load_config(a.config);
    std::string fmt = resolve_format(a.o_format, a.format, cfg);
    long long n_max = resolve_number(a.o_n_max, a.n_max, cfg, "n_max", default_n_max);
    auto family = changhee::family_from_name(a.family);
    if (!family) {
        std::cerr << "unknown family: " << a.family << "\n";
        return 2;
    }
    if (a.k < 1 || n_max < 0) {
        std::cerr << "invalid bounds: k must be >= 1 and n-max >= 0\n";
        return 2;
    }
    auto table = changhee::make_table(*family, static_cast<unsigned>(a.k),
                                      static_cast<unsigned>(n_max));
    std::string text =
        fmt == "json" ? json_text(changhee::table_to_json(table)) : changhee::table_to_csv(table);
    return write_output(text, a.out);
}

struct EvalArgs {
    std::string family;
    long long k = 1;
    long long n = 0;
    std::string x = "0";
    std::string format = "json";
    std::string out;
    std::string config;
    CLI::Option* o_format = nullptr;
};

int run_eval(const EvalArgs& a) {
    auto cfg = a.config.empty() ? std::map<std::string, std::string>{} : load_config(a.config);
    std::string fmt = resolve_format(a.o_format, a.format, cfg);
    auto family = changhee::family_from_name(a.family);
    if (!family) {
        std::cerr << "unknown family: " << a.family << "\n";
        return 2;
    }
    if (!changhee::is_polynomial_family(*family)) {
        std::cerr << "family " << a.family << " has no polynomial to evaluate\n";
        return 2;
    }
    if (a.k < 1 || a.n < 0) {
        std::cerr << "invalid bounds: k must be >= 1 and n >= 0\n";
        return 2;
    }
    Rational x;
    try {
        x = Rational::parse(a.x);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    unsigned n = static_cast<unsigned>(a.n);
    unsigned k = static_cast<unsigned>(a.k);
    Polynomial p;
    switch (*family) {
        case Family::changhee1_poly: p = changhee::changhee1_poly(n, k); break;
        case Family::changhee2_poly: p = changhee::changhee2_poly(n, k); break;
        case Family::euler_poly: p = changhee::euler_poly(n, k); break;
        default: break;
    }
    Rational value = p.eval(x);
    std::string text;
    if (fmt == "json") {
        ojson j;
        j["family"] = a.family;
        j["k"] = a.k;
        j["n"] = a.n;
        j["x"] = x.str();
        j["value"] = value.str();
        text = json_text(j);
    } else {
        text = "n,value\n" + std::to_string(a.n) + "," + value.str() + "\n";
    }
    return write_output(text, a.out);
}

struct ExpandArgs {
    std::string expr;
    long long n = default_n_max;
    std::string format = "json";
    std::string out;
    std::string config;
    CLI::Option *o_n = nullptr, *o_format = nullptr;
};

int run_expand(const ExpandArgs& a) {
    auto cfg = a.config.empty() ? std::map<std::string, std::string>{} : load_config(a.config);
    std::string fmt = resolve_format(a.o_format, a.format, cfg);
    long long n = resolve_number(a.o_n, a.n, cfg, "n_max", default_n_max);
    if (n < 0) {
        std::cerr << "invalid bounds: n must be >= 0\n";
        return 2;
    }
    std::vector<Polynomial> egf;
    try {
        auto e = changhee::parse(a.expr);
        auto series = changhee::eval_series(*e, static_cast<std::size_t>(n));
        for (long long i = 0; i <= n; ++i)
            egf.push_back(changhee::egf_coefficient(series, static_cast<std::size_t>(i)));
    } catch (const changhee::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const changhee::EvalError& e) {
        std::cerr << e.what() << " (offsets " << e.span.begin << ".." << e.span.end << ")\n";
        return 3;
    }
    std::string text;
    if (fmt == "json") {
        ojson j;
        j["expr"] = a.expr;
        j["n"] = n;
        auto arr = ojson::array();
        for (const auto& p : egf) arr.push_back(egf_value_json(p));
        j["egf"] = arr;
        text = json_text(j);
    } else {
        std::ostringstream csv;
        csv << "n,value\n";
        for (std::size_t i = 0; i < egf.size(); ++i) csv << i << "," << egf_value_csv(egf[i]) << "\n";
        text = csv.str();
    }
    return write_output(text, a.out);
}

struct VerifyArgs {
    std::string ids = "all";
    long long n_max = default_n_max;
    long long k_max = default_k_max;
    long long truncation = -1;
    std::string format = "json";
    std::string out;
    std::string config;
    CLI::Option *o_n_max = nullptr, *o_k_max = nullptr, *o_trunc = nullptr, *o_format = nullptr;
};

int run_verify(const VerifyArgs& a) {
    auto cfg = a.config.empty() ? std::map<std::string, std::string>{} : load_config(a.config);
    std::string fmt = resolve_format(a.o_format, a.format, cfg);
    long long n_max = resolve_number(a.o_n_max, a.n_max, cfg, "n_max", default_n_max);
    long long k_max = resolve_number(a.o_k_max, a.k_max, cfg, "k_max", default_k_max);
    long long trunc = resolve_number(a.o_trunc, a.truncation, cfg, "truncation", -1);
    if (n_max < 0 || k_max < 1) {
        std::cerr << "invalid bounds: n-max must be >= 0 and k-max >= 1\n";
        return 2;
    }
    if (trunc < 0) trunc = n_max + 4;

    std::vector<IdentityId> ids;
    if (a.ids == "all") {
        ids = changhee::all_identity_ids();
    } else {
        std::stringstream ss(a.ids);
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto b = item.find_first_not_of(" \t");
            auto e = item.find_last_not_of(" \t");
            std::string name = b == std::string::npos ? "" : item.substr(b, e - b + 1);
            auto id = changhee::identity_from_name(name);
            if (!id) {
                std::cerr << "unknown identity id: " << name << "\n";
                return 2;
            }
            ids.push_back(*id);
        }
        if (ids.empty()) {
            std::cerr << "no identity ids given\n";
            return 2;
        }
    }

    GridSpec grid{static_cast<unsigned>(n_max), static_cast<unsigned>(k_max),
                  static_cast<unsigned>(trunc)};
    std::vector<changhee::IdentityReport> reports;
    try {
        reports = changhee::verify_suite(ids, grid);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    std::string text = fmt == "json" ? json_text(changhee::reports_to_json(reports))
                                     : changhee::reports_to_csv(reports);
    int rc = write_output(text, a.out);
    if (rc != 0) return rc;
    for (const auto& r : reports)
        if (!r.pass) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Changhee, Euler and Stirling sequence toolkit"};
    app.require_subcommand(1);

    TableArgs ta;
    auto* table_cmd = app.add_subcommand("table", "Emit a sequence table for one family and order");
    table_cmd->add_option("--family", ta.family, "Sequence family")->required();
    table_cmd->add_option("--k", ta.k, "Order k (>= 1)");
    ta.o_n_max = table_cmd->add_option("--n-max", ta.n_max, "Highest index n");
    ta.o_format = table_cmd->add_option("--format", ta.format, "json or csv");
    table_cmd->add_option("--out", ta.out, "Write to file instead of stdout");
    table_cmd->add_option("--config", ta.config, "key=value defaults file");

    EvalArgs ea;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a polynomial family member at x");
    eval_cmd->add_option("--family", ea.family, "Polynomial family")->required();
    eval_cmd->add_option("--k", ea.k, "Order k (>= 1)");
    eval_cmd->add_option("--n", ea.n, "Index n")->required();
    eval_cmd->add_option("--x", ea.x, "Evaluation point, as p/q or integer");
    ea.o_format = eval_cmd->add_option("--format", ea.format, "json or csv");
    eval_cmd->add_option("--out", ea.out, "Write to file instead of stdout");
    eval_cmd->add_option("--config", ea.config, "key=value defaults file");

    ExpandArgs xa;
    auto* expand_cmd = app.add_subcommand("expand", "Expand an expression into EGF coefficients");
    expand_cmd->add_option("expr", xa.expr, "Generating-function expression")->required();
    xa.o_n = expand_cmd->add_option("--n", xa.n, "Highest coefficient index");
    xa.o_format = expand_cmd->add_option("--format", xa.format, "json or csv");
    expand_cmd->add_option("--out", xa.out, "Write to file instead of stdout");
    expand_cmd->add_option("--config", xa.config, "key=value defaults file");

    VerifyArgs va;
    auto* verify_cmd = app.add_subcommand("verify", "Run identity checkers over a grid");
    verify_cmd->add_option("--ids", va.ids, "Comma-separated identity ids, or 'all'");
    va.o_n_max = verify_cmd->add_option("--n-max", va.n_max, "Grid bound for n");
    va.o_k_max = verify_cmd->add_option("--k-max", va.k_max, "Grid bound for k");
    va.o_trunc = verify_cmd->add_option("--truncation", va.truncation, "Series truncation order");
    va.o_format = verify_cmd->add_option("--format", va.format, "json or csv");
    verify_cmd->add_option("--out", va.out, "Write to file instead of stdout");
    verify_cmd->add_option("--config", va.config, "key=value defaults file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(table_cmd)) return run_table(ta);
        if (app.got_subcommand(eval_cmd)) return run_eval(ea);
        if (app.got_subcommand(expand_cmd)) return run_expand(xa);
        if (app.got_subcommand(verify_cmd)) return run_verify(va);
    } catch (const std::runtime_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}
