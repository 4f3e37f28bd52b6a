// Command-line front end: construct, verify, transform and certify
// generalized bent functions. Exit status 0 on success and true verdicts,
// 1 on false verdicts, 2 on usage or I/O errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gbent/gbent.hpp"
#include "gbent/parallel.hpp"
#include "gbent/selftest.hpp"

using nlohmann::json;
using namespace gbent;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

struct GlobalOpts {
    bool as_json = false;
    uint32_t seed = selftest::kDefaultSeed;
    unsigned threads = 1;
};

unsigned env_threads() {
    if (const char* env = std::getenv("GBENT_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0)
            return static_cast<unsigned>(v);
    }
    return 1;
}

void emit(const GlobalOpts& opts, const json& report, const std::string& text) {
    if (opts.as_json)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << text;
}

GBFunc load_function(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw FormatError("cannot open '" + path + "'");
    return read_function(in);
}

VecGBFunc load_vectorial(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw FormatError("cannot open '" + path + "'");
    return read_vectorial(in);
}

void write_output(const std::string& path, const std::function<void(std::ostream&)>& writer) {
    if (path.empty() || path == "-") {
        writer(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw FormatError("cannot write '" + path + "'");
    writer(out);
}

std::vector<uint8_t> parse_residues(const std::string& csv, unsigned t) {
    std::vector<uint8_t> values;
    std::istringstream is(csv);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        const unsigned long v = std::stoul(tok);
        if (v >> t)
            throw BadParameters("value " + tok + " is not a residue mod 2^" +
                                std::to_string(t));
        values.push_back(static_cast<uint8_t>(v));
    }
    return values;
}

// Either "rho=<r>,A=<a>,c=<c1>,<c2>,..." or the bare list "rho,A,c1,...".
ClassProfile parse_profile(const std::string& text, unsigned t) {
    std::vector<std::string> tokens;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ','))
        tokens.push_back(tok);
    if (tokens.size() < 2)
        throw BadParameters("profile needs rho, A and the counts c_1..c_(q-1)");

    uint8_t rho = 0;
    int64_t a_field = -1;
    std::vector<uint32_t> counts;
    if (text.find('=') != std::string::npos) {
        size_t i = 0;
        for (; i < tokens.size(); ++i) {
            const size_t eq = tokens[i].find('=');
            const std::string key = eq == std::string::npos ? "" : tokens[i].substr(0, eq);
            const std::string val = eq == std::string::npos ? tokens[i] : tokens[i].substr(eq + 1);
            if (key == "rho")
                rho = static_cast<uint8_t>(std::stoul(val));
            else if (key == "A")
                a_field = static_cast<int64_t>(std::stoll(val));
            else if (key == "c") {
                counts.push_back(static_cast<uint32_t>(std::stoul(val)));
                for (++i; i < tokens.size(); ++i)
                    counts.push_back(static_cast<uint32_t>(std::stoul(tokens[i])));
            } else
                throw BadParameters("unknown profile field '" + tokens[i] + "'");
        }
    } else {
        rho = static_cast<uint8_t>(std::stoul(tokens[0]));
        a_field = std::stoll(tokens[1]);
        for (size_t i = 2; i < tokens.size(); ++i)
            counts.push_back(static_cast<uint32_t>(std::stoul(tokens[i])));
    }
    ClassProfile profile(t, rho, std::move(counts));
    if (a_field >= 0 && profile.members_total() != a_field)
        throw BadParameters("A = " + std::to_string(a_field) +
                            " does not match the sum of the counts " +
                            std::to_string(profile.members_total()));
    return profile;
}

InnerForm make_form(unsigned n, const std::string& mode, const std::string& modulus_hex) {
    if (mode == "dot")
        return InnerForm::dot(n);
    if (mode == "trace") {
        if (n % 2)
            throw BadParameters("trace form requires even n");
        return InnerForm::trace(modulus_hex.empty() ? FieldCtx(n / 2)
                                                    : FieldCtx(n / 2, parse_hex(modulus_hex)));
    }
    throw BadParameters("unknown form '" + mode + "'");
}

PartialSpread load_spread_or_desarguesian(const std::string& spread_path, unsigned m,
                                          const std::string& modulus_hex) {
    if (!spread_path.empty()) {
        std::ifstream in(spread_path);
        if (!in)
            throw FormatError("cannot open '" + spread_path + "'");
        return read_spread(in);
    }
    if (m == 0)
        throw BadParameters("need either --spread or --m");
    const FieldCtx ctx = modulus_hex.empty() ? FieldCtx(m) : FieldCtx(m, parse_hex(modulus_hex));
    return desarguesian_spread(ctx);
}

json verdict_json(const GBFunc& f, bool gbent_flag) {
    json j;
    j["n"] = f.n();
    j["t"] = f.t();
    j["gbent"] = gbent_flag;
    return j;
}

int cmd_verify(const GlobalOpts& opts, const std::string& path) {
    const GBFunc f = load_function(path);
    const bool gb = is_gbent(f);
    json report = verdict_json(f, gb);
    std::ostringstream text;
    text << "gbent: " << (gb ? "true" : "false");
    if (gb && f.n() % 2 == 0) {
        bool regular = true;
        try {
            dual(f); // total for every gbent function here
        } catch (const Error&) {
            regular = false;
        }
        const bool pattern = distribution_pattern_holds(value_distribution(f), f.n(), f.t());
        report["regular"] = regular;
        report["distribution_pattern"] = pattern;
        text << ", regular: " << (regular ? "true" : "false")
             << ", distribution pattern: " << (pattern ? "true" : "false");
    }
    text << "\n";
    emit(opts, report, text.str());
    return gb ? kExitTrue : kExitFalse;
}

int cmd_classify(const GlobalOpts& opts, const std::string& profile_text, unsigned q,
                 unsigned m) {
    unsigned t = 0;
    while ((1u << t) < q)
        ++t;
    if ((1u << t) != q || t < 1)
        throw BadParameters("q must be a power of two, at least 2");
    const ClassProfile profile = parse_profile(profile_text, t);
    const SpreadClass verdict = classify_profile(profile, m);
    const bool condition = spread_value_condition_holds(m, profile);

    json report;
    report["condition"] = to_string(verdict);
    report["value_condition"] = condition;
    std::ostringstream text;
    text << "condition " << to_string(verdict) << " (value condition "
         << (condition ? "holds" : "fails") << ")\n";
    emit(opts, report, text.str());
    return verdict != SpreadClass::None ? kExitTrue : kExitFalse;
}

int cmd_rds_check(const GlobalOpts& opts, const std::string& path) {
    const VecGBFunc f = load_vectorial(path);
    const GraphSet graph = graph_of(f);
    const unsigned n = f.n();
    const RDSParams params{uint64_t{1} << n, graph.zq_count(), uint64_t{1} << n,
                           uint64_t{1} << (n / 2)};
    const bool counting_feasible = graph.group_order() <= (uint64_t{1} << 16);
    const bool by_counting = counting_feasible && check_rds_counting(graph, params);
    const auto failure = rds_character_failure(graph, params);
    const bool by_characters = !failure.has_value();

    json report;
    report["params"] = {params.mu, params.nu, params.k, params.lambda};
    if (counting_feasible)
        report["counting"] = by_counting;
    else
        report["counting"] = "skipped";
    report["characters"] = by_characters;
    std::ostringstream text;
    text << "params: (" << params.mu << "," << params.nu << "," << params.k << ","
         << params.lambda << ")\n"
         << "counting: "
         << (counting_feasible ? (by_counting ? "true" : "false")
                               : "skipped (group order above the 2^16 counting cap)")
         << "\n"
         << "characters: " << (by_characters ? "true" : "false") << "\n";
    if (failure) {
        json fail;
        fail["u"] = failure->u;
        fail["c"] = failure->c;
        fail["expected_sq_modulus"] = failure->expected;
        report["failing_character"] = fail;
        text << "failing character: u=" << failure->u << " c=(";
        for (size_t j = 0; j < failure->c.size(); ++j)
            text << (j ? "," : "") << unsigned{failure->c[j]};
        text << "), |chi|^2 should be " << failure->expected << "\n";
    }
    emit(opts, report, text.str());
    return (!counting_feasible || by_counting) && by_characters ? kExitTrue : kExitFalse;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact constructions and certification of generalized bent functions"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    GlobalOpts opts;
    opts.threads = env_threads();
    app.add_flag("--json", opts.as_json, "emit reports as JSON");
    app.add_option("--seed", opts.seed, "seed for randomized commands");
    app.add_option("--threads", opts.threads,
                   "worker threads for component checks (default $GBENT_THREADS or 1)");

    // construct
    auto* construct = app.add_subcommand("construct", "build gbent functions");
    construct->require_subcommand(1);

    struct {
        unsigned m = 0;
        unsigned t = 2;
        std::string modulus, spread, values, form = "dot", out;
        unsigned rho = 0, r = 0;
        std::string a, b;
        std::vector<std::string> g;
        std::string members;
    } c;

    auto* dillon = construct->add_subcommand("dillon", "complete-spread construction");
    dillon->add_option("--m", c.m, "half dimension (Desarguesian spread)");
    dillon->add_option("--spread", c.spread, "spread file");
    dillon->add_option("--t", c.t, "exponent, q = 2^t")->required();
    dillon->add_option("--values", c.values, "comma-separated k_i, one per member")->required();
    dillon->add_option("--r", c.r, "value at 0");
    dillon->add_option("--form", c.form, "inner product: dot|trace");
    dillon->add_option("--modulus", c.modulus, "field modulus as hex");
    dillon->add_option("-o,--out", c.out, "output file");

    auto* psap = construct->add_subcommand("psap", "explicit bivariate construction");
    psap->add_option("--m", c.m, "field degree")->required();
    psap->add_option("--modulus", c.modulus, "field modulus as hex");
    psap->add_option("--g", c.g, "component G_j as a 0/1 string of length 2^m (repeatable)")
        ->required();
    psap->add_option("-o,--out", c.out, "output file");

    auto* trace_pair = construct->add_subcommand("trace-pair", "f = Tr(ax/y) + 2 Tr(bx/y)");
    trace_pair->add_option("--m", c.m, "field degree")->required();
    trace_pair->add_option("--modulus", c.modulus, "field modulus as hex");
    trace_pair->add_option("--a", c.a, "field element a (hex)")->required();
    trace_pair->add_option("--b", c.b, "field element b (hex)")->required();
    trace_pair->add_option("-o,--out", c.out, "output file");

    auto* partial = construct->add_subcommand("partial-spread", "partial-spread construction");
    partial->add_option("--m", c.m, "half dimension (Desarguesian spread)");
    partial->add_option("--spread", c.spread, "spread file");
    partial->add_option("--members", c.members,
                        "comma-separated member indices to keep (default: first A)");
    partial->add_option("--t", c.t, "exponent, q = 2^t")->required();
    partial->add_option("--values", c.values, "comma-separated nonzero k_i")->required();
    partial->add_option("--rho", c.rho, "value at 0");
    partial->add_option("--form", c.form, "inner product: dot|trace");
    partial->add_option("--modulus", c.modulus, "field modulus as hex");
    partial->add_option("-o,--out", c.out, "output file");

    // single-file commands
    std::string in_path, out_path;
    auto* verify = app.add_subcommand("verify", "gbent / regularity / distribution report");
    verify->add_option("file", in_path, "function table file")->required();

    auto* spectrum = app.add_subcommand("spectrum", "write the exact spectrum");
    spectrum->add_option("file", in_path, "function table file")->required();
    spectrum->add_option("-o,--out", out_path, "output file");

    auto* dual_cmd = app.add_subcommand("dual", "write the dual function table");
    dual_cmd->add_option("file", in_path, "function table file")->required();
    dual_cmd->add_option("-o,--out", out_path, "output file");

    auto* distribution = app.add_subcommand("distribution", "value distribution b_j");
    distribution->add_option("file", in_path, "function table file")->required();

    std::string profile_text;
    unsigned cl_q = 4, cl_m = 0;
    auto* classify = app.add_subcommand("classify", "match a profile against patterns I-IV");
    classify->add_option("profile", profile_text, "rho=<r>,A=<a>,c=<c1>,... or rho,A,c1,...")
        ->required();
    classify->add_option("--q", cl_q, "modulus q = 2^t")->required();
    classify->add_option("--m", cl_m, "half dimension")->required();

    unsigned ep_q = 4, ep_m = 2;
    int64_t ep_amin = 0, ep_amax = 0;
    auto* enum_profiles = app.add_subcommand("enumerate-profiles", "list admissible profiles");
    enum_profiles->add_option("q", ep_q, "modulus q = 2^t")->required();
    enum_profiles->add_option("m", ep_m, "half dimension")->required();
    enum_profiles->add_option("Amin", ep_amin, "smallest A")->required();
    enum_profiles->add_option("Amax", ep_amax, "largest A")->required();

    struct {
        unsigned n = 0, t = 1, m = 0;
        std::string spread, bijection, modulus, out;
        bool check = false;
    } v;
    auto* vectorial = app.add_subcommand("vectorial", "spread-bijection vectorial construction");
    vectorial->add_option("--n", v.n, "dimension")->required();
    vectorial->add_option("--t", v.t, "exponent, q = 2^t")->required();
    vectorial->add_option("--m", v.m, "number of components")->required();
    vectorial->add_option("--spread", v.spread, "spread file (default: Desarguesian)");
    vectorial->add_option("--bijection", v.bijection,
                          "bijection file (default: seeded random); the first spread member "
                          "carries the zero value");
    vectorial->add_option("--modulus", v.modulus, "field modulus as hex");
    vectorial->add_flag("--check", v.check, "also verify all components are gbent");
    vectorial->add_option("-o,--out", v.out, "output file");

    auto* rds = app.add_subcommand("rds-check", "certify the graph as a relative difference set");
    rds->add_option("file", in_path, "vectorial function file")->required();

    std::string only_text;
    auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance battery");
    selftest_cmd->add_option("--only", only_text, "comma-separated criterion ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (dillon->parsed() || partial->parsed()) {
            PartialSpread spread = load_spread_or_desarguesian(c.spread, c.m, c.modulus);
            std::vector<uint8_t> values = parse_residues(c.values, c.t);
            if (partial->parsed()) {
                if (!c.members.empty()) {
                    PartialSpread sub;
                    sub.n = spread.n;
                    std::istringstream ms(c.members);
                    std::string tok;
                    while (std::getline(ms, tok, ','))
                        sub.members.push_back(spread.members.at(std::stoul(tok)));
                    spread = std::move(sub);
                } else if (values.size() < spread.members.size()) {
                    // the first A members carry the values
                    spread.members.erase(spread.members.begin() +
                                             static_cast<ptrdiff_t>(values.size()),
                                         spread.members.end());
                }
            }
            const InnerForm form = make_form(spread.n, c.form, c.modulus);
            GBFunc f = dillon->parsed()
                           ? dillon_full_spread(c.t, form, spread, values,
                                                static_cast<uint8_t>(c.r))
                           : partial_spread_gbent(
                                 c.t, form,
                                 SpreadAssignment{std::move(spread), std::move(values),
                                                  static_cast<uint8_t>(c.rho)});
            write_output(c.out, [&](std::ostream& os) { write_function(os, f); });
            return kExitTrue;
        }
        if (psap->parsed()) {
            const FieldCtx ctx =
                c.modulus.empty() ? FieldCtx(c.m) : FieldCtx(c.m, parse_hex(c.modulus));
            std::vector<std::vector<uint8_t>> g;
            for (const std::string& bits : c.g) {
                std::vector<uint8_t> table;
                for (char ch : bits) {
                    if (ch != '0' && ch != '1')
                        throw BadParameters("component strings must be over {0, 1}");
                    table.push_back(static_cast<uint8_t>(ch - '0'));
                }
                g.push_back(std::move(table));
            }
            const GBFunc f = psap_explicit(ctx, g);
            write_output(c.out, [&](std::ostream& os) { write_function(os, f); });
            return kExitTrue;
        }
        if (trace_pair->parsed()) {
            const FieldCtx ctx =
                c.modulus.empty() ? FieldCtx(c.m) : FieldCtx(c.m, parse_hex(c.modulus));
            const GBFunc f =
                psap_trace_pair(ctx, ctx.elem(parse_hex(c.a)), ctx.elem(parse_hex(c.b)));
            write_output(c.out, [&](std::ostream& os) { write_function(os, f); });
            return kExitTrue;
        }
        if (verify->parsed())
            return cmd_verify(opts, in_path);
        if (spectrum->parsed()) {
            const GBFunc f = load_function(in_path);
            const Spectrum spec = walsh_transform(f);
            write_output(out_path, [&](std::ostream& os) { write_spectrum(os, spec); });
            return kExitTrue;
        }
        if (dual_cmd->parsed()) {
            const GBFunc f = load_function(in_path);
            const GBFunc fd = dual(f);
            write_output(out_path, [&](std::ostream& os) { write_function(os, fd); });
            return kExitTrue;
        }
        if (distribution->parsed()) {
            const GBFunc f = load_function(in_path);
            const auto counts = value_distribution(f);
            json report;
            report["counts"] = counts;
            std::ostringstream text;
            for (size_t j = 0; j < counts.size(); ++j)
                text << "b_" << j << " = " << counts[j] << "\n";
            emit(opts, report, text.str());
            return kExitTrue;
        }
        if (classify->parsed())
            return cmd_classify(opts, profile_text, cl_q, cl_m);
        if (enum_profiles->parsed()) {
            unsigned t = 0;
            while ((1u << t) < ep_q)
                ++t;
            if ((1u << t) != ep_q || t < 1)
                throw BadParameters("q must be a power of two, at least 2");
            const auto profiles = generate_profiles(t, ep_m, ep_amin, ep_amax);
            json report = json::array();
            std::ostringstream text;
            for (const auto& p : profiles) {
                json jp;
                jp["rho"] = p.rho();
                jp["A"] = p.members_total();
                jp["c"] = p.counts();
                jp["condition"] = to_string(classify_profile(p, ep_m));
                report.push_back(jp);
                text << "rho=" << unsigned{p.rho()} << ",A=" << p.members_total() << ",c=";
                for (size_t j = 0; j < p.counts().size(); ++j)
                    text << (j ? "," : "") << p.counts()[j];
                text << " -> condition " << to_string(classify_profile(p, ep_m)) << "\n";
            }
            text << profiles.size() << " profiles\n";
            emit(opts, report, text.str());
            return kExitTrue;
        }
        if (vectorial->parsed()) {
            const PartialSpread spread =
                load_spread_or_desarguesian(v.spread, v.n / 2, v.modulus);
            if (spread.n != v.n)
                throw BadParameters("spread dimension does not match --n");
            const InnerForm form = InnerForm::dot(v.n);
            std::vector<ZqVec> phi;
            if (!v.bijection.empty()) {
                std::ifstream in(v.bijection);
                if (!in)
                    throw FormatError("cannot open '" + v.bijection + "'");
                phi = read_bijection(in, size_t{1} << (v.n / 2), v.m);
            } else {
                std::mt19937 rng(opts.seed);
                phi = selftest::detail::random_bijection(rng, v.t, v.m);
            }
            const VecGBFunc f = spread_bijection_vectorial(v.t, form, spread, phi, v.m);
            if (!v.out.empty() || !v.check)
                write_output(v.out, [&](std::ostream& os) { write_vectorial(os, f); });
            if (v.check) {
                const bool ok = is_vectorial_gbent(f, opts.threads);
                json report;
                report["vectorial_gbent"] = ok;
                emit(opts, report,
                     std::string("vectorial gbent: ") + (ok ? "true" : "false") + "\n");
                return ok ? kExitTrue : kExitFalse;
            }
            return kExitTrue;
        }
        if (rds->parsed())
            return cmd_rds_check(opts, in_path);
        if (selftest_cmd->parsed()) {
            std::set<int> only;
            if (!only_text.empty()) {
                std::istringstream is(only_text);
                std::string tok;
                while (std::getline(is, tok, ','))
                    only.insert(std::stoi(tok));
            }
            const auto results = selftest::run_all(std::cout, opts.seed, only);
            const bool ok = selftest::all_passed(results);
            std::cout << (ok ? "all selected criteria passed" : "some criteria FAILED")
                      << "\n";
            return ok ? kExitTrue : kExitFalse;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
