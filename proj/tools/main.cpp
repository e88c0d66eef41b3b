// Command-line front end: invariants, ideal, verify, sweep.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgforge/buchberger.hpp"
#include "sgforge/family.hpp"
#include "sgforge/presentation.hpp"
#include "sgforge/semigroup.hpp"

using nlohmann::json;

namespace {

enum class Format { Json, Csv, Text };

// 0 all match, 1 verified mismatch, 2 invalid input, 3 resource limit.
constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitResource = 3;

struct CommonOpts {
    std::string format = "text";
    std::uint64_t max_spairs = 0;  // 0 = unset

    Format parsed_format() const {
        if (format == "json") return Format::Json;
        if (format == "csv") return Format::Csv;
        return Format::Text;
    }

    sgforge::Budget budget() const {
        sgforge::Budget b;
        if (const char* env = std::getenv("SEMIGROUP_FORGE_BUDGET")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) {
                b.max_spairs = v;
                b.max_factorization_nodes = 10 * v;
            }
        }
        if (max_spairs > 0) {
            b.max_spairs = max_spairs;
            b.max_factorization_nodes = 10 * max_spairs;
        }
        return b;
    }
};

std::string join(const std::vector<long long>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

std::string compact(const sgforge::Binomial& b) {
    std::string s = b.str();
    std::string out;
    for (char c : s)
        if (c != ' ') out += c;
    return out;
}

void print_csv_line(std::ostream& os, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) os << ',';
        os << fields[i];
    }
    os << '\n';
}

// ---- invariants ----

struct InvariantsOpts : CommonOpts {
    std::vector<long long> gens;
    bool show_apery = false;
};

int run_invariants(const InvariantsOpts& o) {
    sgforge::NumericalSemigroup sg(o.gens);
    sgforge::SemigroupInvariants inv = sg.invariants();
    std::vector<long long> apery = sg.apery_multiplicity().entries;
    std::sort(apery.begin(), apery.end());

    switch (o.parsed_format()) {
        case Format::Json: {
            json row = {
                {"generators", sg.generators()},
                {"multiplicity", sg.multiplicity()},
                {"embedding_dimension", sg.embedding_dimension()},
                {"frobenius", inv.frobenius},
                {"genus", inv.genus},
                {"pseudo_frobenius", inv.pseudo_frobenius},
                {"type", inv.type},
            };
            if (o.show_apery) row["apery"] = apery;
            json doc = {{"command", "invariants"},
                        {"params", {{"gens", o.gens}, {"show_apery", o.show_apery}}},
                        {"rows", json::array({row})},
                        {"discrepancies", json::array()}};
            std::cout << doc.dump(2) << '\n';
            break;
        }
        case Format::Csv: {
            std::vector<std::string> header = {"generators",      "multiplicity",
                                               "embedding_dimension", "frobenius",
                                               "genus",           "type",
                                               "pseudo_frobenius"};
            std::vector<std::string> row = {join(sg.generators(), " "),
                                            std::to_string(sg.multiplicity()),
                                            std::to_string(sg.embedding_dimension()),
                                            std::to_string(inv.frobenius),
                                            std::to_string(inv.genus),
                                            std::to_string(inv.type),
                                            join(inv.pseudo_frobenius, " ")};
            if (o.show_apery) {
                header.push_back("apery");
                row.push_back(join(apery, " "));
            }
            print_csv_line(std::cout, header);
            print_csv_line(std::cout, row);
            break;
        }
        case Format::Text:
            std::cout << "generators:          " << join(sg.generators(), ", ") << '\n'
                      << "multiplicity:        " << sg.multiplicity() << '\n'
                      << "embedding dimension: " << sg.embedding_dimension() << '\n'
                      << "frobenius:           " << inv.frobenius << '\n'
                      << "genus:               " << inv.genus << '\n'
                      << "type:                " << inv.type << '\n'
                      << "pseudo-frobenius:    " << join(inv.pseudo_frobenius, ", ")
                      << '\n';
            if (o.show_apery)
                std::cout << "apery:               " << join(apery, ", ") << '\n';
            break;
    }
    return kExitOk;
}

// ---- ideal ----

struct IdealOpts : CommonOpts {
    std::vector<long long> gens;
    std::string strategy = "saturation";
};

int run_ideal(const IdealOpts& o) {
    sgforge::Budget budget = o.budget();
    bool both = o.strategy == "both";
    sgforge::ToricStrategy primary = o.strategy == "elimination"
                                         ? sgforge::ToricStrategy::Elimination
                                         : sgforge::ToricStrategy::Saturation;

    auto set = sgforge::toric_ideal_generators(o.gens, primary, budget);
    std::optional<bool> agree;
    if (both) {
        auto other = sgforge::toric_ideal_generators(
            o.gens, sgforge::ToricStrategy::Elimination, budget);
        agree = sgforge::same_ideal(o.gens, set, other, budget);
    }
    auto report = sgforge::mu_and_betti_degrees(o.gens, std::move(set), budget);

    switch (o.parsed_format()) {
        case Format::Json: {
            json degrees = json::object();
            for (const auto& [deg, cnt] : report.betti_degrees)
                degrees[std::to_string(deg)] = cnt;
            json gens_json = json::array();
            for (const auto& b : report.generating_set) gens_json.push_back(b.str());
            json row = {{"mu", report.mu},
                        {"betti_degrees", degrees},
                        {"generating_set", gens_json},
                        {"certified", true}};
            if (agree) row["strategies_agree"] = *agree;
            json doc = {{"command", "ideal"},
                        {"params", {{"gens", o.gens}, {"strategy", o.strategy}}},
                        {"rows", json::array({row})},
                        {"discrepancies", json::array()}};
            std::cout << doc.dump(2) << '\n';
            break;
        }
        case Format::Csv: {
            std::string degrees;
            for (const auto& [deg, cnt] : report.betti_degrees) {
                if (!degrees.empty()) degrees += ' ';
                degrees += std::to_string(deg) + ':' + std::to_string(cnt);
            }
            std::string set_str;
            for (const auto& b : report.generating_set) {
                if (!set_str.empty()) set_str += ' ';
                set_str += compact(b);
            }
            std::vector<std::string> header = {"mu", "betti_degrees", "generating_set"};
            std::vector<std::string> row = {std::to_string(report.mu), degrees, set_str};
            if (agree) {
                header.push_back("strategies_agree");
                row.push_back(*agree ? "true" : "false");
            }
            print_csv_line(std::cout, header);
            print_csv_line(std::cout, row);
            break;
        }
        case Format::Text: {
            std::cout << "generating set (" << report.generating_set.size()
                      << " binomials, certified):\n";
            for (const auto& b : report.generating_set)
                std::cout << "  " << b.str() << '\n';
            std::cout << "betti degrees:\n";
            for (const auto& [deg, cnt] : report.betti_degrees)
                std::cout << "  " << deg << ": " << cnt << '\n';
            std::cout << "mu: " << report.mu << '\n';
            if (agree)
                std::cout << "strategies agree: " << (*agree ? "yes" : "no") << '\n';
            break;
        }
    }
    return agree && !*agree ? kExitMismatch : kExitOk;
}

// ---- verify and sweep ----

struct SweepOpts : CommonOpts {
    int e = 0;
    std::string i_spec;
    unsigned threads = 0;
};

struct SweepRow {
    long long index = 0;
    std::optional<sgforge::VerificationReport> report;
    std::string error;  // resource exhaustion note
};

json row_to_json(const SweepRow& row) {
    json j;
    j["i"] = row.index;
    if (!row.error.empty()) {
        j["error"] = row.error;
        return j;
    }
    const auto& r = *row.report;
    j["n"] = r.params.n;
    j["generators"] = r.params.generators;
    j["apery_size"] = r.params.generators[0];
    j["type"] = r.type_computed;
    j["type_expected"] = r.type_expected;
    j["apery_match"] = r.apery_match;
    j["pf_match"] = r.pf_match;
    j["mu"] = r.mu_computed ? json(*r.mu_computed) : json(nullptr);
    j["mu_expected"] = r.mu_expected;
    j["mu_ge_n_plus_2"] = r.mu_ge_n_plus_2 ? json(*r.mu_ge_n_plus_2) : json(nullptr);
    j["gastinger_certified"] =
        r.gastinger_certified ? json(*r.gastinger_certified) : json(nullptr);
    j["minimality_certified"] =
        r.minimality_certified ? json(*r.minimality_certified) : json(nullptr);
    j["all_match"] = r.all_match();
    return j;
}

json row_discrepancies(const SweepRow& row) {
    json out = json::array();
    if (!row.report) return out;
    const auto& r = *row.report;
    if (!r.apery_match)
        out.push_back({{"i", row.index},
                       {"n", r.params.n},
                       {"kind", "apery"},
                       {"only_closed", r.apery_only_closed},
                       {"only_generic", r.apery_only_generic}});
    if (!r.pf_match)
        out.push_back({{"i", row.index},
                       {"n", r.params.n},
                       {"kind", "pseudo_frobenius"},
                       {"only_closed", r.pf_only_closed},
                       {"only_generic", r.pf_only_generic}});
    return out;
}

std::vector<std::string> row_to_csv(const SweepRow& row, int e) {
    const auto opt_str = [](const std::optional<bool>& v) {
        return v ? std::string(*v ? "true" : "false") : std::string();
    };
    std::vector<std::string> f;
    f.push_back(std::to_string(row.index));
    if (!row.report) {
        f.resize(static_cast<std::size_t>(e) + 9);
        f.back() = row.error;
        return f;
    }
    const auto& r = *row.report;
    f.push_back(std::to_string(r.params.n));
    for (long long m : r.params.generators) f.push_back(std::to_string(m));
    f.push_back(std::to_string(r.params.generators[0]));  // apery size
    f.push_back(std::to_string(r.type_computed));
    f.push_back(r.mu_computed ? std::to_string(*r.mu_computed) : std::string());
    f.push_back(opt_str(r.mu_ge_n_plus_2));
    f.push_back(r.apery_match ? "true" : "false");
    f.push_back(r.pf_match ? "true" : "false");
    f.push_back(row.error);
    return f;
}

std::vector<std::string> csv_header(int e) {
    std::vector<std::string> h = {"i", "n"};
    for (int j = 0; j < e; ++j) h.push_back("m" + std::to_string(j));
    h.insert(h.end(), {"apery_size", "type", "mu", "mu_ge_n_plus_2", "apery_match",
                       "pf_match", "error"});
    return h;
}

void print_text_rows(const std::vector<SweepRow>& rows) {
    std::cout << "  i   n  generators  apery_size  type  mu  mu>=n+2  apery  pf\n";
    for (const SweepRow& row : rows) {
        if (!row.report) {
            std::cout << "  " << row.index << "  <error: " << row.error << ">\n";
            continue;
        }
        const auto& r = *row.report;
        std::ostringstream line;
        line << "  " << row.index << "   " << r.params.n << "  "
             << join(r.params.generators, ",");
        line << "  " << r.params.generators[0] << "  " << r.type_computed << "  "
             << (r.mu_computed ? std::to_string(*r.mu_computed) : "-") << "  "
             << (r.mu_ge_n_plus_2 ? (*r.mu_ge_n_plus_2 ? "yes" : "NO") : "-") << "  "
             << (r.apery_match ? "ok" : "MISMATCH") << "  "
             << (r.pf_match ? "ok" : "MISMATCH");
        std::cout << line.str() << '\n';
    }
}

int finish_sweep(const std::string& command, int e, long long i_min, long long i_max,
                 std::vector<SweepRow> rows, Format format) {
    switch (format) {
        case Format::Json: {
            json rows_json = json::array();
            json disc = json::array();
            for (const SweepRow& row : rows) {
                rows_json.push_back(row_to_json(row));
                for (auto& d : row_discrepancies(row)) disc.push_back(std::move(d));
            }
            json params = {{"e", e}, {"i_min", i_min}, {"i_max", i_max}};
            json doc = {{"command", command},
                        {"params", params},
                        {"rows", rows_json},
                        {"discrepancies", disc}};
            std::cout << doc.dump(2) << '\n';
            break;
        }
        case Format::Csv: {
            print_csv_line(std::cout, csv_header(e));
            for (const SweepRow& row : rows) print_csv_line(std::cout, row_to_csv(row, e));
            break;
        }
        case Format::Text:
            print_text_rows(rows);
            break;
    }

    bool mismatch = false, resource = false;
    for (const SweepRow& row : rows) {
        if (row.report && !row.report->all_match()) mismatch = true;
        if (!row.error.empty()) resource = true;
    }
    if (mismatch) return kExitMismatch;
    if (resource) return kExitResource;
    return kExitOk;
}

std::pair<long long, long long> parse_i_spec(const std::string& spec) {
    auto dots = spec.find("..");
    try {
        if (dots == std::string::npos) {
            long long v = std::stoll(spec);
            return {v, v};
        }
        long long lo = std::stoll(spec.substr(0, dots));
        long long hi = std::stoll(spec.substr(dots + 2));
        if (lo > hi) throw sgforge::InvalidParams("empty index range: " + spec);
        return {lo, hi};
    } catch (const std::invalid_argument&) {
        throw sgforge::InvalidParams("cannot parse index spec: " + spec);
    } catch (const std::out_of_range&) {
        throw sgforge::InvalidParams("cannot parse index spec: " + spec);
    }
}

int run_sweep(const SweepOpts& o, const std::string& command) {
    auto [i_min, i_max] = parse_i_spec(o.i_spec);
    sgforge::VerifyOptions vopts;
    vopts.budget = o.budget();

    const std::size_t count = static_cast<std::size_t>(i_max - i_min + 1);
    std::vector<SweepRow> rows(count);

    unsigned threads = o.threads ? o.threads : std::thread::hardware_concurrency();
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));

    std::atomic<std::size_t> next{0};
    std::atomic<bool> invalid{false};
    std::string invalid_message;
    std::mutex invalid_mutex;

    auto worker = [&] {
        for (;;) {
            std::size_t k = next.fetch_add(1);
            if (k >= count || invalid.load()) return;
            long long index = i_min + static_cast<long long>(k);
            rows[k].index = index;
            try {
                rows[k].report = sgforge::verify_family(o.e, index, vopts);
            } catch (const sgforge::ResourceLimit& ex) {
                rows[k].error = ex.what();
            } catch (const sgforge::Error& ex) {
                std::scoped_lock lock(invalid_mutex);
                invalid = true;
                invalid_message = ex.what();
            }
        }
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (invalid) throw sgforge::InvalidParams(invalid_message);

    return finish_sweep(command, o.e, i_min, i_max, std::move(rows), o.parsed_format());
}

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--max-spairs", o.max_spairs,
                    "S-pair budget per Groebner run (also scales the "
                    "factorization budget)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical semigroup and monomial curve ideal toolkit"};
    app.require_subcommand(1);

    InvariantsOpts inv_opts;
    CLI::App* inv = app.add_subcommand(
        "invariants", "Frobenius, genus, type and pseudo-Frobenius set");
    inv->add_option("--gens", inv_opts.gens, "Semigroup generators")
        ->required()
        ->delimiter(',');
    inv->add_flag("--show-apery", inv_opts.show_apery,
                  "Include the Apery set of the multiplicity");
    add_common(inv, inv_opts);

    IdealOpts ideal_opts;
    CLI::App* ideal = app.add_subcommand(
        "ideal", "Certified generating set of the defining toric ideal");
    ideal->add_option("--gens", ideal_opts.gens, "Semigroup generators")
        ->required()
        ->delimiter(',');
    ideal->add_option("--strategy", ideal_opts.strategy, "Computation strategy")
        ->check(CLI::IsMember({"saturation", "elimination", "both"}));
    add_common(ideal, ideal_opts);

    SweepOpts verify_opts;
    CLI::App* verify = app.add_subcommand(
        "verify", "Check the closed forms of one family member");
    verify->add_option("--e", verify_opts.e, "Embedding dimension (4 or 5)")->required();
    verify->add_option("--i", verify_opts.i_spec, "Family index")->required();
    add_common(verify, verify_opts);

    SweepOpts sweep_opts;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "Check the closed forms across an index range");
    sweep->add_option("--e", sweep_opts.e, "Embedding dimension (4 or 5)")->required();
    sweep->add_option("--i", sweep_opts.i_spec, "Family index or range a..b");
    sweep->add_option("--i-range", sweep_opts.i_spec, "Family index range a..b");
    sweep->add_option("--threads", sweep_opts.threads, "Worker thread count");
    add_common(sweep, sweep_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (inv->parsed()) return run_invariants(inv_opts);
        if (ideal->parsed()) return run_ideal(ideal_opts);
        if (verify->parsed()) {
            if (verify_opts.i_spec.find("..") != std::string::npos)
                throw sgforge::InvalidParams("verify takes a single index; use sweep");
            return run_sweep(verify_opts, "verify");
        }
        if (sweep->parsed()) {
            if (sweep_opts.i_spec.empty())
                throw sgforge::InvalidParams("sweep requires --i or --i-range");
            return run_sweep(sweep_opts, "sweep");
        }
    } catch (const sgforge::ResourceLimit& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kExitResource;
    } catch (const sgforge::Error& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kExitInvalid;
    }
    return kExitInvalid;
}
