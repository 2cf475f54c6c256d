#include "cli_app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <functional>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "fatpoints/json_io.hpp"
#include "fatpoints/mu_rank.hpp"
#include "fatpoints/oracle.hpp"
#include "fatpoints/resolution.hpp"

namespace fatpoints {

namespace {

std::int64_t parse_int(const std::string& tok) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw std::invalid_argument("not an integer: '" + tok + "'");
    return v;
}

std::vector<std::int64_t> parse_mult_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) out.push_back(parse_int(tok));
    if (out.empty()) throw std::invalid_argument("empty multiplicity list");
    return out;
}

DivisorClass class_from_values(const std::vector<std::int64_t>& vals) {
    // d followed by 1..8 multiplicities; missing ones are zero.
    if (vals.size() < 2 || vals.size() > 1 + kPoints)
        throw std::invalid_argument("expected d followed by 1 to 8 coefficients");
    DivisorClass f;
    f.d = vals[0];
    for (std::size_t i = 1; i < vals.size(); ++i) f.m[i - 1] = vals[i];
    return f;
}

void render_resolution_text(const GradedResolution& res, std::ostream& out) {
    out << "mults     ";
    for (auto m : res.mults) out << ' ' << m;
    out << "\nalpha      " << res.alpha << "\nhilbert   ";
    for (const auto& [t, h] : res.hilbert) out << ' ' << t << ':' << h;
    out << "\ngenerators";
    for (const auto& [t, v] : res.generators) out << ' ' << t << ':' << v;
    out << "\nsyzygies  ";
    for (const auto& [t, v] : res.syzygies) out << ' ' << t << ':' << v;
    out << "\nresolution 0 -> ";
    if (res.syzygies.empty()) {
        out << "0";
    } else {
        bool first = true;
        for (const auto& [t, v] : res.syzygies) {
            if (!first) out << " + ";
            out << "R(-" << t << ")^" << v;
            first = false;
        }
    }
    out << " -> ";
    bool first = true;
    for (const auto& [t, v] : res.generators) {
        if (!first) out << " + ";
        out << "R(-" << t << ")^" << v;
        first = false;
    }
    out << " -> I_Z -> 0\n";
}

void render_mu_text(const DivisorClass& input, const MuRankReport& rep, std::ostream& out) {
    out << "class " << to_string(input) << "\nker   " << rep.ker << "\ncok   " << rep.cok
        << "\ntrace\n";
    for (const MuTraceEvent& ev : rep.trace) {
        out << "  " << to_string(ev.kind) << "  at " << to_string(ev.cls);
        if (ev.subtracted) out << "  subtract " << to_string(ev.subtracted->cls);
        if (ev.kind == MuCase::case_c_ii) out << "  r=" << ev.r;
        out << "  [ker " << ev.ker << " cok " << ev.cok << "]\n";
    }
}

// Order-preserving parallel map used by batch mode; rethrows the first error.
template <typename Fn>
void parallel_indexed(std::size_t n, Fn&& fn) {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers = std::min<std::size_t>(hw, n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

int run_resolve(const std::string& mults_arg, const std::string& batch_path,
                const std::string& format, std::ostream& out) {
    if (!batch_path.empty()) {
        std::ifstream in(batch_path);
        if (!in) throw std::invalid_argument("cannot open batch file: " + batch_path);
        std::vector<std::vector<std::int64_t>> jobs;
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const auto start = line.find_first_not_of(" \t\r");
            if (start == std::string::npos || line[start] == '#') continue;
            try {
                jobs.push_back(parse_mult_list(line.substr(start)));
                (void)FatPointScheme::from(jobs.back());
            } catch (const std::invalid_argument& e) {
                throw std::invalid_argument("batch line " + std::to_string(lineno) + ": " +
                                            e.what());
            }
        }
        std::vector<std::string> results(jobs.size());
        parallel_indexed(jobs.size(), [&](std::size_t i) {
            const GradedResolution res = resolution(FatPointScheme::from(jobs[i]));
            results[i] = render(res).dump();
        });
        for (const auto& r : results) out << r << '\n';
        return 0;
    }
    const GradedResolution res = resolution(FatPointScheme::from(parse_mult_list(mults_arg)));
    if (format == "json")
        out << render(res).dump() << '\n';
    else
        render_resolution_text(res, out);
    return 0;
}

int run_oracle_check(std::int64_t max_mult, std::int64_t tmax, std::uint64_t prime,
                     std::uint64_t seed, const std::string& mults_arg, std::ostream& out) {
    const OracleInstance inst = make_oracle(prime, seed);
    std::vector<std::vector<std::int64_t>> jobs;
    if (!mults_arg.empty()) {
        jobs.push_back(parse_mult_list(mults_arg));
    } else {
        // all monotone multiplicity vectors with entries in 0..max_mult
        std::vector<std::int64_t> cur(kPoints, 0);
        const std::function<void(int, std::int64_t)> rec = [&](int pos, std::int64_t hi) {
            if (pos == kPoints) {
                jobs.push_back(cur);
                return;
            }
            for (std::int64_t v = hi; v >= 0; --v) {
                cur[pos] = v;
                rec(pos + 1, v);
            }
        };
        rec(0, max_mult);
    }
    bool all_ok = true;
    for (const auto& mults : jobs) {
        const FatPointScheme z = FatPointScheme::from(mults);
        const std::int64_t stop = tmax > 0 ? tmax : nef_degree(z) + 3;
        const CompareReport rep = compare(inst, mults, stop);
        for (const CompareLine& line : rep.lines) out << render(line).dump() << '\n';
        if (!rep.ok()) all_ok = false;
    }
    return all_ok ? 0 : 3;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hilbert functions, multiplication-map ranks and minimal free resolutions "
                 "of fat point ideals at up to 8 general points of the plane"};
    app.require_subcommand(1);

    std::string mults_arg, batch_path, format = "text", kind, oracle_mults;
    std::vector<std::int64_t> class_values;
    std::int64_t from_t = 0, to_t = -1, max_mult = 3, tmax = 0;
    std::uint64_t prime = 1'000'003, seed = 1;
    bool cone_list = false;

    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* resolve = app.add_subcommand(
        "resolve", "minimal free resolution of m1 p1 + ... + mk pk (k <= 8)");
    resolve->add_option("mults", mults_arg, "comma-separated multiplicities, e.g. 2,1,1");
    resolve->add_option("--batch", batch_path, "CSV file, one multiplicity list per line");
    add_format(resolve);

    CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert function values of the ideal");
    hilbert->add_option("mults", mults_arg)->required();
    hilbert->add_option("--from", from_t, "first degree (default 0)");
    hilbert->add_option("--to", to_t, "last degree (default: resolution window end)");
    add_format(hilbert);

    CLI::App* h0cmd = app.add_subcommand(
        "h0", "sections of the class dL - m1 E1 - ... - m8 E8 (args: d m1 ... m8)");
    h0cmd->add_option("values", class_values)->expected(2, 1 + kPoints);
    add_format(h0cmd);

    CLI::App* mucmd = app.add_subcommand(
        "mu", "kernel/cokernel of the multiplication map for d m1 ... m8, with dispatch trace");
    mucmd->add_option("values", class_values)->expected(2, 1 + kPoints);
    add_format(mucmd);

    CLI::App* curves = app.add_subcommand("curves", "dump a curve table");
    curves->add_option("--kind", kind, "exceptional or square-zero")
        ->required()
        ->check(CLI::IsMember({"exceptional", "square-zero"}));
    add_format(curves);

    CLI::App* cone = app.add_subcommand(
        "cone", "generators of the monotone nef nearly-uniform cone, as triples (d,a,b)");
    cone->add_flag("--list", cone_list, "list the generators");
    add_format(cone);

    CLI::App* oracle = app.add_subcommand(
        "oracle-check", "compare the engine against the finite-field brute force");
    oracle->add_option("--max-mult", max_mult, "sweep multiplicities up to this value");
    oracle->add_option("--tmax", tmax, "compare degrees 0..tmax (default: per-scheme window)");
    oracle->add_option("--prime", prime, "field modulus");
    oracle->add_option("--seed", seed, "point seed");
    oracle->add_option("--mults", oracle_mults, "check a single multiplicity list");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        if (resolve->parsed()) {
            if (mults_arg.empty() && batch_path.empty())
                throw std::invalid_argument("resolve: multiplicities or --batch required");
            return run_resolve(mults_arg, batch_path, format, out);
        }
        if (hilbert->parsed()) {
            const FatPointScheme z = FatPointScheme::from(parse_mult_list(mults_arg));
            const std::int64_t last = to_t >= 0 ? to_t : nef_degree(z) + 3;
            if (last < from_t) throw std::invalid_argument("hilbert: empty degree range");
            if (format == "json") {
                nlohmann::ordered_json j;
                j["mults"] = z.mults;
                nlohmann::ordered_json values = nlohmann::ordered_json::array();
                for (std::int64_t t = from_t; t <= last; ++t)
                    values.push_back({t, hilbert_function(z, t)});
                j["hilbert"] = std::move(values);
                out << j.dump() << '\n';
            } else {
                for (std::int64_t t = from_t; t <= last; ++t)
                    out << t << ' ' << hilbert_function(z, t) << '\n';
            }
            return 0;
        }
        if (h0cmd->parsed()) {
            const DivisorClass f = class_from_values(class_values);
            if (format == "json") {
                nlohmann::ordered_json j;
                j["class"] = render(f);
                j["h0"] = h0(f);
                out << j.dump() << '\n';
            } else {
                out << h0(f) << '\n';
            }
            return 0;
        }
        if (mucmd->parsed()) {
            const DivisorClass f = class_from_values(class_values);
            const MuRankReport rep = mu_rank(f);
            if (format == "json")
                out << render(rep, f).dump() << '\n';
            else
                render_mu_text(f, rep, out);
            return 0;
        }
        if (curves->parsed()) {
            const auto& table =
                kind == "exceptional" ? exceptional_curves() : square_zero_curves();
            if (format == "json") {
                nlohmann::ordered_json j;
                j["kind"] = kind;
                j["count"] = table.size();
                nlohmann::ordered_json rows = nlohmann::ordered_json::array();
                for (const CurveClass& c : table) rows.push_back(render(c));
                j["curves"] = std::move(rows);
                out << j.dump() << '\n';
            } else {
                for (const CurveClass& c : table)
                    out << to_string(c.cls) << "  lambda=" << c.lambda
                        << " Lambda=" << c.Lambda << " m_C=" << c.max_point_mult << '\n';
                out << "count " << table.size() << '\n';
            }
            return 0;
        }
        if (cone->parsed()) {
            const auto& gens = nearly_uniform_nef_generators();
            if (format == "json") {
                nlohmann::ordered_json rows = nlohmann::ordered_json::array();
                for (const Triple& g : gens) rows.push_back({g.d, g.a, g.b});
                nlohmann::ordered_json j;
                j["generators"] = std::move(rows);
                out << j.dump() << '\n';
            } else {
                for (const Triple& g : gens)
                    out << g.d << ' ' << g.a << ' ' << g.b << '\n';
            }
            return 0;
        }
        if (oracle->parsed())
            return run_oracle_check(max_mult, tmax, prime, seed, oracle_mults, out);
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << "error: no subcommand\n";
    return 1;
}

}  // namespace fatpoints
