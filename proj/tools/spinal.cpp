// Command-line front end for the multi-EGS toolkit.
//
// Exit codes: 0 success, 1 negative answer, 2 usage or parse error,
// 3 internal bound exceeded.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "spinal/spinal.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kBound = 3;

spinal::Datum load_datum(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw spinal::Error(spinal::ErrorKind::MalformedDocument, "cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return spinal::parse_datum(buf.str());
}

spinal::GroupWord load_word(const std::string& text, const spinal::Datum& d) {
    std::vector<std::string> warnings;
    auto w = spinal::parse_word(text, d, &warnings);
    for (const auto& msg : warnings) std::cerr << "warning: " << msg << "\n";
    return w;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in multi-EGS groups acting on p-ary trees"};
    app.require_subcommand(1);

    std::string datum_path, word, left, right, vertex, format = "text", dot_file;
    std::size_t max_size = 0, samples = 200;
    std::uint32_t iterate = 1, quasi_k = 0, kmax = 2, lmax = 3;
    std::uint64_t seed = 1;
    bool json = false;

    auto add_datum = [&](CLI::App* sub) { sub->add_option("datum", datum_path, "Datum JSON file")->required(); };

    auto* validate = app.add_subcommand("validate", "Check a datum file");
    add_datum(validate);

    auto* lift = app.add_subcommand("lift-check", "Search for a liftability witness");
    add_datum(lift);
    lift->add_flag("--json", json, "Print the JSON witness report");

    auto* sigma_cmd = app.add_subcommand("sigma", "Apply the lifting endomorphism");
    add_datum(sigma_cmd);
    sigma_cmd->add_option("--word", word)->required();
    sigma_cmd->add_option("--iterate", iterate, "Number of applications")->check(CLI::NonNegativeNumber);

    auto* nucleus_cmd = app.add_subcommand("nucleus", "Compute the contracting nucleus");
    add_datum(nucleus_cmd);
    nucleus_cmd->add_option("--verify-quasinucleus", quasi_k, "Also check the quasinucleus condition at depth K");
    nucleus_cmd->add_option("--max-size", max_size, "Closure size bound");
    nucleus_cmd->add_option("--dot", dot_file, "Write the section graph in DOT format");

    auto* wp = app.add_subcommand("wp", "Word problem: exit 0 if trivial, 1 otherwise");
    add_datum(wp);
    wp->add_option("--word", word)->required();

    auto* eq = app.add_subcommand("eq", "Element equality: exit 0 if equal, 1 otherwise");
    add_datum(eq);
    eq->add_option("--left", left)->required();
    eq->add_option("--right", right)->required();

    auto* section_cmd = app.add_subcommand("section", "Section of a word at a vertex");
    add_datum(section_cmd);
    section_cmd->add_option("--word", word)->required();
    section_cmd->add_option("--vertex", vertex, "Digit string")->required();

    auto* act_cmd = app.add_subcommand("act", "Image of a vertex");
    add_datum(act_cmd);
    act_cmd->add_option("--word", word)->required();
    act_cmd->add_option("--on", vertex, "Digit string")->required();

    auto* portrait_cmd = app.add_subcommand("portrait", "Nucleus portrait of a word");
    add_datum(portrait_cmd);
    portrait_cmd->add_option("--word", word)->required();
    portrait_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "dot"}));

    auto* orbit = app.add_subcommand("orbit", "Orbit of the HNN extension on a ball of the unrooted tree");
    add_datum(orbit);
    orbit->add_option("--kmax", kmax)->required();
    orbit->add_option("--lmax", lmax)->required();
    orbit->add_flag("--json", json);

    auto* gap = app.add_subcommand("export-gap", "Print the wreath recursion as a GAP declaration");
    add_datum(gap);

    auto* selftest = app.add_subcommand("selftest", "Run the property suites on a datum");
    add_datum(selftest);
    selftest->add_option("--seed", seed);
    selftest->add_option("--samples", samples);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        const spinal::Datum d = load_datum(datum_path);
        const spinal::WreathTable t = spinal::build_recursion(d);
        auto fmt = [&](const spinal::GroupWord& w) { return spinal::format_word(w, d); };

        if (*validate) {
            std::cout << "valid: p = " << d.p() << ", r = (";
            for (std::uint32_t l = 1; l <= d.p(); ++l) std::cout << (l > 1 ? "," : "") << d.r(l);
            std::cout << "), nucleus size " << spinal::nucleus_size(d) << (d.is_egs() ? ", EGS" : "") << "\n";
            return kOk;
        }

        if (*lift) {
            const auto w = spinal::find_lifting_witness(d, t);
            std::optional<spinal::Endomorphism> sigma;
            if (w) sigma = spinal::build_sigma(d, t, *w);
            if (json) {
                std::cout << spinal::witness_report_json(d, w, sigma ? &*sigma : nullptr) << "\n";
            } else if (w) {
                std::cout << "witness: m=" << w->m << " k=" << w->k << " j=" << w->j << " f=" << w->f << " s=" << w->s
                          << "\n";
                for (const auto& g : d.generators())
                    std::cout << "sigma(" << spinal::format_base(g, &d) << ") = " << fmt(sigma->image(g)) << "\n";
            } else {
                std::cout << "no witness: the sufficient condition is not satisfied\n";
            }
            return w ? kOk : kNegative;
        }

        if (*sigma_cmd) {
            const auto w = spinal::find_lifting_witness(d, t);
            if (!w) {
                std::cerr << "no lifting witness for this datum\n";
                return kNegative;
            }
            const auto sigma = spinal::build_sigma(d, t, *w);
            auto g = load_word(word, d);
            for (std::uint32_t n = 0; n < iterate; ++n) g = spinal::apply_sigma(sigma, g);
            std::cout << fmt(g) << "\n";
            return kOk;
        }

        if (*nucleus_cmd) {
            const auto n = spinal::compute_nucleus(t, max_size ? max_size : spinal::default_max_size(d));
            for (const auto& w : n.elements) std::cout << fmt(w) << "\n";
            if (!dot_file.empty()) {
                std::ofstream out(dot_file);
                out << spinal::nucleus_dot(n, fmt);
            }
            if (quasi_k > 0) {
                const bool ok = spinal::verify_quasinucleus(n.elements, quasi_k, t);
                std::cerr << "quasinucleus at depth " << quasi_k << ": " << (ok ? "yes" : "no") << "\n";
                return ok ? kOk : kNegative;
            }
            return kOk;
        }

        if (*wp) {
            const bool trivial = spinal::is_trivial(load_word(word, d), t);
            std::cout << (trivial ? "trivial" : "nontrivial") << "\n";
            return trivial ? kOk : kNegative;
        }

        if (*eq) {
            const bool same = spinal::are_equal(load_word(left, d), load_word(right, d), t);
            std::cout << (same ? "equal" : "distinct") << "\n";
            return same ? kOk : kNegative;
        }

        if (*section_cmd) {
            std::cout << fmt(spinal::section_at(load_word(word, d), spinal::parse_vertex(vertex, d.p()), t)) << "\n";
            return kOk;
        }

        if (*act_cmd) {
            const auto v = spinal::apply(load_word(word, d), spinal::parse_vertex(vertex, d.p()), t);
            std::cout << (v.empty() ? "-" : spinal::format_vertex(v)) << "\n";
            return kOk;
        }

        if (*portrait_cmd) {
            const auto n = spinal::compute_nucleus(t, spinal::default_max_size(d));
            const auto pt = spinal::portrait(load_word(word, d), n, t);
            std::cout << (format == "dot" ? spinal::portrait_dot(pt, n, d) : spinal::portrait_text(pt, n, d));
            return kOk;
        }

        if (*orbit) {
            const auto w = spinal::find_lifting_witness(d, t);
            if (!w) {
                std::cerr << "no lifting witness for this datum\n";
                return kNegative;
            }
            const spinal::HnnAction act(t, spinal::build_sigma(d, t, *w));
            const auto report = spinal::orbit_ball(act, act.alphabet(), {0, {}}, kmax, lmax);
            if (json) {
                std::cout << spinal::orbit_report_json(report) << "\n";
            } else {
                std::cout << "reached " << report.reached << " of " << report.total << " canonical vertices"
                          << (report.transitive_on_ball() ? " (transitive on ball)" : "") << "\n";
                for (const auto& v : report.missed) std::cout << "missed " << spinal::format_hnn_vertex(v) << "\n";
            }
            return report.transitive_on_ball() ? kOk : kNegative;
        }

        if (*gap) {
            std::cout << spinal::export_gap(d);
            return kOk;
        }

        if (*selftest) {
            bool all = true;
            for (const auto& r : spinal::run_selftest(d, {seed, samples, 8})) {
                std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
                all = all && r.passed;
            }
            return all ? kOk : kNegative;
        }
    } catch (const spinal::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.is_bound_error() ? kBound : kUsage;
    }
    return kUsage;
}
