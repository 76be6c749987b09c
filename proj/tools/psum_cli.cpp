// psum: permanental sums and polynomials of simple graphs, extremal
// family constructors, exhaustive enumeration and claim verification.
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "psum/bigint.hpp"
#include "psum/bounds.hpp"
#include "psum/canonical.hpp"
#include "psum/enumerate.hpp"
#include "psum/families.hpp"
#include "psum/graph6.hpp"
#include "psum/recursive.hpp"
#include "psum/ryser.hpp"
#include "psum/sachs.hpp"
#include "psum/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;     // verification failure or engine disagreement
constexpr int kExitParse = 2;    // malformed input, unknown family or claim
constexpr int kExitLimit = 3;    // engine/generator size limit exceeded
constexpr int kExitRange = 4;    // claim out of its verifiable range

struct InputOpts {
    std::string g6;
    std::string file;
    std::string family;
};

std::vector<psum::Graph> load_inputs(const InputOpts& in) {
    std::vector<psum::Graph> graphs;
    if (!in.family.empty()) {
        graphs.push_back(psum::build_family(psum::parse_family(in.family)));
    } else if (!in.g6.empty()) {
        graphs.push_back(psum::decode_graph6(in.g6));
    } else if (!in.file.empty()) {
        std::ifstream f(in.file);
        if (!f) throw psum::ParseError("cannot open file: " + in.file);
        std::string line;
        int lineno = 0;
        while (std::getline(f, line)) {
            ++lineno;
            if (line.empty()) continue;
            try {
                graphs.push_back(psum::decode_graph6(line));
            } catch (const psum::ParseError& e) {
                throw psum::ParseError(in.file + ":" + std::to_string(lineno) + ": " + e.what());
            }
        }
    } else {
        throw psum::ParseError("no input: use --graph6, --file or --family");
    }
    return graphs;
}

void add_input_opts(CLI::App* cmd, InputOpts& in) {
    auto* a = cmd->add_option("--graph6", in.g6, "inline graph6 text");
    auto* b = cmd->add_option("--file", in.file, "file with one graph6 line per graph");
    auto* c = cmd->add_option("--family", in.family, "family spec, e.g. \"B1(3,4)\"");
    a->excludes(b)->excludes(c);
    b->excludes(c);
}

psum::Int run_engine(const std::string& engine, const psum::Graph& g) {
    if (engine == "sachs") return psum::ps_sachs(g);
    if (engine == "permanent") return psum::ps_permanent(g);
    return psum::ps_recursive(g);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"permanental sums of simple graphs: exact engines, extremal "
                 "families, enumeration and claim verification"};
    app.require_subcommand(1);

    InputOpts ps_in, poly_in;
    std::string ps_engine = "recursive";
    auto* ps_cmd = app.add_subcommand("ps", "permanental sum PS(G)");
    add_input_opts(ps_cmd, ps_in);
    ps_cmd->add_option("--engine", ps_engine, "sachs|permanent|recursive|all")
        ->check(CLI::IsMember({"sachs", "permanent", "recursive", "all"}));

    std::string poly_engine = "sachs";
    auto* poly_cmd = app.add_subcommand("poly", "coefficients b_0..b_n of per(xI-A)");
    add_input_opts(poly_cmd, poly_in);
    poly_cmd->add_option("--engine", poly_engine, "sachs|permanent")
        ->check(CLI::IsMember({"sachs", "permanent"}));

    std::string family_text;
    auto* family_cmd = app.add_subcommand("family", "print the graph6 of a family instance");
    family_cmd->add_option("spec", family_text, "family spec, e.g. \"B3(1,1,0)\"")->required();

    std::string enum_class = "bicyclic", enum_format = "text";
    int enum_n = 0;
    std::size_t enum_top = SIZE_MAX;
    auto* enum_cmd = app.add_subcommand("enumerate", "exhaustively enumerate a graph class");
    enum_cmd->add_option("--class", enum_class, "tree|forest|unicyclic|bicyclic")
        ->check(CLI::IsMember({"tree", "forest", "unicyclic", "bicyclic"}));
    enum_cmd->add_option("--n", enum_n, "order")->required();
    enum_cmd->add_option("--top", enum_top, "keep only the top-k by PS");
    enum_cmd->add_option("--format", enum_format, "text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    std::string verify_claim, verify_format = "text";
    int verify_n = -1, verify_nmin = -1, verify_nmax = -1;
    auto* verify_cmd = app.add_subcommand("verify", "machine-check an extremal claim");
    verify_cmd->add_option("--claim", verify_claim, "claim id, e.g. thm1.3")->required();
    verify_cmd->add_option("--n", verify_n, "single order");
    verify_cmd->add_option("--n-min", verify_nmin, "first order");
    verify_cmd->add_option("--n-max", verify_nmax, "last order");
    verify_cmd->add_option("--format", verify_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (ps_cmd->parsed()) {
            bool disagree = false;
            for (const auto& g : load_inputs(ps_in)) {
                if (ps_engine == "all") {
                    psum::Int a = psum::ps_sachs(g), b = psum::ps_permanent(g),
                              c = psum::ps_recursive(g);
                    std::cout << a << '\n' << b << '\n' << c << '\n';
                    disagree = disagree || a != b || b != c;
                } else {
                    std::cout << run_engine(ps_engine, g) << '\n';
                }
            }
            return disagree ? kExitFail : kExitOk;
        }
        if (poly_cmd->parsed()) {
            for (const auto& g : load_inputs(poly_in)) {
                psum::Polynomial p = (poly_engine == "permanent")
                                         ? psum::coefficients_permanent(g)
                                         : psum::coefficients_sachs(g);
                for (std::size_t k = 0; k < p.coeff.size(); ++k)
                    std::cout << (k ? "," : "") << p.coeff[k];
                std::cout << '\n';
            }
            return kExitOk;
        }
        if (family_cmd->parsed()) {
            std::cout << psum::encode_graph6(psum::build_family(psum::parse_family(family_text)))
                      << '\n';
            return kExitOk;
        }
        if (enum_cmd->parsed()) {
            std::vector<psum::Graph> graphs;
            std::string cls = enum_class;
            if (enum_class == "tree") graphs = psum::enumerate_trees(enum_n);
            else if (enum_class == "forest") graphs = psum::enumerate_forests(enum_n);
            else if (enum_class == "unicyclic") graphs = psum::enumerate_unicyclic(enum_n);
            else { graphs = psum::enumerate_bicyclic(enum_n); cls = "auto"; }
            auto records = psum::rank(psum::make_records(graphs, cls), enum_top);
            if (enum_format == "csv") {
                std::cout << psum::to_csv(records);
            } else if (enum_format == "json") {
                std::cout << psum::to_json(records) << '\n';
            } else {
                for (const auto& r : records)
                    std::cout << r.rank << ' ' << r.g6 << ' ' << r.cls << ' ' << r.ps << '\n';
            }
            return kExitOk;
        }
        if (verify_cmd->parsed()) {
            int lo = verify_n >= 0 ? verify_n : verify_nmin;
            int hi = verify_n >= 0 ? verify_n : verify_nmax;
            if (lo < 0 || hi < lo) throw psum::ParseError("verify: give --n or --n-min/--n-max");
            bool all_pass = true, any_range = false;
            for (int n = lo; n <= hi; ++n) {
                psum::VerificationReport rep = psum::verify(verify_claim, n);
                std::cout << (verify_format == "json" ? psum::to_json(rep) : psum::to_text(rep))
                          << '\n';
                if (rep.unverifiable()) any_range = true;
                else all_pass = all_pass && rep.pass;
            }
            if (any_range) return kExitRange;
            return all_pass ? kExitOk : kExitFail;
        }
    } catch (const psum::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const psum::LimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitLimit;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    }
    return kExitOk;
}
