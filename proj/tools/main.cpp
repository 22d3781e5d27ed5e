// Command line front end: enumeration, rook and switching polynomials,
// Groebner bases of inner-2-minor ideals, Hilbert series data, the convex
// recursion, and the conjecture verification harness.

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rookpoly/algebra.hpp"
#include "rookpoly/convex.hpp"
#include "rookpoly/enumerate.hpp"
#include "rookpoly/grid.hpp"
#include "rookpoly/hilbert.hpp"
#include "rookpoly/rook.hpp"
#include "rookpoly/switching.hpp"
#include "rookpoly/verify.hpp"

namespace {

using namespace rookpoly;

std::ostream& open_sink(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path, std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

int run_enumerate(const std::string& kind_name, int rank, const std::string& out_path,
                  bool count_only) {
    const ShapeKind kind = parse_shape_kind(kind_name);
    if (count_only) {
        std::cout << count_shapes(kind, rank) << '\n';
        return 0;
    }
    std::vector<CellCollection> shapes = enumerate_shapes(kind, rank);
    std::ofstream file;
    std::ostream& out = open_sink(out_path, file);
    for (const CellCollection& p : shapes) out << format_collection(p) << '\n';
    return 0;
}

int run_rook(const std::string& input, bool polynomial, bool number) {
    if (!polynomial && !number) polynomial = true;
    for (const CellCollection& p : read_dataset(input)) {
        std::cout << canonical_key(p);
        if (polynomial) std::cout << '\t' << rook_polynomial(p).csv();
        if (number) std::cout << '\t' << rook_number(p);
        std::cout << '\n';
    }
    return 0;
}

int run_switch(const std::string& input) {
    for (const CellCollection& p : read_dataset(input)) {
        SwitchReport report = switching_rook_number_report(p);
        std::cout << canonical_key(p) << '\t' << report.switching_polynomial.csv() << '\t'
                  << report.rook_number << '\n';
    }
    return 0;
}

int run_ideal(const std::string& input, const std::string& order_name, bool basis, bool initial,
              bool sharp) {
    const TermOrder order = parse_term_order(order_name);
    if (!basis && !initial && !sharp) basis = true;
    for (const CellCollection& p : read_dataset(input)) {
        std::cout << canonical_key(p);
        if (sharp) {
            const bool value =
                order == TermOrder::rev ? satisfies_sharp(p) : satisfies_sharp_prime(p);
            std::cout << "\tsharp=" << int(value);
        }
        if (basis || initial) {
            VariableTable vars(p);
            std::vector<Binomial> gb = buchberger(generators(p, order, vars), order);
            if (basis) {
                std::cout << '\t';
                for (std::size_t k = 0; k < gb.size(); ++k) {
                    if (k) std::cout << "; ";
                    std::cout << gb[k].lead.str(vars) << " - " << gb[k].trail.str(vars);
                }
            }
            if (initial) {
                std::cout << '\t';
                std::vector<Monomial> leads;
                for (Binomial& g : gb) leads.push_back(std::move(g.lead));
                MonomialIdeal ideal = MonomialIdeal::minimal(std::move(leads));
                for (std::size_t k = 0; k < ideal.gens.size(); ++k) {
                    if (k) std::cout << "; ";
                    std::cout << ideal.gens[k].str(vars);
                }
            }
        }
        std::cout << '\n';
    }
    return 0;
}

int run_hpoly(const std::string& input, const std::string& order_name) {
    const TermOrder order = parse_term_order(order_name);
    for (const CellCollection& p : read_dataset(input)) {
        SeriesResult series = h_polynomial(p, order);
        std::cout << canonical_key(p) << '\t' << series.h_poly.csv() << '\t' << series.krull_dim
                  << '\t' << series.h_poly.degree() << '\n';
    }
    return 0;
}

int run_convex_h(const std::string& input) {
    for (const CellCollection& p : read_dataset(input)) {
        RecursiveH result = recursive_h(p);
        std::cout << canonical_key(p) << '\t' << result.h.csv() << '\t'
                  << (result.certified ? "certified" : "uncertified") << '\n';
        if (!result.certified)
            std::cerr << canonical_key(p) << ": " << result.diagnostic << '\n';
    }
    return 0;
}

int run_verify(const std::string& kind_name, int rank, int jobs, const std::string& dataset,
               const std::string& report_path, const std::string& resume_path,
               int timeout_seconds) {
    const ShapeKind kind = parse_shape_kind(kind_name);
    VerifyOptions options;
    options.jobs = jobs;
    options.dataset_path = dataset;
    options.checkpoint_path = resume_path;
    options.per_shape_timeout = std::chrono::seconds(timeout_seconds);
    VerifySummary summary = test_conjecture(kind, rank, options);
    std::ofstream file;
    std::ostream& out = open_sink(report_path, file);
    out << render_report(summary);
    return summary.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rook polynomials, switching rook polynomials and Hilbert series data of "
                 "collections of cells"};
    app.require_subcommand(1);

    std::string kind = "polyomino", input, out_path, order = "rev", dataset, report, resume;
    int rank = 1, jobs = 1, timeout_seconds = 60;
    bool count_only = false, polynomial = false, number = false;
    bool basis = false, initial = false, sharp = false;

    auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate shapes up to symmetry");
    enumerate_cmd->add_option("--kind", kind, "polyomino|collection")->required();
    enumerate_cmd->add_option("--rank", rank, "number of cells")->required();
    enumerate_cmd->add_option("--out", out_path, "output file (default stdout)");
    enumerate_cmd->add_flag("--count-only", count_only, "print only the count");

    auto* rook_cmd = app.add_subcommand("rook", "Rook polynomials of the input shapes");
    rook_cmd->add_option("--input", input, "dataset file, one shape per line")->required();
    rook_cmd->add_flag("--polynomial", polynomial, "emit the coefficient list (default)");
    rook_cmd->add_flag("--number", number, "emit the rook number");

    auto* switch_cmd = app.add_subcommand("switch", "Switching rook polynomials");
    switch_cmd->add_option("--input", input, "dataset file")->required();

    auto* ideal_cmd = app.add_subcommand("ideal", "Inner-2-minor ideals and Groebner bases");
    ideal_cmd->add_option("--input", input, "dataset file")->required();
    ideal_cmd->add_option("--order", order, "rev|lex")->required();
    ideal_cmd->add_flag("--basis", basis, "emit the reduced Groebner basis (default)");
    ideal_cmd->add_flag("--initial", initial, "emit the initial ideal generators");
    ideal_cmd->add_flag("--sharp", sharp, "emit whether the generators already form the basis");

    auto* hpoly_cmd = app.add_subcommand("hpoly", "h-polynomials via the series pipeline");
    hpoly_cmd->add_option("--input", input, "dataset file")->required();
    hpoly_cmd->add_option("--order", order, "rev|lex");

    auto* convex_cmd = app.add_subcommand("convex-h", "h-polynomials via the convex recursion");
    convex_cmd->add_option("--input", input, "dataset file")->required();

    auto* verify_cmd =
        app.add_subcommand("verify", "Compare switching rook polynomials with h-polynomials");
    verify_cmd->add_option("--kind", kind, "polyomino|collection")->required();
    verify_cmd->add_option("--rank", rank, "number of cells")->required();
    verify_cmd->add_option("--jobs", jobs, "parallel workers");
    verify_cmd->add_option("--dataset", dataset, "verify shapes from this file instead");
    verify_cmd->add_option("--report", report, "write the report here (default stdout)");
    verify_cmd->add_option("--resume", resume, "checkpoint file to resume and update");
    verify_cmd->add_option("--timeout", timeout_seconds, "per-shape budget in seconds");

    CLI11_PARSE(app, argc, argv);

    try {
        if (enumerate_cmd->parsed()) return run_enumerate(kind, rank, out_path, count_only);
        if (rook_cmd->parsed()) return run_rook(input, polynomial, number);
        if (switch_cmd->parsed()) return run_switch(input);
        if (ideal_cmd->parsed()) return run_ideal(input, order, basis, initial, sharp);
        if (hpoly_cmd->parsed()) return run_hpoly(input, order);
        if (convex_cmd->parsed()) return run_convex_h(input);
        if (verify_cmd->parsed())
            return run_verify(kind, rank, jobs, dataset, report, resume, timeout_seconds);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
