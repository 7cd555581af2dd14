// Command-line front end: line-sum reconstruction, stability reports,
// integer solutions, torus and continuous projections. JSON in, JSON
// (or CSV for grids) out.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "linesum/linesum.hpp"

namespace {

using namespace linesum;

struct Io {
    std::string input;   // empty: stdin
    std::string output;  // empty: stdout
    std::string format = "json";

    json read_json() const {
        if (input.empty()) return json::parse(std::cin);
        std::ifstream f(input);
        if (!f) throw ParseError("cannot open input file: " + input);
        return json::parse(f);
    }

    void write(const std::string& text) const {
        if (output.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(output);
        if (!f) throw ParseError("cannot open output file: " + output);
        f << text;
    }
};

template <class T>
std::string grid_csv(const Grid<T>& g) {
    std::ostringstream out;
    for (long j = 0; j < g.n(); ++j) {
        for (long i = 0; i < g.m(); ++i) {
            if (i) out << ",";
            if constexpr (std::is_same_v<T, Rational>)
                out << rational_to_string(g(i, j));
            else
                out << g(i, j);
        }
        out << "\n";
    }
    return out.str();
}

template <class T>
void emit_grid_result(const Io& io, const json& obj, const Grid<T>& grid) {
    if (io.format == "csv")
        io.write(grid_csv(grid));
    else
        io.write(obj.dump(2) + "\n");
}

void cmd_sums(const Io& io) {
    json in = io.read_json();
    long m = in.at("m").get<long>();
    long n = in.at("n").get<long>();
    auto grid = grid_from_json(in.at("grid"));
    if (grid.m() != m || grid.n() != n)
        throw ParseError("grid dimensions do not match m, n");
    std::vector<Direction> dirs;
    for (const auto& d : in.at("directions")) dirs.push_back(direction_from_json(d));
    DirectionSet S(std::move(dirs));
    auto table = compute_line_sums(grid, S);
    json dirs_json = json::array();
    for (const auto& d : S.directions) dirs_json.push_back({d.a, d.b});
    json out{{"m", m},
             {"n", n},
             {"directions", dirs_json},
             {"line_sums", line_sum_table_to_json(table)},
             {"total", rational_to_json(table.total)}};
    io.write(out.dump(2) + "\n");
}

void cmd_project(const Io& io, double tol) {
    auto inst = instance_from_json(io.read_json());
    if (inst.S.is_simple()) {
        auto res = project_simple(inst.row_sums(), inst.col_sums());
        json out{{"f0", grid_to_json(res.f0)},
                 {"norm_sq", rational_to_json(res.norm_sq)},
                 {"method", res.method},
                 {"residual", res.residual}};
        emit_grid_result(io, out, res.f0);
    } else {
        auto res = project_general(inst.float_sums(), inst.S, inst.m, inst.n, tol);
        json out{{"f0", grid_to_json(res.f0)},
                 {"norm_sq", res.norm_sq},
                 {"method", res.method},
                 {"residual", res.residual}};
        emit_grid_result(io, out, res.f0);
    }
}

template <class T>
json stability_json(const StabilityReport<T>& rep) {
    auto scalar = [](const T& v) -> json {
        if constexpr (std::is_same_v<T, Rational>)
            return rational_to_json(v);
        else
            return v;
    };
    return json{{"D", scalar(rep.D)},
                {"norm_sq_f0", scalar(rep.norm_sq_f0)},
                {"E", scalar(rep.E)},
                {"slack", scalar(rep.slack)},
                {"s", rep.s},
                {"t", rep.t},
                {"ties", rep.tie_positions.size()},
                {"F", grid_to_json(rep.F)}};
}

void cmd_stability(const Io& io, double tol) {
    auto inst = instance_from_json(io.read_json());
    if (inst.S.is_simple()) {
        auto res = project_simple(inst.row_sums(), inst.col_sums());
        auto rep = stability_bounds(res.f0, inst.sums.total);
        io.write(stability_json(rep).dump(2) + "\n");
    } else {
        auto res = project_general(inst.float_sums(), inst.S, inst.m, inst.n, tol);
        auto rep = stability_bounds(res.f0, to_double(inst.sums.total));
        io.write(stability_json(rep).dump(2) + "\n");
    }
}

void cmd_enumerate(const Io& io, long cap) {
    auto inst = instance_from_json(io.read_json());
    if (!inst.all_integer())
        throw IncompatibleLineSums("enumerate requires integer line sums");
    auto res =
        enumerate_binary_solutions(inst.integer_sums(), inst.S, inst.m, inst.n, cap);
    std::ostringstream out;
    for (const auto& g : res.solutions) out << grid_to_json(g).dump() << "\n";
    out << json{{"count", res.solutions.size()}, {"truncated", res.truncated}}.dump()
        << "\n";
    io.write(out.str());
}

void cmd_intsolve(const Io& io, double tol) {
    auto inst = instance_from_json(io.read_json());
    if (!inst.all_integer())
        throw IncompatibleLineSums("intsolve requires integer line sums");
    auto t = inst.integer_sums();
    json out;
    Grid<long> f;
    if (inst.S.is_simple()) {
        auto res = project_simple(inst.row_sums(), inst.col_sums());
        auto sol = shortest_integer_candidate(res, t, inst.S, inst.m, inst.n);
        f = sol.f;
        out = json{{"f", grid_to_json(sol.f)},
                   {"distance", sol.distance},
                   {"distance_sq", rational_to_json(sol.distance_sq)},
                   {"bound", sol.bound},
                   {"bound_sq", rational_to_json(sol.bound_sq)},
                   {"method", sol.method}};
    } else {
        auto res = project_general(inst.float_sums(), inst.S, inst.m, inst.n, tol);
        auto sol = shortest_integer_candidate(res, t, inst.S, inst.m, inst.n);
        f = sol.f;
        out = json{{"f", grid_to_json(sol.f)},
                   {"distance", sol.distance},
                   {"bound", sol.bound},
                   {"bound_sq", rational_to_json(sol.bound_sq)},
                   {"method", sol.method}};
    }
    emit_grid_result(io, out, f);
}

void cmd_torus_project(const Io& io) {
    auto inst = torus_instance_from_json(io.read_json());
    auto f0 = torus_project(inst);
    json out{{"f0", grid_to_json(f0)},
             {"norm_sq", rational_to_json(f0.norm_sq())}};
    emit_grid_result(io, out, f0);
}

void cmd_continuous_project(const Io& io) {
    auto [A, dims] = rect_union_from_json(io.read_json());
    auto f0 = continuous_project(A, dims.first, dims.second);
    json out{{"col_profile", step_profile_to_json(f0.col_profile)},
             {"row_profile", step_profile_to_json(f0.row_profile)},
             {"constant", rational_to_json(f0.constant)},
             {"norm_sq", rational_to_json(f0.norm_sq())}};
    io.write(out.dump(2) + "\n");
}

// Worked 6x5 example: row sums 5,4,3,2,1 and column sums 4,4,3,2,1,1.
void cmd_paper_example(const Io& io) {
    std::vector<Rational> rows{5, 4, 3, 2, 1};
    std::vector<Rational> cols{4, 4, 3, 2, 1, 1};
    auto res = project_simple(rows, cols);
    Rational D(15);
    auto rep = stability_bounds(res.f0, D);
    auto radius = binary_radius(res.norm_sq, D);
    Grid<long> table30(res.f0.m(), res.f0.n(), 0);
    for (long j = 0; j < res.f0.n(); ++j)
        for (long i = 0; i < res.f0.m(); ++i)
            table30(i, j) = rational_to_long(Rational(30) * res.f0(i, j));
    json out{{"table_30f0", grid_to_json(table30)},
             {"F", grid_to_json(rep.F)},
             {"D", rational_to_json(D)},
             {"norm_sq_f0", rational_to_json(res.norm_sq)},
             {"E", rational_to_json(rep.E)},
             {"slack", rational_to_json(rep.slack)},
             {"s", rep.s},
             {"t", rep.t},
             {"radicand", rational_to_json(radius.radicand)}};
    io.write(out.dump(2) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"line-sum reconstruction and stability toolkit"};
    app.require_subcommand(1);

    Io io;
    double tolerance = linesum::kCompatibilityTol;
    long cap = 10000;
    long seed = 0;
    app.add_option("-i,--input", io.input, "input file (default: stdin)");
    app.add_option("-o,--output", io.output, "output file (default: stdout)");
    app.add_option("--format", io.format, "output format: json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--tolerance", tolerance, "compatibility tolerance");
    app.add_option("--cap", cap, "solution cap for enumerate");
    app.add_option("--seed", seed, "seed for randomized tooling");

    auto* sums = app.add_subcommand("sums", "line sums of a grid");
    auto* project = app.add_subcommand("project", "minimum-norm real solution");
    auto* stability = app.add_subcommand("stability", "stability report");
    auto* enumerate = app.add_subcommand("enumerate", "all binary solutions");
    auto* intsolve = app.add_subcommand("intsolve", "integer solution near f0");
    auto* torus = app.add_subcommand("torus-project", "torus minimum-norm solution");
    auto* continuous =
        app.add_subcommand("continuous-project", "continuous simple-case f0");
    auto* paper = app.add_subcommand("paper-example", "run the worked 6x5 example");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sums->parsed()) cmd_sums(io);
        else if (project->parsed()) cmd_project(io, tolerance);
        else if (stability->parsed()) cmd_stability(io, tolerance);
        else if (enumerate->parsed()) cmd_enumerate(io, cap);
        else if (intsolve->parsed()) cmd_intsolve(io, tolerance);
        else if (torus->parsed()) cmd_torus_project(io);
        else if (continuous->parsed()) cmd_continuous_project(io);
        else if (paper->parsed()) cmd_paper_example(io);
        return 0;
    } catch (const linesum::ParseError& e) {
        std::cerr << json{{"error", e.code()}, {"detail", e.what()}}.dump() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << json{{"error", "parse_error"}, {"detail", e.what()}}.dump()
                  << "\n";
        return 2;
    } catch (const linesum::Error& e) {
        std::cerr << json{{"error", e.code()}, {"detail", e.what()}}.dump() << "\n";
        return 1;
    }
}
