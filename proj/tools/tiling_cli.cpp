#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tiling/distinctlen.hpp"
#include "tiling/enumerate.hpp"
#include "tiling/json_io.hpp"
#include "tiling/render.hpp"

namespace {

constexpr const char* kVersion = "tiling 1.0 (format-schema 1)";

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw tiling::error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spill(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw tiling::error("cannot write " + path);
    out << data;
}

tiling::Diagram load_diagram(const std::string& path) {
    tiling::Diagram d;
    tiling::VertexSet v;
    if (tiling::parse_diagram_or_vertexset(slurp(path), d, v)) return d;
    return tiling::vertexset_to_diagram(v);
}

void print_report(const char* label, const tiling::ValidityReport& r) {
    std::cout << label << ": " << (r.ok() ? "pass" : "fail") << "\n";
    for (const auto& v : r.violations)
        std::cout << "  " << v.condition << ": " << v.witness << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"Edge-to-edge tilings of closed surfaces by congruent n-gons"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "Enumerate tilings as JSONL records");
    int n = 7, f = 2, split = -1, threads = 1;
    std::string mode = "general", surface, out_path;
    bool no_angle_filter = false;
    cmd_enum->add_option("--n", n, "polygon size")->required();
    cmd_enum->add_option("--f", f, "number of tiles");
    cmd_enum->add_option("--mode", mode)->check(CLI::IsMember({"general", "orientable"}));
    cmd_enum->add_option("--split", split, "|T+| in orientable mode");
    cmd_enum->add_option("--surface", surface, "target surface, e.g. 3P2");
    cmd_enum->add_flag("--no-angle-filter", no_angle_filter);
    cmd_enum->add_option("--out", out_path, "output file (default stdout)");
    cmd_enum->add_option("--threads", threads);

    // table
    auto* cmd_table = app.add_subcommand("table", "Count tilings by number of edge lengths (CSV)");
    std::string t_surface, t_modes = "auto";
    int t_n = 7, t_f = 2, t_threads = 1;
    cmd_table->add_option("--n", t_n)->required();
    cmd_table->add_option("--f", t_f);
    cmd_table->add_option("--surface", t_surface)->required();
    cmd_table->add_option("--modes", t_modes)->check(CLI::IsMember({"auto", "all"}));
    cmd_table->add_option("--threads", t_threads);

    // convert
    auto* cmd_conv = app.add_subcommand("convert", "Convert between diagram and vertex set");
    std::string c_in, c_to;
    cmd_conv->add_option("--in", c_in)->required();
    cmd_conv->add_option("--to", c_to)->required()->check(
        CLI::IsMember({"vertexset", "diagram"}));

    // check
    auto* cmd_check = app.add_subcommand("check", "Validity report for a diagram or vertex set");
    std::string k_in;
    bool k_angles = false;
    cmd_check->add_option("--in", k_in)->required();
    cmd_check->add_flag("--angles", k_angles, "also decide angle-sum feasibility");

    // classify
    auto* cmd_class = app.add_subcommand("classify", "Surface classification of a diagram");
    std::string y_in;
    cmd_class->add_option("--in", y_in)->required();

    // distinct-lengths
    auto* cmd_dist = app.add_subcommand("distinct-lengths",
                                        "Two-tile tilings with all edge lengths distinct (CSV)");
    int d_n = 7;
    cmd_dist->add_option("--n", d_n)->required();

    // render
    auto* cmd_render = app.add_subcommand("render", "Chord-diagram schematic as SVG");
    std::string r_in, r_out;
    cmd_render->add_option("--in", r_in)->required();
    cmd_render->add_option("--out", r_out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors exit 2, --help/--version exit 0
    }

    try {
        if (cmd_enum->parsed()) {
            tiling::EnumSpec spec;
            spec.n = n;
            spec.f = f;
            spec.mode = mode == "general" ? tiling::Mode::general : tiling::Mode::orientable;
            if (spec.mode == tiling::Mode::orientable) {
                if (split < 0) throw tiling::error("--mode orientable requires --split");
                spec.split = split;
            }
            if (!surface.empty()) spec.target = surface;
            spec.require_angle_feasible = !no_angle_filter;
            spec.threads = threads;
            std::ostringstream os;
            for (const auto& r : tiling::enumerate(spec)) os << serialize_record(r) << "\n";
            if (out_path.empty())
                std::cout << os.str();
            else
                spill(out_path, os.str());
            return 0;
        }
        if (cmd_table->parsed()) {
            auto target = tiling::SurfaceClass::from_name(t_surface);
            if (!target) throw tiling::error("unknown surface " + t_surface);
            tiling::CountTable table;
            table.n = t_n;
            tiling::EnumSpec spec;
            spec.n = t_n;
            spec.f = t_f;
            spec.target = t_surface;
            spec.threads = t_threads;
            if (target->orientable) {
                for (int s = t_f; 2 * s >= t_f; --s) {
                    spec.mode = tiling::Mode::orientable;
                    spec.split = s;
                    table.rows.push_back(tiling::count_table(spec));
                }
                if (t_modes == "all") {
                    spec.mode = tiling::Mode::general;
                    spec.split = -1;
                    table.rows.push_back(tiling::count_table(spec));
                }
            } else {
                spec.mode = tiling::Mode::general;
                table.rows.push_back(tiling::count_table(spec));
            }
            std::cout << table.to_csv();
            return 0;
        }
        if (cmd_conv->parsed()) {
            tiling::Diagram d;
            tiling::VertexSet v;
            bool is_diagram = tiling::parse_diagram_or_vertexset(slurp(c_in), d, v);
            if (c_to == "vertexset") {
                if (!is_diagram) throw tiling::error("input is already a vertex set");
                std::cout << serialize_vertexset(tiling::diagram_to_vertexset(d)) << "\n";
            } else {
                if (is_diagram) throw tiling::error("input is already a diagram");
                std::cout << serialize_diagram(tiling::vertexset_to_diagram(v)) << "\n";
            }
            return 0;
        }
        if (cmd_check->parsed()) {
            tiling::Diagram d;
            tiling::VertexSet v;
            bool is_diagram = tiling::parse_diagram_or_vertexset(slurp(k_in), d, v);
            if (is_diagram) {
                print_report("pair-conditions", tiling::check_pair_conditions(d));
                v = tiling::diagram_to_vertexset(d);
                print_report("vertex-set", tiling::check_vertexset(v));
            } else {
                // report on the vertex set first; it may not convert
                print_report("vertex-set", tiling::check_vertexset(v));
                try {
                    d = tiling::vertexset_to_diagram(v);
                    print_report("pair-conditions", tiling::check_pair_conditions(d));
                } catch (const tiling::parse_error& e) {
                    std::cout << "pair-conditions: not derivable (" << e.what() << ")\n";
                }
            }
            if (k_angles) {
                auto fv = tiling::check_positive_solution(tiling::build_angle_system(v));
                std::cout << "angles: " << (fv.feasible ? "feasible" : "infeasible") << "\n";
                if (fv.feasible) {
                    std::cout << "witness:";
                    for (const auto& x : fv.witness)
                        std::cout << " " << tiling::rational_to_string(x);
                    std::cout << "\n";
                }
            }
            return 0;
        }
        if (cmd_class->parsed()) {
            tiling::Diagram d = load_diagram(y_in);
            tiling::SurfaceClass s = tiling::classify_surface(d);
            std::cout << s.name() << ", chi=" << s.chi << ", "
                      << (s.orientable ? "orientable" : "nonorientable")
                      << ", edge_classes=" << tiling::edge_classes(d).count << "\n";
            return 0;
        }
        if (cmd_dist->parsed()) {
            std::cout << "tau,indices,surface,chi\n";
            for (const auto& m : tiling::two_tile_distinct_family(d_n)) {
                std::cout << m.twisted.tau() << ",";
                for (size_t i = 0; i < m.twisted.indices.size(); ++i)
                    std::cout << (i ? ";" : "") << m.twisted.indices[i];
                std::cout << "," << m.surface.name() << "," << m.surface.chi << "\n";
            }
            return 0;
        }
        if (cmd_render->parsed()) {
            spill(r_out, tiling::render_svg(load_diagram(r_in)));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
