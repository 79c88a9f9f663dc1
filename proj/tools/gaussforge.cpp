#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gaussforge/codec.hpp"
#include "gaussforge/errors.hpp"
#include "gaussforge/fuzz.hpp"
#include "gaussforge/invariants.hpp"
#include "gaussforge/moves.hpp"
#include "gaussforge/parity.hpp"
#include "gaussforge/projection.hpp"
#include "gaussforge/render.hpp"
#include "gaussforge/surface.hpp"

namespace {

using namespace gaussforge;

std::vector<std::string> read_code_lines(const std::string& path) {
    std::ifstream file(path);
    if (!file)
        fail(ErrorKind::IoError, "cli", "cannot read '" + path + "'");
    std::vector<std::string> codes;
    std::string line;
    while (std::getline(file, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        if (!line.empty()) codes.push_back(line);
    }
    return codes;
}

// The positional code is used unless --file is given; an absent positional
// means the empty diagram.
std::vector<std::string> gather_codes(const std::string& code, const std::string& file) {
    if (!file.empty()) return read_code_lines(file);
    return {code};
}

// Stage codes keep the diagram's own labels so they line up with the deleted
// lists; only final outputs go through the renumbering serializer.
std::string raw_code(const GaussDiagram& d) {
    std::string out;
    for (const EndpointToken& t : d.endpoint_tokens()) {
        out += to_char(t.role);
        out += std::to_string(t.label);
        out += t.sign > 0 ? '+' : '-';
    }
    return out;
}

void print_info_text(const GaussDiagram& d, std::ostream& out) {
    const SurfaceData s = surface_data(d);
    out << "code: " << serialize(d) << "\n";
    out << "n: " << d.size() << "\n";
    out << "genus: " << s.genus << "\n";
    out << "faces: " << s.face_count << "\n";
    out << "bridges: " << bridge_count(d) << "\n";
    out << "classical diagram: " << (is_classical_diagram(d) ? "yes" : "no") << "\n";
    out << "odd writhe: " << odd_writhe(d) << "\n";
    out << "gaussian parities:";
    for (const auto& [label, parity] : gaussian_parity(d)) out << " " << label << ":" << parity;
    out << "\n";
    out << "parity group dim: " << parity_group(d).dim() << "\n";
    out << "f polynomial: " << f_polynomial(d).to_string() << "\n";
}

int run_info(const std::string& code, const std::string& file, bool json) {
    const std::vector<std::string> codes = gather_codes(code, file);
    nlohmann::json all = nlohmann::json::array();
    bool first = true;
    for (const std::string& c : codes) {
        const GaussDiagram d = parse(c);
        if (json) {
            all.push_back(report(d));
        } else {
            if (!first) std::cout << "\n";
            print_info_text(d, std::cout);
            first = false;
        }
    }
    if (json) std::cout << (all.size() == 1 ? all.front() : all).dump(2) << "\n";
    return 0;
}

ProjectionTrace single_step_trace(const GaussDiagram& d, ProjectionParity kind) {
    const GaussDiagram out = kind == ProjectionParity::Gaussian ? project_gaussian(d)
                                                                : project_group(d);
    std::vector<std::uint32_t> deleted;
    for (std::uint32_t l : d.labels())
        if (!out.has_label(l)) deleted.push_back(l);
    std::sort(deleted.begin(), deleted.end());
    ProjectionTrace trace;
    if (deleted.empty()) {
        trace.stages.push_back({d, kind, {}});
    } else {
        trace.stages.push_back({d, kind, deleted});
        trace.stages.push_back({out, kind, {}});
    }
    trace.final = out;
    return trace;
}

int run_project(const std::string& code, const std::string& file, const std::string& method,
                bool with_trace, bool json) {
    const std::vector<std::string> codes = gather_codes(code, file);
    nlohmann::json all = nlohmann::json::array();
    for (const std::string& c : codes) {
        const GaussDiagram d = parse(c);
        ProjectionTrace trace;
        if (method == "gaussian") trace = single_step_trace(d, ProjectionParity::Gaussian);
        else if (method == "gaussian-stable") trace = project_gaussian_stable(d);
        else if (method == "group") trace = single_step_trace(d, ProjectionParity::Group);
        else if (method == "classical") trace = classicalize(d);
        else
            fail(ErrorKind::UnknownLabel, "cli", "unknown method '" + method + "'");

        if (json) {
            nlohmann::json item;
            item["method"] = method;
            item["input"] = serialize(d);
            item["final"] = serialize(trace.final);
            if (with_trace) {
                nlohmann::json stages = nlohmann::json::array();
                for (const ProjectionStage& st : trace.stages) {
                    nlohmann::json stage;
                    stage["code"] = raw_code(st.diagram);
                    stage["parity"] = to_string(st.parity);
                    stage["deleted"] = st.deleted;
                    stages.push_back(stage);
                }
                item["stages"] = stages;
            }
            all.push_back(item);
        } else {
            if (with_trace) {
                for (std::size_t i = 0; i < trace.stages.size(); ++i) {
                    const ProjectionStage& st = trace.stages[i];
                    std::cout << "stage " << i << ": " << raw_code(st.diagram);
                    if (!st.deleted.empty()) {
                        std::cout << "  deleted:";
                        for (std::uint32_t l : st.deleted) std::cout << " " << l;
                    }
                    std::cout << "\n";
                }
            }
            std::cout << serialize(trace.final) << "\n";
        }
    }
    if (json) std::cout << (all.size() == 1 ? all.front() : all).dump(2) << "\n";
    return 0;
}

int run_moves(const std::vector<std::string>& codes, std::size_t max_chords, std::size_t depth,
              bool json) {
    if (codes.size() == 1) {
        const GaussDiagram d = parse(codes[0]);
        const std::vector<MoveDescriptor> moves = enumerate_moves(d, d.size() < max_chords);
        if (json) {
            nlohmann::json arr = nlohmann::json::array();
            for (const MoveDescriptor& mv : moves) {
                nlohmann::json item;
                item["move"] = mv.describe();
                item["result"] = serialize(apply_move(d, mv));
                arr.push_back(item);
            }
            std::cout << arr.dump(2) << "\n";
        } else {
            std::cout << moves.size() << " moves\n";
            for (const MoveDescriptor& mv : moves)
                std::cout << mv.describe() << "  ->  " << serialize(apply_move(d, mv)) << "\n";
        }
        return 0;
    }

    const GaussDiagram d1 = parse(codes[0]);
    const GaussDiagram d2 = parse(codes[1]);
    SearchBudget budget;
    budget.max_chords = max_chords;
    budget.max_depth = depth;
    const SearchResult result = equivalence_search(d1, d2, budget);
    if (json) {
        nlohmann::json item;
        item["equivalent"] = result.equivalent;
        item["nodes_expanded"] = result.nodes_expanded;
        if (result.equivalent) {
            nlohmann::json stages = nlohmann::json::array();
            for (const GaussDiagram& st : result.path.stages) stages.push_back(serialize(st));
            nlohmann::json moves = nlohmann::json::array();
            for (const MoveDescriptor& mv : result.path.moves) moves.push_back(mv.describe());
            item["stages"] = stages;
            item["moves"] = moves;
        }
        std::cout << item.dump(2) << "\n";
    } else {
        if (!result.equivalent) {
            std::cout << "unknown (searched " << result.nodes_expanded << " states)\n";
        } else {
            std::cout << "equivalent via " << result.path.moves.size() << " moves ("
                      << result.nodes_expanded << " nodes expanded)\n";
            std::cout << "stage 0: " << serialize(result.path.stages[0]) << "\n";
            for (std::size_t i = 0; i < result.path.moves.size(); ++i) {
                std::cout << "move " << i + 1 << ": " << result.path.moves[i].describe() << "\n";
                std::cout << "stage " << i + 1 << ": " << serialize(result.path.stages[i + 1])
                          << "\n";
            }
        }
    }
    return 0;
}

int run_fuzz_cmd(const FuzzConfig& config, bool json) {
    const FuzzReport report = run_fuzz(config);
    if (json) {
        nlohmann::json item;
        item["seeds"] = report.seeds_run;
        item["checks_run"] = report.checks_run;
        nlohmann::json failures = nlohmann::json::array();
        for (const FuzzFailure& f : report.failures) {
            nlohmann::json entry;
            entry["check"] = f.check;
            entry["seed"] = f.seed;
            entry["diagram"] = f.diagram_code;
            entry["move"] = f.move;
            entry["message"] = f.message;
            failures.push_back(entry);
        }
        item["failures"] = failures;
        std::cout << item.dump(2) << "\n";
    } else {
        std::cout << "seeds: " << report.seeds_run << ", checks run: " << report.checks_run
                  << "\n";
        for (const FuzzFailure& f : report.failures) {
            std::cout << "FAIL " << f.check << " seed=" << f.seed << "\n";
            std::cout << "  diagram: " << f.diagram_code << "\n";
            if (!f.move.empty()) std::cout << "  move: " << f.move << "\n";
            std::cout << "  violation: " << f.message << "\n";
        }
        std::cout << (report.ok() ? "PASS" : "FAIL") << "\n";
    }
    return report.ok() ? 0 : 1;
}

int run_render(const std::string& code, const std::string& out_path) {
    const GaussDiagram d = parse(code);
    render_svg_file(d, out_path);
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gauss diagram toolkit: parities, projections, surfaces, moves"};
    app.require_subcommand(1);

    std::string info_code, info_file;
    bool info_json = false;
    CLI::App* info = app.add_subcommand("info", "Report the invariants of a Gauss code");
    info->add_option("code", info_code, "Gauss code, e.g. \"O1+U2+O3+U1+O2+U3+\"");
    info->add_option("--file", info_file, "Read codes from a file, one per line");
    info->add_flag("--json", info_json, "Emit JSON");

    std::string project_code, project_file, project_method = "gaussian";
    bool project_trace = false, project_json = false;
    CLI::App* project = app.add_subcommand("project", "Project a diagram along a parity");
    project->add_option("code", project_code, "Gauss code");
    project->add_option("--file", project_file, "Read codes from a file, one per line");
    project->add_option("--method", project_method,
                        "gaussian | gaussian-stable | group | classical")
        ->check(CLI::IsMember({"gaussian", "gaussian-stable", "group", "classical"}));
    project->add_flag("--trace", project_trace, "Print every stage with its deleted chords");
    project->add_flag("--json", project_json, "Emit JSON");

    std::vector<std::string> moves_codes;
    std::string moves_file;
    std::size_t moves_max_chords = 8, moves_depth = 6;
    bool moves_json = false;
    CLI::App* moves = app.add_subcommand(
        "moves", "List moves for one code, or search a move path between two codes");
    moves->add_option("codes", moves_codes, "One or two Gauss codes")->expected(0, 2);
    moves->add_option("--file", moves_file, "Read the codes from a file, one per line");
    moves->add_option("--max-chords", moves_max_chords, "Chord cap for increasing moves");
    moves->add_option("--depth", moves_depth, "Search depth per side");
    moves->add_flag("--json", moves_json, "Emit JSON");

    FuzzConfig fuzz_config;
    bool fuzz_json = false;
    CLI::App* fuzz = app.add_subcommand("fuzz", "Run randomized property checks");
    fuzz->add_option("--seeds", fuzz_config.seeds, "Number of seeds per check");
    fuzz->add_option("--max-chords", fuzz_config.max_chords, "Largest random diagram");
    fuzz->add_option("--depth", fuzz_config.move_depth, "Moves applied per seed");
    fuzz->add_option("--checks", fuzz_config.checks,
                     "Comma-separated check names (default: all)")
        ->delimiter(',');
    fuzz->add_flag("--json", fuzz_json, "Emit JSON");

    std::string render_code, render_out;
    CLI::App* render = app.add_subcommand("render", "Draw a chord diagram as SVG");
    render->add_option("code", render_code, "Gauss code");
    render->add_option("--out", render_out, "Output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*info) return run_info(info_code, info_file, info_json);
        if (*project)
            return run_project(project_code, project_file, project_method, project_trace,
                               project_json);
        if (*moves) {
            std::vector<std::string> codes =
                moves_file.empty() ? moves_codes : read_code_lines(moves_file);
            if (codes.empty()) codes.push_back("");
            if (codes.size() > 2)
                fail(ErrorKind::IoError, "cli", "moves wants one or two codes");
            return run_moves(codes, moves_max_chords, moves_depth, moves_json);
        }
        if (*fuzz) return run_fuzz_cmd(fuzz_config, fuzz_json);
        if (*render) return run_render(render_code, render_out);
    } catch (const gaussforge::Error& e) {
        std::cerr << "error: " << e.what();
        if (e.token_index() >= 0 && std::string(e.what()).find("at token") == std::string::npos)
            std::cerr << " at token " << e.token_index() + 1;
        std::cerr << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
