#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "superpat/cli/commands.hpp"
#include "superpat/cli/io.hpp"
#include "superpat/cli/suite.hpp"
#include "superpat/cli/svg.hpp"

using namespace superpat;

namespace {

// exit codes
constexpr int kOk = 0, kCheckFailed = 1, kUsage = 2, kInternal = 3;

struct Globals {
    std::uint64_t seed = 1;
    std::size_t n = 8;
    std::string out;
    std::string format = "json";
};

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in) {
        throw PreconditionError("cannot open '" + path + "'");
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void emit(const Globals& g, const std::string& text) {
    if (g.out.empty() || g.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out);
    if (!f) {
        throw PreconditionError("cannot write '" + g.out + "'");
    }
    f << text;
}

std::string points_text(const PointSet& ps) {
    std::string out;
    for (const auto& p : ps) {
        out += to_string(p.x) + " " + to_string(p.y);
        if (p.tag) {
            out += " " + std::string(tag_name(*p.tag));
        }
        out += "\n";
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Superpatterns and universal point sets for dominance drawings"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--seed", g.seed, "seed for random generators")->capture_default_str();
    app.add_option("--n", g.n, "size parameter")->capture_default_str();
    app.add_option("--out", g.out, "output file (default stdout)");
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "text", "svg"}))
        ->capture_default_str();
    app.fallthrough();

    int status = kOk;

    std::string family = "riffle";
    auto* gen_sp = app.add_subcommand("gen-superpattern", "print a superpattern");
    gen_sp->add_option("--family", family)->check(CLI::IsMember(superpattern_families()))->capture_default_str();
    gen_sp->callback([&] {
        Permutation p = make_superpattern(family, g.n);
        if (g.format == "svg") {
            emit(g, render_svg(plot(p)));
        } else if (g.format == "text") {
            emit(g, format_permutation(p) + "\n");
        } else {
            emit(g, Json{{"family", family}, {"n", g.n}, {"permutation", p.values()}}.dump() + "\n");
        }
    });

    std::string ps_family = "combined-square";
    auto* gen_ps = app.add_subcommand("gen-pointset", "print a universal point set");
    gen_ps->add_option("--family", ps_family)->check(CLI::IsMember(pointset_families()))->capture_default_str();
    gen_ps->callback([&] {
        Json j = make_pointset(ps_family, g.n);
        PointSet ps = pointset_from_json(j.is_object() ? j.at("points") : j);
        if (g.format == "svg") {
            emit(g, render_svg(ps));
        } else if (g.format == "text") {
            emit(g, points_text(ps));
        } else {
            emit(g, j.dump() + "\n");
        }
    });

    std::string kind = "perm321";
    auto* gen_rand = app.add_subcommand("gen-random", "print a seeded random instance");
    gen_rand->add_option("--kind", kind)->check(CLI::IsMember(instance_kinds()))->capture_default_str();
    gen_rand->callback([&] { emit(g, random_instance(kind, g.n, g.seed)); });

    std::string perm_text;
    auto* embed_perm = app.add_subcommand("embed-perm", "embed a permutation into a superpattern");
    embed_perm->add_option("--family", family)->check(CLI::IsMember(superpattern_families()))->capture_default_str();
    embed_perm->add_option("--perm", perm_text, "pattern in one-line notation")->required();
    embed_perm->callback([&] {
        Permutation p = parse_permutation(perm_text);
        Permutation text = make_superpattern(family, g.n);
        Embedding e = embed_into_family(family, p, g.n);
        bool ok = is_valid_embedding(text, p, e);
        std::vector<std::size_t> pos1;
        for (auto i : e.positions) {
            pos1.push_back(i + 1);
        }
        if (g.format == "text") {
            std::string line;
            for (auto i : pos1) {
                line += (line.empty() ? "" : " ") + std::to_string(i);
            }
            emit(g, line + "\n");
        } else {
            emit(g, Json{{"family", family}, {"n", g.n}, {"pattern", p.values()}, {"positions", pos1}, {"ok", ok}}
                            .dump() +
                        "\n");
        }
        status = ok ? kOk : kCheckFailed;
    });

    std::string input, graph_kind = "width2";
    auto* embed_graph_cmd = app.add_subcommand("embed-graph", "dominance drawing of a graph read as JSON");
    embed_graph_cmd->add_option("--kind", graph_kind)
        ->check(CLI::IsMember({"width2", "width2-mu", "tree", "stouter"}))
        ->capture_default_str();
    embed_graph_cmd->add_option("--input", input, "graph file, - for stdin")->required();
    embed_graph_cmd->callback([&] {
        Drawing d = embed_graph(graph_kind, read_input(input));
        emit(g, g.format == "svg" ? render_svg(d) : to_json(d).dump(2) + "\n");
    });

    auto* verify_drawing = app.add_subcommand("verify-drawing", "check a drawing's dominance property");
    verify_drawing->add_option("--input", input, "drawing file, - for stdin")->required();
    verify_drawing->callback([&] {
        Drawing d = parse_drawing(read_input(input));
        auto r = verify_dominance_drawing(d);
        Json j{{"ok", r.ok}};
        if (!r.ok) {
            j["reason"] = r.reason;
            if (r.witness) {
                j["witness"] = {d.graph.label(r.witness->first), d.graph.label(r.witness->second)};
            }
        }
        emit(g, j.dump() + "\n");
        status = r.ok ? kOk : kCheckFailed;
    });

    std::string cls = "321";
    std::size_t size = 0;
    auto* verify_sp = app.add_subcommand("verify-superpattern", "check a superpattern against a class");
    verify_sp->add_option("--family", family, "superpattern family")
        ->check(CLI::IsMember(superpattern_families()))
        ->capture_default_str();
    verify_sp->add_option("--perm", perm_text, "explicit superpattern instead of a family");
    verify_sp->add_option("--class", cls)
        ->check(CLI::IsMember({"321", "213", "riffle", "antiriffle", "all"}))
        ->capture_default_str();
    verify_sp->add_option("--size", size, "family size parameter (default --n)");
    verify_sp->callback([&] {
        Permutation sp = perm_text.empty() ? make_superpattern(family, size ? size : g.n) : parse_permutation(perm_text);
        std::vector<Permutation> basis;
        if (cls == "321") {
            basis = {Permutation({3, 2, 1})};
        } else if (cls == "213") {
            basis = {Permutation({2, 1, 3})};
        } else if (cls == "riffle") {
            basis = {Permutation({3, 2, 1}), Permutation({2, 1, 4, 3}), Permutation({2, 4, 1, 3})};
        } else if (cls == "antiriffle") {
            basis = {Permutation({3, 2, 1}), Permutation({2, 1, 4, 3}), Permutation({3, 1, 4, 2})};
        }
        auto r = verify_superpattern(sp, g.n, basis);
        Json j{{"ok", r.ok}, {"checked", r.checked}, {"length", sp.size()}};
        if (r.counterexample) {
            j["counterexample"] = format_permutation(*r.counterexample);
        }
        emit(g, j.dump() + "\n");
        status = r.ok ? kOk : kCheckFailed;
    });

    auto* board_cmd = app.add_subcommand("board", "permutation to chessboard, or back with --input");
    board_cmd->add_option("--perm", perm_text, "permutation in one-line notation");
    board_cmd->add_option("--input", input, "board text file to expand into a permutation");
    board_cmd->callback([&] {
        if (!perm_text.empty()) {
            Board b = board(parse_permutation(perm_text));
            emit(g, g.format == "svg" ? render_svg(b) : format_board(b));
        } else if (!input.empty()) {
            Board b = parse_board(read_input(input));
            emit(g, g.format == "svg" ? render_svg(b) : format_permutation(board_to_permutation(b)) + "\n");
        } else {
            throw PreconditionError("board: give --perm or --input");
        }
    });

    std::string render_kind = "pointset";
    auto* render = app.add_subcommand("render", "SVG of a point set, drawing, permutation or board");
    render->add_option("--input", input, "input file, - for stdin")->required();
    render->add_option("--kind", render_kind)
        ->check(CLI::IsMember({"pointset", "drawing", "permutation", "board"}))
        ->capture_default_str();
    render->callback([&] {
        std::string text = read_input(input);
        if (render_kind == "pointset") {
            emit(g, render_svg(parse_pointset(text)));
        } else if (render_kind == "drawing") {
            emit(g, render_svg(parse_drawing(text)));
        } else if (render_kind == "permutation") {
            emit(g, render_svg(plot(parse_permutation(text))));
        } else {
            emit(g, render_svg(parse_board(text)));
        }
    });

    std::string suite_name = "counts";
    auto* suite = app.add_subcommand("suite", "run a verification suite (JSON lines report)");
    std::vector<std::string> suite_choices = suite_names();
    suite_choices.push_back("all");
    suite->add_option("--name", suite_name)->check(CLI::IsMember(suite_choices))->capture_default_str();
    suite->callback([&] {
        std::string text;
        bool ok = true;
        for (const auto& name : suite_name == "all" ? suite_names() : std::vector<std::string>{suite_name}) {
            SuiteReport r = run_suite(name, g.seed);
            text += r.jsonl();
            ok = ok && r.ok;
        }
        emit(g, text);
        status = ok ? kOk : kCheckFailed;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return status;
}
