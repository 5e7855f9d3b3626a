// gridbc: biclique covers of grid graphs from the command line.
//
// Exit codes: 0 success, 1 semantic failure (invalid cover, incomplete
// search), 2 usage or parse error.

#include <gridbc/construct.hpp>
#include <gridbc/diagnostics.hpp>
#include <gridbc/io.hpp>
#include <gridbc/solver.hpp>
#include <gridbc/theory.hpp>
#include <gridbc/verify.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

using namespace gridbc;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

auto emit(const std::string & text, const std::string & path) -> void
{
    if (path.empty())
        std::cout << text;
    else
        save_text_file(path, text);
}

auto require_dims(int p, int q) -> void
{
    if (p < 1 || q < 1)
        throw UsageError("p and q must be positive");
}

auto cmd_bc(int p, int q) -> int
{
    require_dims(p, q);
    const long long value = bc_value(p, q);
    if (static_cast<long long>(p) * q < 2) {
        std::cout << value << "\n";
        return exit_ok;
    }
    int a = std::min(p, q), b = std::max(p, q);
    std::optional<Decomposition> d;
    if (a % 2 == 0)
        d = representable(a, b);
    if (d)
        std::cout << value << " (p even, q−1 = " << d->k << "·" << a - 1 << " + 2·" << d->ell
                  << ", k=" << d->k << " ℓ=" << d->ell << ")\n";
    else
        std::cout << value << " (floor branch)\n";
    return exit_ok;
}

auto cmd_cover(int p, int q, const std::string & method, const std::string & out) -> int
{
    require_dims(p, q);
    if (static_cast<long long>(p) * q < 2)
        throw UsageError("the 1x1 grid has no edges to cover");

    Cover cover;
    if (method == "checkerboard")
        cover = checkerboard_cover(p, q);
    else {
        if (method == "optimal" && ! optimal_uses_stitching(p, q))
            std::cerr << "note: " << p << "x" << q
                      << " has no stitched construction; using the checkerboard cover, which is optimal here\n";
        cover = optimal_cover(p, q);
    }

    Grid grid({p, q});
    auto report = verify_cover(grid, cover);
    if (! report.valid) {
        std::cerr << "internal error: constructed cover failed verification\n";
        return exit_failed;
    }
    emit(write_cover(cover), out);
    return exit_ok;
}

auto text_report(const CoverReport & r) -> std::string
{
    std::ostringstream s;
    if (r.valid)
        s << "valid, size " << r.size << ", waste " << r.waste << "\n";
    else {
        s << "invalid, size " << r.size << "\n";
        if (! r.dims_match)
            s << "  grid dimensions do not match\n";
        for (const auto & bad : r.invalid_elements)
            s << "  element " << bad.index << ": " << bad.reason << "\n";
        if (! r.uncovered.empty())
            s << "  " << r.uncovered.size() << " uncovered edge(s), first (" << r.uncovered[0].a.col << ","
              << r.uncovered[0].a.row << ")-(" << r.uncovered[0].b.col << "," << r.uncovered[0].b.row << ")\n";
    }
    return s.str();
}

struct VerifyFlags
{
    std::string file;
    bool normalize = false;
    bool analyze = false;
    bool as_json = false;
    std::string out;
};

auto cmd_verify(const VerifyFlags & f) -> int
{
    Cover cover = load_cover_file(f.file);
    Grid grid(cover.dims());
    auto report = verify_cover(grid, cover);

    json doc;
    doc["report"] = report_to_json(report);
    std::ostringstream text;
    text << text_report(report);

    if (! report.valid) {
        if (f.as_json)
            std::cout << doc.dump(2) << "\n";
        else
            std::cout << text.str();
        return exit_failed;
    }

    Cover subject = cover;
    if ((f.normalize || f.analyze) && ! grid.has_outer_cycle()) {
        std::cerr << "--normalize and --analyze need p, q >= 2\n";
        return exit_failed;
    }
    if (f.normalize || f.analyze) {
        bool maximal = std::ranges::all_of(cover, [&](const Biclique & b) { return is_maximal(grid, b); });
        if (! maximal) {
            subject = maximalize(grid, cover);
            text << "maximalized: size " << subject.size() << "\n";
            doc["maximalized_size"] = subject.size();
        }
    }
    if (f.normalize) {
        auto n = normalize(grid, subject);
        subject = n.cover;
        text << "normalized: size " << subject.size() << ", " << n.steps << " rewrite(s), " << n.star_pair_rewrites
             << " star-star, " << n.cycle_star_rewrites << " cycle-star\n";
        doc["normalized"] = {{"steps", n.steps},
                             {"star_pair_rewrites", n.star_pair_rewrites},
                             {"cycle_star_rewrites", n.cycle_star_rewrites},
                             {"merged", n.merged},
                             {"padded", n.padded},
                             {"cover", cover_to_json(subject)}};
        if (! f.out.empty())
            save_text_file(f.out, write_cover(subject));
    }
    if (f.analyze) {
        auto analysis = boundary_analysis(grid, subject);
        doc["analysis"] = analysis_to_json(grid, analysis);
        text << "fences: " << analysis.fences.size();
        if (! analysis.fences.empty()) {
            text << " (sizes";
            for (const auto & fence : analysis.fences)
                text << ' ' << fence.size();
            text << ")";
        }
        text << ", links: " << analysis.links.size() << ", beta " << analysis.beta << ", c " << analysis.c << "\n";
        if (is_normalized(grid, subject)) {
            auto cls = classify_staircases(grid, subject, analysis);
            doc["classification"] = classification_to_json(grid, cls);
            text << "staircases: " << cls.staircases.size() << ", pyramids " << cls.n << ", double staircases " << cls.m
                 << ", unclassified " << cls.unclassified.size() << "\n";
            auto w = waste_identity_check(grid, subject);
            doc["waste_identity"] = waste_identity_to_json(w);
            text << "waste " << w.w << ", tau " << w.tau << ", beta+tau " << w.beta + w.tau << ", identity "
                 << (w.identity_holds ? "holds" : "fails") << "\n";
        }
        else
            text << "cover is not normalized; staircase classification skipped (use --normalize)\n";
    }

    if (f.as_json)
        std::cout << doc.dump(2) << "\n";
    else {
        std::cout << text.str();
        if (f.normalize && f.out.empty())
            std::cout << write_cover(subject);
    }
    return exit_ok;
}

auto cmd_solve(int p, int q, std::optional<double> budget, bool independent, const std::string & out) -> int
{
    require_dims(p, q);
    if (static_cast<long long>(p) * q < 2)
        throw UsageError("the 1x1 grid has no edges to cover");
    SolveOptions options;
    if (budget)
        options.budget = std::chrono::duration<double>(*budget);
    if (independent) {
        options.seed_incumbent = false;
        options.use_special_bound = false;
    }
    auto result = solve_exact(Grid({p, q}), options);
    if (! out.empty() && ! result.witness.empty())
        save_text_file(out, write_cover(result.witness));
    if (result.optimal()) {
        std::cout << result.size << "\n";
        return exit_ok;
    }
    std::cout << "incomplete [" << result.lb << ", " << result.ub << "]\n";
    return exit_failed;
}

auto cmd_render(const std::string & file, const std::string & svg) -> int
{
    Cover cover = load_cover_file(file);
    Grid grid(cover.dims());
    for (const auto & b : cover)
        if (auto why = validate(grid, b)) {
            std::cerr << "cannot render: " << *why << "\n";
            return exit_failed;
        }
    emit(render_svg(cover), svg);
    return exit_ok;
}

} // namespace

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"Biclique covers of grid graphs"};
    app.require_subcommand(1);

    int p = 0, q = 0;
    auto add_dims = [&](CLI::App * cmd) {
        cmd->add_option("p", p, "rows")->required();
        cmd->add_option("q", q, "columns")->required();
    };

    auto * bc = app.add_subcommand("bc", "print bc(G_{p,q}) and the formula branch");
    add_dims(bc);

    std::string method = "auto", out;
    auto * cover = app.add_subcommand("cover", "emit a minimum cover as JSON");
    add_dims(cover);
    cover->add_option("--method", method, "auto, checkerboard or optimal")
        ->check(CLI::IsMember({"auto", "checkerboard", "optimal"}));
    cover->add_option("--out", out, "output file (default stdout)");

    VerifyFlags vf;
    auto * verify = app.add_subcommand("verify", "check a cover file");
    verify->add_option("file", vf.file)->required();
    verify->add_flag("--normalize", vf.normalize, "maximalize and normalize the boundary");
    verify->add_flag("--analyze", vf.analyze, "fences, links and staircases");
    verify->add_flag("--json", vf.as_json, "JSON report");
    verify->add_option("--out", vf.out, "where to write the normalized cover");

    std::optional<double> budget;
    bool independent = false;
    auto * solve = app.add_subcommand("solve", "exact optimum by branch and bound");
    add_dims(solve);
    solve->add_option("--budget", budget, "wall-clock limit in seconds")->check(CLI::PositiveNumber);
    solve->add_flag("--independent", independent, "no constructed incumbent, no ring-peel bound");
    solve->add_option("--out", out, "witness file");

    int pmax = 0, qmax = 0;
    bool mark = false;
    auto * table = app.add_subcommand("table", "CSV of bc values, rows p = 1..pmax, columns q = p..qmax");
    table->add_option("pmax", pmax)->required()->check(CLI::PositiveNumber);
    table->add_option("qmax", qmax)->required()->check(CLI::PositiveNumber);
    table->add_flag("--mark-branch", mark, "suffix '*' on the pq/2 - 1 branch");

    std::string render_file, svg;
    auto * render = app.add_subcommand("render", "draw a cover file as SVG");
    render->add_option("file", render_file)->required();
    render->add_option("--svg", svg, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*bc)
            return cmd_bc(p, q);
        if (*cover)
            return cmd_cover(p, q, method, out);
        if (*verify)
            return cmd_verify(vf);
        if (*solve)
            return cmd_solve(p, q, budget, independent, out);
        if (*table) {
            std::cout << bc_table_csv(pmax, qmax, mark);
            return exit_ok;
        }
        if (*render)
            return cmd_render(render_file, svg);
    }
    catch (const UsageError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const ParseError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const std::invalid_argument & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failed;
    }
    return exit_usage;
}
