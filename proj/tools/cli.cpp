#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cayrec/checks.hpp"
#include "cayrec/group.hpp"
#include "cayrec/oracle.hpp"
#include "cayrec/rand.hpp"
#include "cayrec/reconstruct.hpp"
#include "cayrec/text_io.hpp"

namespace cayrec::cli {

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

// Thrown for malformed flag values and inconsistent inputs; mapped to exit 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(what + ": expected comma-separated integers, got '" + text + "'");
        }
    }
    if (out.empty()) throw UsageError(what + ": empty list");
    return out;
}

std::vector<Cell> parse_cell_list(const std::string& text, const std::string& what) {
    std::vector<Cell> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        const auto pair = parse_int_list(item, what);
        if (pair.size() != 2) throw UsageError(what + ": expected r,c pairs, got '" + item + "'");
        out.push_back({pair[0], pair[1]});
    }
    if (out.empty()) throw UsageError(what + ": empty cell list");
    return out;
}

std::string cell_list_string(const std::vector<Cell>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) out += ';';
        out += std::to_string(cells[i].row) + "," + std::to_string(cells[i].col);
    }
    return out;
}

std::string read_all(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// The hole-order annotation emitted by punch: "# order: r,c;r,c".
std::optional<std::vector<Cell>> extract_order_annotation(const std::string& text) {
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        std::size_t i = line.find_first_not_of(" \t");
        if (i == std::string::npos || line[i] != '#') continue;
        ++i;
        i = line.find_first_not_of(" \t", i);
        if (i == std::string::npos || line.compare(i, 6, "order:") != 0) continue;
        const std::string cells = line.substr(i + 6);
        if (cells.find_first_not_of(" \t") == std::string::npos) {
            throw UsageError("empty '# order:' annotation");
        }
        return parse_cell_list(cells, "# order annotation");
    }
    return std::nullopt;
}

struct Io {
    std::string in_path;
    std::string out_path;

    void attach(CLI::App* cmd) {
        cmd->add_option("--in", in_path, "input file (default: standard input)");
        cmd->add_option("--out", out_path, "output file (default: standard output)");
    }

    std::string input(std::istream& fallback) const {
        if (in_path.empty()) return read_all(fallback);
        std::ifstream f(in_path);
        if (!f) throw UsageError("cannot open input file '" + in_path + "'");
        return read_all(f);
    }

    void output(std::ostream& fallback, const std::string& text) const {
        if (out_path.empty()) {
            fallback << text;
            return;
        }
        std::ofstream f(out_path);
        if (!f) throw UsageError("cannot open output file '" + out_path + "'");
        f << text;
    }
};

Matrix parse_full_grid(const std::string& text, const std::string& what) {
    const PartialMatrix p = parse_grid(text);
    if (!p.complete()) {
        throw UsageError(what + " must be a complete grid, found " +
                         std::to_string(p.hole_count()) + " hole(s)");
    }
    return p.to_matrix();
}

int run_gen(const std::string& group_spec, const std::string& rows_text,
            const std::string& cols_text, const Io& io, std::ostream& out) {
    const GroupTable g = make_group(group_spec);
    const Enumeration rows = rows_text.empty()
                                 ? Enumeration::identity(g.order())
                                 : Enumeration(parse_int_list(rows_text, "--rows"));
    const Enumeration cols = cols_text.empty()
                                 ? Enumeration::identity(g.order())
                                 : Enumeration(parse_int_list(cols_text, "--cols"));
    io.output(out, serialize_grid(cayley_matrix_of(g, rows, cols)));
    return kPass;
}

int run_punch(int holes, std::uint64_t seed, bool seeded, const std::string& cells_text,
              const Io& io, std::istream& in, std::ostream& out) {
    const Matrix m = parse_full_grid(io.input(in), "punch input");
    std::string header;
    std::vector<Cell> cells;
    if (!cells_text.empty()) {
        if (holes > 0) throw UsageError("--holes and --cells are mutually exclusive");
        cells = parse_cell_list(cells_text, "--cells");
    } else {
        if (holes < 1) throw UsageError("punch needs --holes <k> or --cells \"r,c;...\"");
        if (holes > m.n() * m.n()) throw UsageError("more holes than cells");
        std::mt19937_64 rng(seed);
        std::vector<int> flat(static_cast<std::size_t>(m.n()) * m.n());
        for (std::size_t i = 0; i < flat.size(); ++i) flat[i] = static_cast<int>(i);
        shuffle(flat, rng);
        for (int i = 0; i < holes; ++i) cells.push_back({flat[i] / m.n(), flat[i] % m.n()});
        header += "# seed=" + std::to_string(seed) + "\n";
        (void)seeded;
    }
    const PartialMatrix punched = punch(m, cells);
    if (punched.hole_count() != static_cast<int>(cells.size())) {
        throw UsageError("duplicate cells in hole list");
    }
    header += "# order: " + cell_list_string(cells) + "\n";
    io.output(out, header + serialize_grid(punched));
    return kPass;
}

int run_reconstruct(const std::string& order_kind, std::uint64_t seed, const std::string& mode_name,
                    bool paranoid, const Io& io, std::istream& in, std::ostream& out) {
    const std::string text = io.input(in);
    const PartialMatrix p = parse_grid(text);

    std::vector<Cell> order;
    if (order_kind == "row-major") {
        order = p.holes();
    } else if (order_kind == "random") {
        order = p.holes();
        std::mt19937_64 rng(seed);
        shuffle(order, rng);
    } else if (order_kind == "given") {
        const auto annotated = extract_order_annotation(text);
        if (!annotated) {
            throw UsageError("--order given needs a '# order: r,c;...' annotation in the input "
                             "(punch emits one)");
        }
        order = *annotated;
    } else {
        throw UsageError("--order must be given, row-major or random");
    }

    const ReconstructionMode mode = [&] {
        if (mode_name == "quadrangle") return ReconstructionMode::kQuadrangleOnly;
        if (mode_name == "quadrangle+latin") return ReconstructionMode::kQuadranglePlusLatin;
        throw UsageError("--mode must be quadrangle or quadrangle+latin");
    }();

    const ReconstructionReport report = reconstruct(p, order, mode, paranoid);
    nlohmann::json j = nlohmann::json::parse(to_json(report));
    j["order"] = order_kind;
    if (order_kind == "random") j["seed"] = seed;
    io.output(out, serialize_grid(report.result) + "---\n" + j.dump() + "\n");
    return report.status == ReconstructionStatus::kComplete ? kPass : kFail;
}

int run_check(const std::string& what, int identity, const Io& io, std::istream& in,
              std::ostream& out) {
    const std::string text = io.input(in);
    CheckVerdict verdict;
    if (what == "latin") {
        verdict = is_latin(parse_grid(text));
    } else {
        const Matrix m = parse_full_grid(text, "check --what " + what);
        if (what == "quadrangle") {
            verdict = check_quadrangle_criterion(m);
        } else if (what == "cayley") {
            verdict = is_cayley(m);
        } else if (what == "balanced") {
            verdict = is_balanced_cayley(m);
        } else if (what == "group") {
            verdict = verify_group(m, identity);
        } else {
            throw UsageError("--what must be latin, quadrangle, cayley, balanced or group");
        }
    }
    io.output(out, to_json(verdict) + "\n");
    return verdict.pass ? kPass : kFail;
}

int run_analyze(const std::string& cell_text, const std::string& truth_path, const Io& io,
                std::istream& in, std::ostream& out) {
    const auto cells = parse_cell_list(cell_text, "--cell");
    if (cells.size() != 1) throw UsageError("--cell expects a single r,c pair");
    const PartialMatrix p = parse_grid(io.input(in));
    std::ifstream truth_file(truth_path);
    if (!truth_file) throw UsageError("cannot open truth file '" + truth_path + "'");
    const Matrix truth = parse_full_grid(read_all(truth_file), "--truth grid");
    if (truth.n() != p.n()) throw UsageError("truth grid order differs from input");
    for (int r = 0; r < p.n(); ++r)
        for (int c = 0; c < p.n(); ++c)
            if (p.filled(r, c) && p.at(r, c) != truth.at(r, c)) {
                throw UsageError("input disagrees with truth at filled cell (" +
                                 std::to_string(r) + "," + std::to_string(c) + ")");
            }
    io.output(out, to_json(analyze_hole(truth, p.holes(), cells[0])) + "\n");
    return kPass;
}

int run_oracle(const std::string& mode_name, std::uint64_t limit, std::uint64_t budget,
               const std::string& headline_text, const std::string& sideline_text, const Io& io,
               std::istream& in, std::ostream& out) {
    CompletionQuery q(parse_grid(io.input(in)));
    if (mode_name == "latin") {
        q.mode = CompletionMode::kLatin;
    } else if (mode_name == "cayley") {
        q.mode = CompletionMode::kCayley;
    } else if (mode_name == "balanced") {
        q.mode = CompletionMode::kBalancedCayley;
    } else if (mode_name == "table") {
        q.mode = CompletionMode::kLabeledTable;
        if (headline_text.empty() || sideline_text.empty()) {
            throw UsageError("--mode table needs --headline and --sideline");
        }
    } else {
        throw UsageError("--mode must be latin, cayley, balanced or table");
    }
    if (!headline_text.empty()) q.headline = parse_int_list(headline_text, "--headline");
    if (!sideline_text.empty()) q.sideline = parse_int_list(sideline_text, "--sideline");
    if (limit > 0) q.limit = limit;
    q.budget = budget;
    const CompletionSet result = complete_all(q);
    io.output(out, serialize_completions(result));
    return result.exhausted && result.completions.size() == 1 ? kPass : kFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Cayley matrix reconstruction toolkit"};
    app.name("cayrec");
    app.require_subcommand(1);

    Io gen_io, punch_io, rec_io, check_io, analyze_io, oracle_io;

    auto* gen = app.add_subcommand("gen", "emit the Cayley matrix of a catalog group");
    std::string gen_group, gen_rows, gen_cols;
    gen->add_option("--group", gen_group, "group descriptor, e.g. c5, d4, s3, q8, prod:c2,c4")
        ->required();
    gen->add_option("--rows", gen_rows, "row enumeration, e.g. 0,2,1,3");
    gen->add_option("--cols", gen_cols, "column enumeration");
    gen_io.attach(gen);

    auto* pnch = app.add_subcommand("punch", "delete cells from a complete grid");
    int punch_holes = 0;
    std::uint64_t punch_seed = 0;
    std::string punch_cells;
    pnch->add_option("--holes", punch_holes, "number of random holes");
    pnch->add_option("--seed", punch_seed, "seed for random holes (default 0)");
    pnch->add_option("--cells", punch_cells, "explicit holes \"r,c;r,c;...\"");
    punch_io.attach(pnch);

    auto* rec = app.add_subcommand("reconstruct", "fill holes by quadrangle criterion");
    std::string rec_order = "row-major", rec_mode = "quadrangle";
    std::uint64_t rec_seed = 0;
    bool rec_paranoid = false;
    rec->add_option("--order", rec_order, "given, row-major or random")
        ->check(CLI::IsMember({"given", "row-major", "random"}));
    rec->add_option("--seed", rec_seed, "seed for --order random (default 0)");
    rec->add_option("--mode", rec_mode, "quadrangle or quadrangle+latin")
        ->check(CLI::IsMember({"quadrangle", "quadrangle+latin"}));
    rec->add_flag("--paranoid", rec_paranoid, "compare all candidate fills for contradictions");
    rec_io.attach(rec);

    auto* chk = app.add_subcommand("check", "run a structural check");
    std::string check_what;
    int check_identity = 0;
    chk->add_option("--what", check_what, "latin, quadrangle, cayley, balanced or group")
        ->required()
        ->check(CLI::IsMember({"latin", "quadrangle", "cayley", "balanced", "group"}));
    chk->add_option("--identity", check_identity, "claimed identity for --what group (default 0)");
    check_io.attach(chk);

    auto* ana = app.add_subcommand("analyze", "hole accounting against a ground-truth grid");
    std::string analyze_cell, analyze_truth;
    ana->add_option("--cell", analyze_cell, "hole to analyze, r,c")->required();
    ana->add_option("--truth", analyze_truth, "file with the complete original grid")->required();
    analyze_io.attach(ana);

    auto* orc = app.add_subcommand("oracle", "brute-force completion enumeration");
    std::string oracle_mode, oracle_headline, oracle_sideline;
    std::uint64_t oracle_limit = 0, oracle_budget = 10'000'000;
    orc->add_option("--mode", oracle_mode, "latin, cayley, balanced or table")
        ->required()
        ->check(CLI::IsMember({"latin", "cayley", "balanced", "table"}));
    orc->add_option("--limit", oracle_limit, "max completions to return (default unlimited)");
    orc->add_option("--budget", oracle_budget, "max search nodes (default 10^7)");
    orc->add_option("--headline", oracle_headline, "column labels for --mode table");
    orc->add_option("--sideline", oracle_sideline, "row labels for --mode table");
    oracle_io.attach(orc);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "cayrec: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (gen->parsed()) return run_gen(gen_group, gen_rows, gen_cols, gen_io, out);
        if (pnch->parsed()) {
            return run_punch(punch_holes, punch_seed, pnch->count("--seed") > 0, punch_cells,
                             punch_io, in, out);
        }
        if (rec->parsed()) {
            return run_reconstruct(rec_order, rec_seed, rec_mode, rec_paranoid, rec_io, in, out);
        }
        if (chk->parsed()) return run_check(check_what, check_identity, check_io, in, out);
        if (ana->parsed()) return run_analyze(analyze_cell, analyze_truth, analyze_io, in, out);
        if (orc->parsed()) {
            return run_oracle(oracle_mode, oracle_limit, oracle_budget, oracle_headline,
                              oracle_sideline, oracle_io, in, out);
        }
    } catch (const ParseError& e) {
        err << "cayrec: parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        err << "cayrec: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "cayrec: " << e.what() << "\n";
        return kUsage;
    }
    err << "cayrec: no subcommand\n";
    return kUsage;
}

}  // namespace cayrec::cli
