#include "specht/cli.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "specht/jsonio.hpp"

namespace specht {

namespace {

struct Options {
    std::string flavor = "plain";
    int n = -1;
    int r = 0;  // 0 = not given
    std::string format = "text";
    std::uint64_t seed = 1;
    Caps caps;
    std::string lambda;
    std::string element;
    std::string suite = "all";
    bool heart = false;
};

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--flavor", o.flavor, "word system: plain | rword | biword")
        ->check(CLI::IsMember({"plain", "rword", "biword"}));
    cmd->add_option("-r", o.r, "root-of-unity order (rword flavor)");
    cmd->add_option("--format", o.format, "output format: text | json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--seed", o.seed, "seed for randomized suites");
    cmd->add_option("--cap-group", o.caps.group_cap, "largest group enumerated");
    cmd->add_option("--cap-orbit", o.caps.orbit_cap, "largest word orbit enumerated");
    cmd->add_option("--cap-matrix", o.caps.matrix_cap, "largest Specht matrix materialized");
}

WordSystem flavor_of(const Options& o) { return parse_word_system(o.flavor); }

// The group's root order for a flavor: plain and biword fix it, rword takes -r.
int group_r(const Options& o, WordSystem sys, int inferred = 0) {
    switch (sys) {
        case WordSystem::plain:
            if (o.r > 1) throw std::invalid_argument("plain flavor fixes r = 1");
            return 1;
        case WordSystem::biword:
            if (o.r != 0 && o.r != 2) throw std::invalid_argument("biword flavor fixes r = 2");
            return 2;
        case WordSystem::rword:
            if (o.r > 0) return o.r;
            if (inferred > 0) return inferred;
            throw std::invalid_argument("rword flavor needs -r");
    }
    throw std::logic_error("bad word system");
}

int shape_rank(const Partition&) { return 1; }
int shape_rank(const MultiPartition& m) { return m.rank(); }
int shape_rank(const BiPartition&) { return 2; }

template <typename F>
void with_shape(const Options& o, F&& f) {
    WordSystem sys = flavor_of(o);
    auto run = [&](const auto& shape) {
        if (o.n >= 0 && shape.size() != o.n)
            throw std::invalid_argument("-n disagrees with the size of --lambda");
        f(shape);
    };
    switch (sys) {
        case WordSystem::plain:
            run(parse_partition(o.lambda));
            return;
        case WordSystem::rword:
            run(parse_multipartition(o.lambda, o.r > 0 ? o.r : -1));
            return;
        case WordSystem::biword:
            run(parse_bipartition(o.lambda));
            return;
    }
}

std::string entry_glyph(int e) { return e == 0 ? "." : (e > 0 ? "+" : "-"); }

// Column width in characters, not bytes (labels may carry a degree sign).
std::size_t display_width(const std::string& s) {
    std::size_t w = 0;
    for (unsigned char ch : s)
        if ((ch & 0xc0) != 0x80) ++w;
    return w;
}

void print_grid(std::ostream& out, const std::vector<std::string>& row_labels,
                const std::vector<std::string>& col_labels,
                const std::vector<std::vector<std::string>>& cells) {
    std::size_t rw = 0;
    for (const auto& s : row_labels) rw = std::max(rw, display_width(s));
    std::vector<std::size_t> cw(col_labels.size());
    for (std::size_t j = 0; j < col_labels.size(); ++j) {
        cw[j] = display_width(col_labels[j]);
        for (const auto& row : cells) cw[j] = std::max(cw[j], display_width(row[j]));
    }
    auto pad = [](const std::string& s, std::size_t w) {
        return std::string(w - display_width(s), ' ') + s;
    };
    out << std::string(rw, ' ');
    for (std::size_t j = 0; j < col_labels.size(); ++j) out << "  " << pad(col_labels[j], cw[j]);
    out << "\n";
    for (std::size_t i = 0; i < row_labels.size(); ++i) {
        out << pad(row_labels[i], rw);
        for (std::size_t j = 0; j < col_labels.size(); ++j) out << "  " << pad(cells[i][j], cw[j]);
        out << "\n";
    }
}

std::string group_order_expr(WordSystem sys, int n, int r) {
    switch (sys) {
        case WordSystem::plain: return std::to_string(n) + "!";
        case WordSystem::rword: return std::to_string(r) + "^" + std::to_string(n) + "*" +
                                       std::to_string(n) + "!";
        case WordSystem::biword: return "2^" + std::to_string(n) + "*" + std::to_string(n) + "!";
    }
    return "";
}

int cmd_shapes(const Options& o, std::ostream& out) {
    WordSystem sys = flavor_of(o);
    int r = group_r(o, sys);
    if (o.n < 0) throw std::invalid_argument("shapes needs -n");

    std::vector<std::string> names;
    std::vector<long long> fs;
    auto collect = [&](const auto& shapes) {
        for (const auto& s : shapes) {
            names.push_back(to_string(s));
            fs.push_back(count_standard(s));
        }
    };
    switch (sys) {
        case WordSystem::plain: collect(partitions_of(o.n)); break;
        case WordSystem::rword: collect(multipartitions_of(o.n, r)); break;
        case WordSystem::biword: collect(bipartitions_of(o.n)); break;
    }
    unsigned long long sum = 0;
    for (long long f : fs) sum += static_cast<unsigned long long>(f) * f;

    if (o.format == "json") {
        json shapes = json::array();
        for (std::size_t i = 0; i < names.size(); ++i)
            shapes.push_back(json{{"shape", names[i]}, {"f", fs[i]}});
        out << json{{"flavor", to_string(sys)},
                    {"n", o.n},
                    {"r", r},
                    {"shapes", shapes},
                    {"sum_of_squares", sum},
                    {"group_order", group_order(o.n, r)}}
                   .dump()
            << "\n";
    } else {
        for (std::size_t i = 0; i < names.size(); ++i)
            out << names[i] << ", f=" << fs[i] << "\n";
        out << "sum of squares: " << sum << " = " << group_order_expr(sys, o.n, r) << "\n";
    }
    return sum == group_order(o.n, r) ? 0 : 1;
}

int cmd_words(const Options& o, std::ostream& out) {
    with_shape(o, [&](const auto& shape) {
        Word canon = canonical_word(shape);
        auto orb = orbit(shape, o.caps.orbit_cap);
        if (o.format == "json") {
            json words = json::array();
            for (const auto& w : orb) words.push_back(to_string(w));
            out << json{{"flavor", to_string(canon.system())},
                        {"lambda", to_string(shape)},
                        {"canonical", to_string(canon)},
                        {"orbit_size", orb.size()},
                        {"orbit", words}}
                       .dump()
                << "\n";
        } else {
            out << "canonical: " << to_string(canon) << "\n";
            out << "orbit size: " << orb.size() << "\n";
            for (const auto& w : orb) out << to_string(w) << "\n";
        }
    });
    return 0;
}

int cmd_specht(const Options& o, std::ostream& out) {
    with_shape(o, [&](const auto& shape) {
        std::vector<Word> rows, cols;
        std::vector<std::vector<int>> entries;
        if (o.heart) {
            HeartData h = heart_submatrix(shape);
            rows = h.row_labels;
            cols = h.col_labels;
            entries = h.entries;
        } else {
            SpechtMatrix m = specht_matrix(shape, o.caps);
            rows = m.row_labels();
            cols = m.col_labels();
            entries.assign(m.rows(), std::vector<int>(m.cols()));
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < m.cols(); ++j) entries[i][j] = m.entry(i, j);
        }
        if (o.format == "json") {
            json jr = json::array(), jc = json::array();
            for (const auto& w : rows) jr.push_back(to_string(w));
            for (const auto& w : cols) jc.push_back(to_string(w));
            out << json{{"lambda", to_string(shape)},
                        {"heart", o.heart},
                        {"rows", jr},
                        {"cols", jc},
                        {"entries", entries}}
                       .dump()
                << "\n";
        } else {
            std::vector<std::string> rl, cl;
            for (const auto& w : rows) rl.push_back(to_string(w));
            for (const auto& w : cols) cl.push_back(to_string(w));
            std::vector<std::vector<std::string>> cells(rl.size(),
                                                        std::vector<std::string>(cl.size()));
            for (std::size_t i = 0; i < rl.size(); ++i)
                for (std::size_t j = 0; j < cl.size(); ++j)
                    cells[i][j] = entry_glyph(entries[i][j]);
            print_grid(out, rl, cl, cells);
        }
    });
    return 0;
}

int cmd_rep(const Options& o, std::ostream& out) {
    with_shape(o, [&](const auto& shape) {
        WordSystem sys = flavor_of(o);
        int r = group_r(o, sys, sys == WordSystem::rword ? shape_rank(shape) : 0);
        MonomialElement g = parse_element(o.element, shape.size(), r);
        RepBuilder builder(shape);
        RepMatrix m = sys == WordSystem::biword ? builder.matrix(to_signed(g))
                                                : builder.matrix(g);
        if (o.format == "json") {
            json rows = json::array();
            for (const auto& row : m.entries()) {
                json jrow = json::array();
                for (const auto& v : row) jrow.push_back(to_json(v));
                rows.push_back(std::move(jrow));
            }
            out << json{{"flavor", to_string(sys)},
                        {"lambda", to_string(shape)},
                        {"element", to_json(g)},
                        {"matrix", rows}}
                       .dump()
                << "\n";
        } else {
            std::size_t width = 1;
            for (const auto& row : m.entries())
                for (const auto& v : row) width = std::max(width, v.to_string().size());
            for (const auto& row : m.entries()) {
                for (std::size_t j = 0; j < row.size(); ++j) {
                    std::string s = row[j].to_string();
                    out << (j ? " " : "") << std::string(width - s.size(), ' ') << s;
                }
                out << "\n";
            }
        }
    });
    return 0;
}

int cmd_chartable(const Options& o, std::ostream& out) {
    WordSystem sys = flavor_of(o);
    int r = group_r(o, sys);
    if (o.n < 0) throw std::invalid_argument("chartable needs -n");
    CharacterTable t = character_table(o.n, r, sys, o.caps);
    if (o.format == "json") {
        out << to_json(t).dump() << "\n";
        return 0;
    }
    std::vector<std::string> cl, rl{"(size)"};
    for (const auto& c : t.classes) cl.push_back(to_string(c.type));
    for (const auto& s : t.shapes) rl.push_back(s);
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> sizes;
    for (const auto& c : t.classes) sizes.push_back(std::to_string(c.size));
    cells.push_back(std::move(sizes));
    for (const auto& row : t.values) {
        std::vector<std::string> line;
        for (const auto& v : row) line.push_back(v.to_string());
        cells.push_back(std::move(line));
    }
    print_grid(out, rl, cl, cells);
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    WordSystem sys = flavor_of(o);
    int r = group_r(o, sys);
    if (o.n < 0) throw std::invalid_argument("verify needs -n");
    VerifyReport report = verify(sys, o.n, r, o.suite, o.seed, o.caps);
    if (o.format == "json") {
        out << to_json(report).dump() << "\n";
    } else {
        std::set<std::string> suites;
        for (const auto& c : report.checks) {
            suites.insert(c.suite);
            out << (c.pass ? "[PASS] " : "[FAIL] ") << c.suite << ": " << c.name;
            if (!c.pass) out << " -- " << c.witness;
            out << "\n";
        }
        out << (report.all_pass() ? "PASS" : "FAIL") << " (" << suites.size() << " suites, "
            << report.failures() << " failures)\n";
    }
    if (!report.all_pass()) {
        json failing = json::array();
        for (const auto& c : report.checks)
            if (!c.pass)
                failing.push_back(json{{"suite", c.suite}, {"name", c.name},
                                       {"witness", c.witness}});
        err << json{{"error", "verification failed"}, {"checks", failing}}.dump() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact representing matrices for S_n, S^(r)_n and H_n from Specht matrices"};
    app.require_subcommand(1);

    auto* shapes_cmd = app.add_subcommand("shapes", "list shapes with standard-tableau counts");
    shapes_cmd->add_option("-n", o.n, "size")->required();
    add_common(shapes_cmd, o);
    shapes_cmd->footer("Examples:\n  shapes -n 5\n  shapes -n 3 --flavor biword");

    auto* words_cmd = app.add_subcommand("words", "canonical word and its orbit");
    words_cmd->add_option("--lambda", o.lambda, "shape")->required();
    words_cmd->add_option("-n", o.n, "size (optional, checked)");
    add_common(words_cmd, o);
    words_cmd->footer("Examples:\n  words --lambda 2,1,1\n  words --flavor rword -r 3 --lambda \"2,1|2|1,1\"");

    auto* specht_cmd = app.add_subcommand("specht", "Specht matrix or its heart submatrix");
    specht_cmd->add_option("--lambda", o.lambda, "shape")->required();
    specht_cmd->add_flag("--heart", o.heart, "restrict to standard-pair rows and columns");
    specht_cmd->add_option("-n", o.n, "size (optional, checked)");
    add_common(specht_cmd, o);
    specht_cmd->footer("Examples:\n  specht --lambda 2,1,1\n  specht --lambda 3,2 --heart");

    auto* rep_cmd = app.add_subcommand("rep", "representing matrix of a group element");
    rep_cmd->add_option("--lambda", o.lambda, "shape")->required();
    rep_cmd->add_option("--element", o.element, "group element")->required();
    rep_cmd->add_option("-n", o.n, "size (optional, checked)");
    add_common(rep_cmd, o);
    rep_cmd->footer("Examples:\n  rep --lambda 3,2 --element \"(1,2)\"\n"
                    "  rep --flavor rword -r 3 --lambda \"|3,2|\" --element t1\n"
                    "  rep --flavor biword --lambda \"|3,2\" --element \"t1 (1,2,3,4,5)\"");

    auto* chartable_cmd = app.add_subcommand("chartable", "character table");
    chartable_cmd->add_option("-n", o.n, "size")->required();
    add_common(chartable_cmd, o);
    chartable_cmd->footer("Examples:\n  chartable -n 3\n  chartable -n 2 -r 2 --flavor rword");

    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    verify_cmd->add_option("-n", o.n, "size")->required();
    verify_cmd->add_option("--suite", o.suite,
                           "homomorphism | dimension | orthogonality | triangular | "
                           "free-orbit | rank | cross-r2 | all");
    add_common(verify_cmd, o);
    verify_cmd->footer("Examples:\n  verify -n 4 --suite all\n  verify -n 3 -r 2 --flavor rword --suite cross-r2");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        int code = app.exit(e, out, msg);
        err << msg.str();
        return code;
    }

    try {
        if (shapes_cmd->parsed()) return cmd_shapes(o, out);
        if (words_cmd->parsed()) return cmd_words(o, out);
        if (specht_cmd->parsed()) return cmd_specht(o, out);
        if (rep_cmd->parsed()) return cmd_rep(o, out);
        if (chartable_cmd->parsed()) return cmd_chartable(o, out);
        if (verify_cmd->parsed()) return cmd_verify(o, out, err);
    } catch (const std::exception& e) {
        err << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace specht
