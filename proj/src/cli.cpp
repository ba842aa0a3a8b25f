#include "lietk/cli.hpp"

#include "lietk/chevalley.hpp"
#include "lietk/classify.hpp"
#include "lietk/free_lie.hpp"
#include "lietk/json_io.hpp"
#include "lietk/matrix_lie.hpp"
#include "lietk/structure.hpp"
#include "lietk/weights.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace lietk {

using nlohmann::json;

int exit_code_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NotFiniteType: return exit_bad_cartan;
    case ErrorKind::NotNilpotent:
    case ErrorKind::NotClosed: return exit_precondition;
    case ErrorKind::NonSplit: return exit_non_split;
    case ErrorKind::NotSemisimple: return exit_not_semisimple;
    case ErrorKind::InternalDefect: return exit_check_failed;
    default: return exit_usage;
    }
}

namespace {

class Io {
  public:
    Io(std::istream &in, std::ostream &out) : in_(in), out_(out) {}

    std::string read(const std::string &path) {
        if (path == "-") {
            std::ostringstream ss;
            ss << in_.rdbuf();
            return ss.str();
        }
        std::ifstream f(path, std::ios::binary);
        if (!f)
            fail(ErrorKind::InvalidArgument, "cannot read " + path);
        std::ostringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }

    void write(const std::string &path, const std::string &text) {
        if (path == "-") {
            out_ << text;
            out_.flush();
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f || !(f << text))
            fail(ErrorKind::InvalidArgument, "cannot write " + path);
    }

  private:
    std::istream &in_;
    std::ostream &out_;
};

json vector_json(const Vector &v) {
    json a = json::array();
    for (const auto &c : v)
        a.push_back(c.str());
    return a;
}

std::string dump(const json &j) { return j.dump() + "\n"; }

std::vector<std::size_t> parse_index_list(const std::string &s, std::size_t bound) {
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (const std::logic_error &) {
            used = 0;
        }
        if (used == 0 || used != item.size())
            fail(ErrorKind::InvalidArgument, "\"" + s + "\" is not a comma-separated list of indices");
        if (v >= bound)
            fail(ErrorKind::InvalidArgument, "index " + item + " is out of range for dimension " +
                                                 std::to_string(bound));
        out.push_back(v);
    }
    return out;
}

LieSubspace cartan_subspace(const AlgebraDocument &doc, const std::string &flag) {
    const std::size_t n = doc.algebra.dim();
    std::vector<std::size_t> idx;
    if (!flag.empty())
        idx = parse_index_list(flag, n);
    else if (doc.cartan_indices)
        idx = *doc.cartan_indices;
    else
        fail(ErrorKind::InvalidArgument, "--cartan-basis is required when the input has no \"cartan_indices\"");
    std::vector<Vector> vs;
    for (auto i : idx)
        vs.push_back(unit_vector(n, i));
    Subspace s = Subspace::span(n, vs);
    if (s.dim() != idx.size())
        fail(ErrorKind::InvalidArgument, "--cartan-basis lists a repeated index");
    return lie_subspace(doc.algebra, std::move(s));
}

CartanMatrix cartan_from_flags(Io &io, const std::string &label, std::size_t rank, const std::string &file) {
    if (!file.empty())
        return parse_cartan_json(io.read(file));
    auto t = parse_type(label, rank);
    if (!t)
        fail(ErrorKind::InvalidArgument, "unknown Cartan type \"" + label + "\"" +
                                             (rank ? " of rank " + std::to_string(rank) : std::string()));
    return named_cartan(*t);
}

std::string construct_chevalley(const CartanMatrix &A) {
    ChevalleyAlgebra C = chevalley_algebra(A);
    AlgebraDocument doc{C.algebra, C.cartan_indices, std::nullopt, {}};
    for (const auto &[root, k] : C.root_index)
        doc.roots.emplace_back(k, root);
    std::sort(doc.roots.begin(), doc.roots.end());
    return write_algebra_json(doc);
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    Io io(in, out);
    CLI::App app{"Exact computations with finite-dimensional Lie algebras over Q", "lietk"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every command");

    std::string input = "-", output = "-";
    auto add_io = [&](CLI::App *sub, bool with_input) {
        if (with_input)
            sub->add_option("input", input, "Algebra JSON file, - for standard input")->capture_default_str();
        sub->add_option("-o,--output", output, "Output file, - for standard output")->capture_default_str();
    };

    // construct
    std::string family, cartan_label, cartan_file;
    std::size_t n = 0, rank = 0;
    std::optional<std::size_t> q;
    auto *construct = app.add_subcommand("construct", "Build an algebra from a classical family or a Cartan matrix");
    construct->add_option("--family", family, "gl, sl, so, so-prime, so-jd, sp, t or n");
    construct->add_option("--n", n, "Matrix size (block size for sp and so-jd, p for so-prime)");
    construct->add_option("--q", q, "q for so-prime (defaults to p)");
    construct->add_option("--cartan", cartan_label, "Catalogue type: A..G, optionally with the rank (E8)");
    construct->add_option("--rank", rank, "Rank for --cartan");
    construct->add_option("--cartan-file", cartan_file, "Cartan matrix JSON");
    add_io(construct, false);

    // check
    bool full = false;
    std::optional<std::uint64_t> sampled_seed;
    std::size_t samples = 200;
    auto *check = app.add_subcommand("check", "Check the Lie axioms on basis triples");
    add_io(check, true);
    auto *full_flag = check->add_flag("--full", full, "Check every ordered triple");
    check->add_option("--sampled", sampled_seed, "Check seeded random triples")->excludes(full_flag);
    check->add_option("--samples", samples, "Number of sampled triples")->capture_default_str();

    // series / radical / killing / info
    bool derived_only = false, lower_only = false;
    auto *series = app.add_subcommand("series", "Derived and lower central series dimensions");
    add_io(series, true);
    series->add_flag("--derived", derived_only, "Only the derived series");
    series->add_flag("--lower", lower_only, "Only the lower central series");
    auto *rad = app.add_subcommand("radical", "Radical basis and solvable/semisimple verdicts");
    add_io(rad, true);
    auto *killing = app.add_subcommand("killing", "Killing form matrix and its rank");
    add_io(killing, true);
    auto *info = app.add_subcommand("info", "Dimension, centre and structural verdicts");
    add_io(info, true);

    // roots / classify
    std::string cartan_basis;
    auto *roots = app.add_subcommand("roots", "Root-space decomposition for a Cartan subalgebra");
    add_io(roots, true);
    roots->add_option("--cartan-basis", cartan_basis, "Comma-separated basis indices spanning H");
    auto *classify = app.add_subcommand("classify", "Simple components of a split semisimple algebra");
    add_io(classify, true);
    classify->add_option("--cartan-basis", cartan_basis, "Comma-separated basis indices spanning H");

    // dynkin
    std::string format = "ascii";
    std::string dynkin_input;
    auto *dyn = app.add_subcommand("dynkin", "Dynkin diagram of a Cartan matrix");
    dyn->add_option("input", dynkin_input, "Cartan matrix JSON file, - for standard input");
    dyn->add_option("--cartan", cartan_label, "Catalogue type: A..G, optionally with the rank (E8)");
    dyn->add_option("--rank", rank, "Rank for --cartan");
    dyn->add_option("--cartan-file", cartan_file, "Cartan matrix JSON");
    dyn->add_option("--format", format, "ascii, dot or json")
        ->check(CLI::IsMember({"ascii", "dot", "json"}))
        ->capture_default_str();
    add_io(dyn, false);

    // free
    std::size_t alphabet = 0, degree = 0;
    bool witt = false;
    std::string eval_target, element;
    std::vector<std::string> assignments;
    auto *fre = app.add_subcommand("free", "Lyndon basis of the free Lie algebra, Witt numbers, lifts");
    fre->add_option("--alphabet", alphabet, "Number of letters (a, b, ...)")->required();
    fre->add_option("--degree", degree, "Largest degree (also the truncation degree)")->required();
    fre->add_flag("--witt", witt, "Print the dimension of each degree");
    auto *eval_opt = fre->add_option("--eval", eval_target, "Target algebra JSON for lifting --element");
    fre->add_option("--assign", assignments, "letter=basis name or index, once per letter")->needs(eval_opt);
    fre->add_option("--element", element, "Free Lie element to lift")->needs(eval_opt);
    add_io(fre, false);

    std::vector<const char *> argv{"lietk"};
    for (const auto &a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << "lietk: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (construct->parsed()) {
            const int chosen = !family.empty() + !cartan_label.empty() + !cartan_file.empty();
            if (chosen != 1)
                fail(ErrorKind::InvalidArgument, "construct needs exactly one of --family, --cartan, --cartan-file");
            if (!family.empty()) {
                auto f = parse_family(family);
                if (!f)
                    fail(ErrorKind::InvalidArgument, "unknown family \"" + family + "\"");
                if (n == 0)
                    fail(ErrorKind::InvalidArgument, "--family needs --n >= 1");
                if (q && *f != Family::so_prime)
                    fail(ErrorKind::InvalidArgument, "--q only applies to so-prime");
                MatrixLieAlgebra M = classical(*f, n, q);
                AlgebraDocument doc{to_abstract(M), std::nullopt, M.basis(), {}};
                auto diag = diagonal_indices(M);
                if (!diag.empty())
                    doc.cartan_indices = diag;
                io.write(output, write_algebra_json(doc));
            } else {
                io.write(output, construct_chevalley(cartan_from_flags(io, cartan_label, rank, cartan_file)));
            }
            return exit_ok;
        }

        if (dyn->parsed()) {
            const int chosen = !cartan_label.empty() + !cartan_file.empty() + !dynkin_input.empty();
            if (chosen != 1)
                fail(ErrorKind::InvalidArgument, "dynkin needs exactly one of INPUT, --cartan, --cartan-file");
            CartanMatrix A = cartan_from_flags(io, cartan_label, rank,
                                               dynkin_input.empty() ? cartan_file : dynkin_input);
            DynkinDiagram D = dynkin(A);
            if (format == "json") {
                json edges = json::array();
                for (const auto &e : D.edges) {
                    json je{{"i", e.i}, {"j", e.j}, {"multiplicity", e.multiplicity}};
                    je["arrow_to"] = e.arrow_to ? json(*e.arrow_to) : json(nullptr);
                    edges.push_back(std::move(je));
                }
                json comps = json::array();
                for (const auto &c : recognize(D))
                    comps.push_back({{"nodes", c.nodes}, {"type", c.type ? json(c.type->str()) : json(nullptr)}});
                io.write(output, dump({{"nodes", D.nodes}, {"edges", edges}, {"components", comps}}));
            } else {
                io.write(output, render_dynkin(D, format == "dot" ? DynkinFormat::dot : DynkinFormat::ascii));
            }
            return exit_ok;
        }

        if (fre->parsed()) {
            if (alphabet < 1 || degree < 1)
                fail(ErrorKind::InvalidArgument, "free needs --alphabet >= 1 and --degree >= 1");
            if (witt) {
                json dims = json::array();
                for (std::size_t d = 1; d <= degree; ++d) {
                    mpz_class w = graded_dimension(alphabet, d);
                    if (w.fits_ulong_p())
                        dims.push_back(w.get_ui());
                    else
                        dims.push_back(w.get_str());
                }
                io.write(output, dump(dims));
                return exit_ok;
            }
            if (eval_target.empty()) {
                std::string text;
                for (std::size_t d = 1; d <= degree; ++d) {
                    text += std::to_string(d) + ":";
                    for (const auto &w : lyndon_words(alphabet, d))
                        text += " " + bracketing_string(w);
                    text += "\n";
                }
                io.write(output, text);
                return exit_ok;
            }
            if (element.empty())
                fail(ErrorKind::InvalidArgument, "--eval needs --element");
            AlgebraDocument doc = parse_algebra_json(io.read(eval_target));
            LieAlgebra L;
            try {
                L = verify(doc.algebra);
            } catch (const LieError &e) {
                err << "lietk: target algebra: " << e.what() << "\n";
                return exit_check_failed;
            }
            FreeLieAlgebra F(alphabet, degree);
            std::vector<std::optional<Vector>> assigned(alphabet);
            for (const auto &a : assignments) {
                auto eq = a.find('=');
                if (eq != 1 || a[0] < 'a' || static_cast<std::size_t>(a[0] - 'a') >= alphabet)
                    fail(ErrorKind::InvalidArgument, "--assign expects letter=target, got \"" + a + "\"");
                const std::string target = a.substr(2);
                const auto &names = L.basis_names();
                std::size_t idx = std::find(names.begin(), names.end(), target) - names.begin();
                if (idx == names.size()) {
                    std::size_t used = 0;
                    try {
                        idx = std::stoul(target, &used);
                    } catch (const std::logic_error &) {
                        used = 0;
                    }
                    if (used == 0 || used != target.size() || idx >= L.dim())
                        fail(ErrorKind::InvalidArgument, "\"" + target + "\" is not a basis name or index of the target");
                }
                assigned[a[0] - 'a'] = unit_vector(L.dim(), idx);
            }
            std::vector<Vector> assignment;
            for (std::size_t i = 0; i < alphabet; ++i) {
                if (!assigned[i])
                    fail(ErrorKind::InvalidArgument, std::string("no --assign for letter ") + char('a' + i));
                assignment.push_back(*assigned[i]);
            }
            FreeLieElement x = F.parse(element);
            Vector v = lift(assignment, L, x);
            io.write(output, dump({{"element", F.format(x)}, {"value", vector_json(v)}}));
            return exit_ok;
        }

        AlgebraDocument doc = parse_algebra_json(io.read(input));
        const LieAlgebra &L = doc.algebra;

        if (check->parsed()) {
            CheckMode mode = full ? CheckMode::Full : sampled_seed ? CheckMode::Sampled : CheckMode::Automatic;
            AxiomReport rep = check_axioms(L, mode, sampled_seed.value_or(0), samples);
            json failures = json::array();
            const auto &names = L.basis_names();
            for (const auto &t : rep.failures)
                failures.push_back({{"triple", {names[t.i], names[t.j], names[t.k]}},
                                    {"leibniz", t.leibniz},
                                    {"jacobi", t.jacobi},
                                    {"normal_form", t.normal_form}});
            io.write(output, dump({{"ok", rep.ok},
                                   {"mode", rep.sampled ? "sampled" : "full"},
                                   {"triples_checked", rep.triples_checked},
                                   {"forms_agree", rep.forms_agree},
                                   {"failures", failures}}));
            return rep.ok ? exit_ok : exit_check_failed;
        }

        if (series->parsed()) {
            json j;
            if (!lower_only || derived_only)
                j["derived"] = derived_series(L).dims();
            if (!derived_only || lower_only)
                j["lower_central"] = lower_central_series(L).dims();
            j["solvable"] = is_solvable(L).holds;
            j["nilpotent"] = is_nilpotent(L).holds;
            io.write(output, dump(j));
            return exit_ok;
        }

        if (rad->parsed()) {
            LieSubspace R = radical(L);
            json basis = json::array();
            for (const auto &v : R.space.basis())
                basis.push_back(vector_json(v));
            io.write(output, dump({{"dim", R.dim()},
                                   {"basis", basis},
                                   {"solvable", R.space.is_full()},
                                   {"semisimple", R.space.is_zero()}}));
            return exit_ok;
        }

        if (killing->parsed()) {
            Matrix K = killing_form(L);
            json rows = json::array();
            for (std::size_t r = 0; r < K.rows(); ++r)
                rows.push_back(vector_json(K.row_vector(r)));
            io.write(output, dump({{"matrix", rows}, {"rank", lietk::rank(K)}}));
            return exit_ok;
        }

        if (info->parsed()) {
            const bool semisimple = is_semisimple(L);
            io.write(output, dump({{"dim", L.dim()},
                                   {"center_dim", center(L).dim()},
                                   {"abelian", is_abelian(L)},
                                   {"nilpotent", is_nilpotent(L).holds},
                                   {"solvable", is_solvable(L).holds},
                                   {"semisimple", semisimple},
                                   {"simple", semisimple && is_simple(L)}}));
            return exit_ok;
        }

        if (roots->parsed()) {
            LieSubspace H = cartan_subspace(doc, cartan_basis);
            io.write(output, write_weights_json(root_spaces(L, H)));
            return exit_ok;
        }

        if (classify->parsed()) {
            LieSubspace H = cartan_subspace(doc, cartan_basis);
            SplitDecomposition d = split_decompose(L, H);
            json comps = json::array();
            for (const auto &c : d.components)
                comps.push_back({{"type", std::string(1, c.type.family)}, {"rank", c.type.rank}});
            io.write(output, dump(comps));
            return exit_ok;
        }
    } catch (const LieError &e) {
        err << "lietk: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return exit_code_for(e.kind());
    }
    err << "lietk: no command given\n";
    return exit_usage;
}

} // namespace lietk
