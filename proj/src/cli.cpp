#include "treepat/cli.hpp"

#include "treepat/classifier.hpp"
#include "treepat/gentree.hpp"
#include "treepat/gf_engine.hpp"
#include "treepat/oeis.hpp"
#include "treepat/oracle.hpp"
#include "treepat/permbridge.hpp"
#include "treepat/ratfun.hpp"
#include "treepat/serialize.hpp"
#include "treepat/tree.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <ostream>
#include <sstream>

namespace treepat::cli {

namespace {

using nlohmann::json;

std::string seq_str(const std::vector<Int>& v) {
    std::string out;
    for (const Int& x : v) {
        if (!out.empty()) out += ", ";
        out += x.str();
    }
    return out;
}

std::string seq_str_u64(const std::vector<std::uint64_t>& v) {
    std::string out;
    for (auto x : v) {
        if (!out.empty()) out += ", ";
        out += std::to_string(x);
    }
    return out;
}

json json_seq(const std::vector<Int>& v) { return seq_to_json(v); }

json json_gf(const RationalGF& g) { return gf_to_json(g); }

std::string bfile_str(const std::vector<Int>& terms) {
    std::string out;
    for (size_t i = 0; i < terms.size(); ++i) out += std::to_string(i + 1) + " " + terms[i].str() + "\n";
    return out;
}

std::string csv_seq(const std::vector<Int>& terms) {
    std::string out = "n,value\n";
    for (size_t i = 0; i < terms.size(); ++i) out += std::to_string(i + 1) + "," + terms[i].str() + "\n";
    return out;
}

std::vector<Int> parse_int_list(const std::string& text) {
    std::vector<Int> out;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
        std::istringstream ws(tok);
        std::string piece;
        while (ws >> piece) out.emplace_back(piece);
    }
    return out;
}

std::string grow_str(double g) {
    std::ostringstream os;
    os.precision(10);
    os << g;
    return os.str();
}

std::vector<Tree> parse_patterns(const std::vector<std::string>& literals) {
    std::vector<Tree> out;
    out.reserve(literals.size());
    for (const std::string& s : literals) out.push_back(parse_tree(s));
    return out;
}

double safe_growth(const RationalGF& g) {
    try {
        return g.growth_rate();
    } catch (const std::domain_error&) {
        return std::nan("");
    }
}

json oeis_json(const std::vector<OeisMatch>& ms) {
    json a = json::array();
    for (const auto& m : ms) a.push_back(m.id);
    return a;
}

int cmd_enumerate(int n, const std::string& format, std::ostream& out) {
    auto trees = enumerate_trees(n);
    if (format == "json") {
        json j{{"n", n}, {"count", trees.size()}};
        json arr = json::array();
        for (const Tree& t : trees) arr.push_back(render_tree(t));
        j["trees"] = std::move(arr);
        out << j.dump() << "\n";
    } else if (format == "csv") {
        out << "rank,tree\n";
        for (size_t i = 0; i < trees.size(); ++i) out << (i + 1) << "," << render_tree(trees[i]) << "\n";
    } else {
        for (const Tree& t : trees) out << render_tree(t) << "\n";
    }
    return 0;
}

int cmd_gf(const std::vector<std::string>& literals, int terms, const std::string& format, bool minimize,
           bool with_gf, std::ostream& out) {
    GfEngine engine(minimize);
    RationalGF g = engine.gf_set(parse_patterns(literals));
    auto coeffs = g.series(terms);
    std::vector<Int> seq(coeffs.begin() + 1, coeffs.end());
    std::vector<OeisMatch> matches;
    if (seq.size() >= 6) {
        OeisClient::Options o;
        o.use_network = false;  // gf output stays deterministic; `annotate` talks to the network
        matches = OeisClient(o).annotate(seq);
    }
    if (format == "json") {
        json j{{"patterns", literals}, {"sequence", json_seq(seq)}, {"oeis", oeis_json(matches)}};
        if (with_gf) {
            j["gf"] = json_gf(g);
            double gr = safe_growth(g);
            j["growth_rate"] = std::isnan(gr) ? json() : json(gr);
        }
        out << j.dump() << "\n";
    } else if (format == "bfile") {
        out << bfile_str(seq);
    } else if (format == "csv") {
        out << csv_seq(seq);
    } else if (with_gf) {
        out << "gf: " << g.str() << "\n";
        out << "sequence: " << seq_str(seq) << "\n";
        double gr = safe_growth(g);
        if (!std::isnan(gr)) out << "growth_rate: " << grow_str(gr) << "\n";
        if (!matches.empty()) {
            out << "oeis:";
            for (const auto& m : matches) out << " " << m.id;
            out << "\n";
        }
    } else {
        out << seq_str(seq) << "\n";
    }
    return 0;
}

int cmd_oracle(const std::vector<std::string>& literals, int n, int nmax, const std::string& mode_name,
               const std::string& format, std::ostream& out) {
    ContainMode mode = mode_name == "contiguous" ? ContainMode::contiguous : ContainMode::noncontiguous;
    PatternSet s = canonical_set(parse_patterns(literals), /*minimize=*/false);
    if (n > 0) {
        std::uint64_t c = count_avoiders(n, s, mode);
        if (format == "json")
            out << json{{"patterns", literals}, {"mode", mode_name}, {"n", n}, {"count", c}}.dump() << "\n";
        else
            out << c << "\n";
        return 0;
    }
    auto counts = sequence_brute(nmax, s, mode);
    std::vector<Int> seq(counts.begin(), counts.end());
    if (format == "json")
        out << json{{"patterns", literals}, {"mode", mode_name}, {"sequence", json_seq(seq)}}.dump() << "\n";
    else if (format == "bfile")
        out << bfile_str(seq);
    else if (format == "csv")
        out << csv_seq(seq);
    else
        out << seq_str_u64(counts) << "\n";
    return 0;
}

char class_id(size_t index) { return static_cast<char>('A' + index); }

int cmd_classify(int k1, int k2, int prefix, const std::string& format, std::ostream& out) {
    GfEngine engine;
    auto pairs = incomparable_pairs(k1, k2);
    if (pairs.empty()) {
        if (format == "json")
            out << json{{"k1", k1}, {"k2", k2}, {"classes", json::array()}}.dump() << "\n";
        return 0;
    }
    auto classes = wilf_classify(engine, pairs, prefix);
    if (format == "json") {
        json arr = json::array();
        for (size_t i = 0; i < classes.size(); ++i) {
            const WilfClass& c = classes[i];
            json members = json::array();
            for (const PatternSet& s : c.members) {
                json m = json::array();
                for (const Tree& t : s.elements()) m.push_back(render_tree(t));
                members.push_back(std::move(m));
            }
            arr.push_back(json{{"class", std::string(1, class_id(i))},
                               {"gf", json_gf(c.gf)},
                               {"sequence", json_seq(c.sequence_prefix)},
                               {"members", std::move(members)}});
        }
        out << json{{"k1", k1}, {"k2", k2}, {"classes", std::move(arr)}}.dump() << "\n";
    } else if (format == "csv") {
        out << "class,gf_num,gf_den,sequence,members\n";
        for (size_t i = 0; i < classes.size(); ++i) {
            const WilfClass& c = classes[i];
            auto joined = [](const std::vector<Int>& v) {
                std::string s;
                for (const Int& x : v) {
                    if (!s.empty()) s += " ";
                    s += x.str();
                }
                return s;
            };
            std::string members;
            for (const PatternSet& s : c.members) {
                if (!members.empty()) members += " ; ";
                members += s.key();
            }
            out << class_id(i) << ",\"" << joined(c.gf.num().coeffs()) << "\",\"" << joined(c.gf.den().coeffs())
                << "\",\"" << joined(c.sequence_prefix) << "\",\"" << members << "\"\n";
        }
    } else {
        for (size_t i = 0; i < classes.size(); ++i) {
            const WilfClass& c = classes[i];
            out << "class " << class_id(i) << ": " << c.gf.str() << "\n";
            out << "  sequence: " << seq_str(c.sequence_prefix) << "\n";
            for (const PatternSet& s : c.members) {
                out << "  {";
                for (int t = 0; t < s.size(); ++t) {
                    if (t) out << ", ";
                    out << render_tree(s.elements()[static_cast<size_t>(t)]);
                }
                out << "}\n";
            }
        }
    }
    return 0;
}

int cmd_gentree(int k, int terms, const std::string& format, std::ostream& out) {
    auto seq = comb_sequence_gentree(k, terms);
    auto coeffs = comb_recurrence_coeffs(k);
    if (format == "json") {
        out << json{{"k", k}, {"sequence", json_seq(seq)}, {"recurrence", coeffs}}.dump() << "\n";
    } else if (format == "bfile") {
        out << bfile_str(seq);
    } else if (format == "csv") {
        out << csv_seq(seq);
    } else {
        out << "sequence: " << seq_str(seq) << "\n";
        out << "recurrence: a(n) =";
        for (size_t m = 0; m < coeffs.size(); ++m) {
            long long c = coeffs[m];
            out << (m == 0 ? " " : c < 0 ? " - " : " + ");
            long long mag = (m > 0 && c < 0) ? -c : c;
            if (mag != 1) out << mag << " ";
            out << "a(n-" << (m + 1) << ")";
        }
        out << "\n";
    }
    return 0;
}

int cmd_perm(const std::string& tree_lit, const std::string& perm_lit, int count_n,
             const std::vector<std::string>& avoid, const std::string& format, std::ostream& out) {
    if (!tree_lit.empty()) {
        Permutation p = tree_to_perm(parse_tree(tree_lit));
        if (format == "json")
            out << json{{"tree", tree_lit}, {"perm", render_perm(p)}}.dump() << "\n";
        else
            out << render_perm(p) << "\n";
        return 0;
    }
    if (!perm_lit.empty()) {
        Tree t = perm_to_tree(parse_perm(perm_lit));
        if (format == "json")
            out << json{{"perm", perm_lit}, {"tree", render_tree(t)}}.dump() << "\n";
        else
            out << render_tree(t) << "\n";
        return 0;
    }
    std::vector<Permutation> q;
    for (const std::string& a : avoid) q.push_back(parse_perm(a));
    std::uint64_t c = count_avoiding_perms(count_n, q);
    if (format == "json")
        out << json{{"n", count_n}, {"avoid", avoid}, {"count", c}}.dump() << "\n";
    else
        out << c << "\n";
    return 0;
}

int cmd_annotate(const std::string& seq_text, bool offline, const std::string& format, std::ostream& out,
                 std::ostream& err) {
    std::vector<Int> seq = parse_int_list(seq_text);
    OeisClient::Options o;
    o.use_network = !offline;
    OeisClient client(o);
    std::string warnings;
    auto matches = client.annotate(seq, &warnings);
    if (!warnings.empty()) err << warnings;
    if (format == "json") {
        json arr = json::array();
        for (const auto& m : matches) arr.push_back(json{{"id", m.id}, {"name", m.name}});
        out << json{{"sequence", json_seq(seq)}, {"matches", std::move(arr)}}.dump() << "\n";
    } else {
        for (const auto& m : matches) {
            out << m.id;
            if (!m.name.empty()) out << " " << m.name;
            out << "\n";
        }
    }
    return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"treepat: enumeration of binary trees avoiding non-contiguous tree patterns"};
    app.require_subcommand(1);

    static const std::vector<std::string> formats{"plain", "json", "csv", "bfile"};
    auto format_check = CLI::IsMember(formats);

    int en_n = 1;
    std::string en_format = "plain";
    auto* en = app.add_subcommand("enumerate", "list all n-leaf trees in canonical order");
    en->add_option("--n", en_n, "number of leaves")->required();
    en->add_option("--format", en_format)->check(format_check);

    std::vector<std::string> gf_patterns;
    int gf_terms = 15;
    std::string gf_format = "plain";
    bool gf_nomin = false;
    auto* gf = app.add_subcommand("gf", "avoidance generating function for a pattern set");
    gf->add_option("--pattern", gf_patterns, "tree literal (repeatable)")->required();
    gf->add_option("--terms", gf_terms, "sequence terms to print")->check(CLI::PositiveNumber);
    gf->add_option("--format", gf_format)->check(format_check);
    gf->add_flag("--no-minimize", gf_nomin, "keep redundant patterns in the set");

    std::vector<std::string> sq_patterns;
    int sq_terms = 15;
    std::string sq_format = "plain";
    bool sq_nomin = false;
    auto* sq = app.add_subcommand("sequence", "avoidance sequence for a pattern set");
    sq->add_option("--pattern", sq_patterns, "tree literal (repeatable)")->required();
    sq->add_option("--terms", sq_terms)->check(CLI::PositiveNumber);
    sq->add_option("--format", sq_format)->check(format_check);
    sq->add_flag("--no-minimize", sq_nomin);

    std::vector<std::string> or_patterns;
    int or_n = 0, or_nmax = 0;
    std::string or_mode = "noncontiguous", or_format = "plain";
    auto* orc = app.add_subcommand("oracle", "brute-force avoidance counts");
    orc->add_option("--pattern", or_patterns)->required();
    auto* or_n_opt = orc->add_option("--n", or_n, "single size")->check(CLI::PositiveNumber);
    orc->add_option("--nmax", or_nmax, "sweep sizes 1..nmax")->check(CLI::PositiveNumber)->excludes(or_n_opt);
    orc->add_option("--mode", or_mode)->check(CLI::IsMember({"noncontiguous", "contiguous"}));
    orc->add_option("--format", or_format)->check(format_check);

    int cl_k1 = 0, cl_k2 = 0, cl_prefix = 15;
    std::string cl_format = "plain";
    auto* cl = app.add_subcommand("classify", "Wilf classes of incomparable pattern pairs");
    cl->add_option("--k1", cl_k1)->required()->check(CLI::PositiveNumber);
    cl->add_option("--k2", cl_k2)->required()->check(CLI::PositiveNumber);
    cl->add_option("--prefix", cl_prefix)->check(CLI::PositiveNumber);
    cl->add_option("--format", cl_format)->check(format_check);

    int gt_k = 0, gt_terms = 15;
    std::string gt_format = "plain";
    auto* gt = app.add_subcommand("gentree", "comb avoidance via the generating-tree recurrence");
    gt->add_option("--k", gt_k, "comb size (k >= 3)")->required()->check(CLI::PositiveNumber);
    gt->add_option("--terms", gt_terms)->check(CLI::PositiveNumber);
    gt->add_option("--format", gt_format)->check(format_check);

    std::string pm_tree, pm_perm;
    int pm_count = -1;
    std::vector<std::string> pm_avoid;
    std::string pm_format = "plain";
    auto* pm = app.add_subcommand("perm", "tree/permutation bijection and avoidance counts");
    auto* pm_tree_opt = pm->add_option("--tree", pm_tree, "tree literal to map to a permutation");
    auto* pm_perm_opt = pm->add_option("--perm", pm_perm, "231-avoiding permutation to map to a tree");
    auto* pm_count_opt = pm->add_option("--count", pm_count, "count length-n avoiders");
    pm->add_option("--avoid", pm_avoid, "permutation pattern (repeatable)");
    pm->add_option("--format", pm_format)->check(format_check);
    pm_tree_opt->excludes(pm_perm_opt)->excludes(pm_count_opt);
    pm_perm_opt->excludes(pm_count_opt);

    std::string an_seq, an_format = "plain";
    bool an_offline = false;
    auto* an = app.add_subcommand("annotate", "look up a sequence in the OEIS cache and endpoint");
    an->add_option("--sequence", an_seq, "comma-separated terms (at least 6)")->required();
    an->add_flag("--offline", an_offline, "skip the network lookup");
    an->add_option("--format", an_format)->check(format_check);

    try {
        // CLI11's vector overload consumes arguments back to front
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (en->parsed()) return cmd_enumerate(en_n, en_format, out);
        if (gf->parsed()) return cmd_gf(gf_patterns, gf_terms, gf_format, !gf_nomin, true, out);
        if (sq->parsed()) return cmd_gf(sq_patterns, sq_terms, sq_format, !sq_nomin, false, out);
        if (orc->parsed()) {
            if (or_n == 0 && or_nmax == 0) {
                err << "usage error: oracle needs --n or --nmax\n";
                return 1;
            }
            return cmd_oracle(or_patterns, or_n, or_nmax, or_mode, or_format, out);
        }
        if (cl->parsed()) return cmd_classify(cl_k1, cl_k2, cl_prefix, cl_format, out);
        if (gt->parsed()) return cmd_gentree(gt_k, gt_terms, gt_format, out);
        if (pm->parsed()) {
            if (pm_tree.empty() && pm_perm.empty() && pm_count < 0) {
                err << "usage error: perm needs --tree, --perm, or --count\n";
                return 1;
            }
            return cmd_perm(pm_tree, pm_perm, pm_count, pm_avoid, pm_format, out);
        }
        if (an->parsed()) return cmd_annotate(an_seq, an_offline, an_format, out, err);
        err << "usage error: unknown subcommand\n";
        return 1;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace treepat::cli
