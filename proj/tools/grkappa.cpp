#include "grk/crystal.hpp"
#include "grk/decomp.hpp"
#include "grk/fock.hpp"
#include "grk/seminormal.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace grk;
using nlohmann::json;

namespace {

struct Options {
    long e = 2;
    std::string kappa_text = "0";
    long d = -1;
    std::string alpha_text;
    std::string format = "text";
    std::string method = "all";
    std::string cache_dir;
    long dmax = -1;
    long jobs = 0;
};

struct Setup {
    QuantumChar qc;
    std::vector<long> kappa;
    Exec exec;
};

std::vector<long> parse_kappa(const std::string& text, const QuantumChar& qc) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(qc.normalize(std::stol(item)));
    if (out.empty()) throw std::invalid_argument("empty multicharge");
    return out;
}

Setup configure(const Options& opt) {
    QuantumChar qc(opt.e);
    if (opt.jobs > 0) omp_set_num_threads((int)opt.jobs);
    return {qc, parse_kappa(opt.kappa_text, qc),
            opt.jobs == 1 ? Exec::serial : Exec::parallel};
}

void require_format(const std::string& f,
                    std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (f == a) return;
    throw std::invalid_argument("unsupported format: " + f);
}

std::string seq_str(const std::vector<long>& s) {
    std::string out;
    for (size_t k = 0; k < s.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(s[k]);
    }
    return out;
}

std::string kappa_str(const std::vector<long>& kappa) { return seq_str(kappa); }

// target block contents: --alpha picks one, --d takes every block of size d
std::vector<RootElement> target_alphas(const Options& opt, const Setup& s) {
    if (!opt.alpha_text.empty()) {
        RootElement a;
        for (const auto& [i, c] : parse_root(opt.alpha_text))
            add_to(a, s.qc.normalize(i), c);
        return {a};
    }
    if (opt.d < 0)
        throw std::invalid_argument("give --d or --alpha");
    std::map<RootElement, int> seen;
    for (auto& mu : enumerate_multipartitions(opt.d, (long)s.kappa.size()))
        seen[content(mu, s.kappa, s.qc)] = 1;
    std::vector<RootElement> out;
    for (const auto& [a, unused] : seen) out.push_back(a);
    return out;
}

int run_blocks(const Options& opt) {
    require_format(opt.format, {"text", "json"});
    Setup s = configure(opt);
    if (opt.d < 0) throw std::invalid_argument("blocks needs --d");
    std::map<RootElement, std::vector<Multipartition>> blocks;
    for (auto& mu : enumerate_multipartitions(opt.d, (long)s.kappa.size()))
        blocks[content(mu, s.kappa, s.qc)].push_back(mu);

    json jb = json::array();
    std::ostringstream text;
    text << "blocks e=" << opt.e << " kappa=" << kappa_str(s.kappa)
         << " d=" << opt.d << "\n";
    for (const auto& [alpha, members] : blocks) {
        std::vector<std::string> all, res;
        for (const auto& mu : members) {
            all.push_back(mu.str());
            if (is_restricted(mu, s.kappa, s.qc)) res.push_back(mu.str());
        }
        long def = defect(s.kappa, alpha, s.qc);
        text << "block " << root_str(alpha) << " defect=" << def << "\n";
        text << "  all:";
        for (const auto& m : all) text << " [" << m << "]";
        text << "\n  restricted:";
        for (const auto& m : res) text << " [" << m << "]";
        text << "\n";
        jb.push_back({{"alpha", root_str(alpha)},
                      {"defect", def},
                      {"all", all},
                      {"restricted", res}});
    }
    if (opt.format == "json") {
        json out{{"e", opt.e},
                 {"kappa", s.kappa},
                 {"d", opt.d},
                 {"blocks", jb}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << text.str();
    }
    return 0;
}

void print_characters(const std::string& label,
                      const std::vector<Multipartition>& shapes,
                      const std::vector<QCharacter>& chars,
                      const std::string& format) {
    if (format == "json") {
        json arr = json::array();
        for (size_t k = 0; k < shapes.size(); ++k) {
            json terms = json::array();
            for (const auto& [seq, c] : chars[k].terms())
                terms.push_back({seq_str(seq), c.str()});
            arr.push_back({{"shape", shapes[k].str()}, {"terms", terms}});
        }
        std::cout << json{{"characters", arr}}.dump(2) << "\n";
        return;
    }
    for (size_t k = 0; k < shapes.size(); ++k) {
        std::cout << label << "(" << shapes[k].str() << ")\n";
        for (const auto& [seq, c] : chars[k].terms())
            std::cout << "  (" << seq_str(seq) << "): " << c.str() << "\n";
    }
}

int run_specht_char(const Options& opt) {
    require_format(opt.format, {"text", "json"});
    Setup s = configure(opt);
    std::vector<Multipartition> shapes;
    for (const auto& alpha : target_alphas(opt, s))
        for (auto& mu : multipartitions_with_content(height(alpha), s.kappa,
                                                     s.qc, alpha))
            shapes.push_back(mu);
    print_characters("S", shapes,
                     specht_qcharacters(shapes, s.kappa, s.qc, s.exec),
                     opt.format);
    return 0;
}

std::string cache_root(const Options& opt) {
    if (const char* env = std::getenv("GRKAPPA_CACHE")) return env;
    return opt.cache_dir;
}

// single-method matrix with cache read-through; "all" computes every
// applicable construction and is recorded in *agreed
DecompositionMatrix block_matrix(const RootElement& alpha, const Options& opt,
                                 const Setup& s, bool* agreed) {
    const std::string cache = cache_root(opt);
    if (opt.method == "all") {
        DecompositionMatrix b =
            decomposition_matrix_bar(alpha, s.kappa, s.qc, s.exec);
        DecompositionMatrix c =
            decomposition_matrix_extremal(alpha, s.kappa, s.qc, s.exec);
        bool ok = b == c;
        if (s.kappa.size() == 1 && s.qc.e() >= 2)
            ok = ok &&
                 decomposition_matrix_llt(alpha, s.kappa, s.qc, s.exec) == b;
        if (agreed) *agreed = ok;
        if (!cache.empty()) cache_store(cache, s.qc.e(), s.kappa, b);
        return b;
    }
    if (agreed) *agreed = true;
    if (!cache.empty())
        if (auto hit = cache_load(cache, s.qc.e(), s.kappa, alpha)) return *hit;
    DecompositionMatrix dm;
    if (opt.method == "llt")
        dm = decomposition_matrix_llt(alpha, s.kappa, s.qc, s.exec);
    else if (opt.method == "bar")
        dm = decomposition_matrix_bar(alpha, s.kappa, s.qc, s.exec);
    else if (opt.method == "extremal")
        dm = decomposition_matrix_extremal(alpha, s.kappa, s.qc, s.exec);
    else
        throw std::invalid_argument("unknown method: " + opt.method);
    if (!cache.empty()) cache_store(cache, s.qc.e(), s.kappa, dm);
    return dm;
}

int run_decomp(const Options& opt) {
    require_format(opt.format, {"text", "json", "csv"});
    Setup s = configure(opt);
    bool all_agree = true;
    std::ostringstream text, csv;
    json jblocks = json::array();
    text << "decomp e=" << opt.e << " kappa=" << kappa_str(s.kappa)
         << " method=" << opt.method << "\n";
    for (const auto& alpha : target_alphas(opt, s)) {
        bool agreed = true;
        DecompositionMatrix dm = block_matrix(alpha, opt, s, &agreed);
        all_agree = all_agree && agreed;
        validate_decomposition_matrix(dm);

        text << "block " << root_str(alpha) << "\n  rows:";
        for (const auto& mu : dm.rows) text << " [" << mu.str() << "]";
        text << "\n  cols:";
        for (const auto& nu : dm.cols) text << " [" << nu.str() << "]";
        text << "\n";
        for (const auto& mu : dm.rows)
            for (const auto& nu : dm.cols) {
                LaurentPoly v = dm.entry(mu, nu);
                if (!v.is_zero())
                    text << "  d[" << mu.str() << "][" << nu.str()
                         << "] = " << v.str() << "\n";
            }
        text << "  at q=1:\n";
        for (const auto& mu : dm.rows) {
            text << "    [" << mu.str() << "] |";
            for (const auto& nu : dm.cols)
                text << " " << dm.entry(mu, nu).eval_at_one().get_str();
            text << "\n";
        }

        csv << "# block " << root_str(alpha) << "\n" << matrix_csv(dm);
        csv << "# block " << root_str(alpha) << " at q=1\n"
            << matrix_csv(dm, true);
        jblocks.push_back(json::parse(matrix_json(dm, opt.e, s.kappa)));
    }
    if (opt.method == "all")
        text << "methods agree: " << (all_agree ? "yes" : "no") << "\n";

    if (opt.format == "json") {
        json out{{"blocks", jblocks}};
        if (opt.method == "all") out["methods_agree"] = all_agree;
        std::cout << out.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << csv.str();
    } else {
        std::cout << text.str();
    }
    if (!all_agree) {
        std::cerr << "verification failure: decomposition methods disagree\n";
        return 2;
    }
    return 0;
}

int run_irr_char(const Options& opt) {
    require_format(opt.format, {"text", "json"});
    Setup s = configure(opt);
    std::vector<Multipartition> shapes;
    std::vector<QCharacter> chars;
    bool all_agree = true;
    for (const auto& alpha : target_alphas(opt, s)) {
        bool agreed = true;
        DecompositionMatrix dm = block_matrix(alpha, opt, s, &agreed);
        all_agree = all_agree && agreed;
        auto chD = irreducible_qcharacters(dm, s.kappa, s.qc, s.exec);
        for (const auto& nu : dm.cols) {
            shapes.push_back(nu);
            chars.push_back(chD.at(nu));
        }
    }
    print_characters("D", shapes, chars, opt.format);
    if (!all_agree) {
        std::cerr << "verification failure: decomposition methods disagree\n";
        return 2;
    }
    return 0;
}

int run_crystal(const Options& opt) {
    require_format(opt.format, {"dot", "json"});
    Setup s = configure(opt);
    if (opt.d < 0) throw std::invalid_argument("crystal needs --d");
    CrystalGraph g = crystal_graph(opt.d, s.kappa, s.qc);
    if (opt.format == "json") {
        json verts = json::array(), edges = json::array();
        for (const auto& v : g.vertices) verts.push_back(v.str());
        for (const auto& e : g.edges)
            edges.push_back({{"source", e.source.str()},
                             {"target", e.target.str()},
                             {"residue", e.residue}});
        std::cout << json{{"vertices", verts}, {"edges", edges}}.dump(2)
                  << "\n";
    } else {
        std::cout << crystal_dot(g);
    }
    return 0;
}

int run_restricted(const Options& opt) {
    require_format(opt.format, {"text", "json"});
    Setup s = configure(opt);
    if (opt.d < 0) throw std::invalid_argument("restricted needs --d");
    std::vector<Multipartition> rp = enumerate_restricted(opt.d, s.kappa, s.qc);
    if (opt.format == "json") {
        json arr = json::array();
        for (const auto& mu : rp) arr.push_back(mu.str());
        std::cout << json{{"restricted", arr}}.dump(2) << "\n";
    } else {
        for (const auto& mu : rp) std::cout << mu.str() << "\n";
    }
    return 0;
}

int run_mullineux(const Options& opt) {
    require_format(opt.format, {"text", "json"});
    Setup s = configure(opt);
    if (opt.d < 0) throw std::invalid_argument("mullineux needs --d");
    json arr = json::array();
    std::ostringstream text;
    for (const auto& mu : enumerate_restricted(opt.d, s.kappa, s.qc)) {
        Multipartition img = mullineux(mu, s.kappa, s.qc);
        text << mu.str() << " -> " << img.str() << "\n";
        arr.push_back({mu.str(), img.str()});
    }
    if (opt.format == "json")
        std::cout << json{{"mullineux", arr}}.dump(2) << "\n";
    else
        std::cout << text.str();
    return 0;
}

int run_graded_dim(const Options& opt) {
    require_format(opt.format, {"text", "json"});
    Setup s = configure(opt);
    json jblocks = json::array();
    std::ostringstream text;
    for (const auto& alpha : target_alphas(opt, s)) {
        auto table = graded_dimension_table(alpha, s.kappa, s.qc, s.exec);
        text << "block " << root_str(alpha)
             << " defect=" << defect(s.kappa, alpha, s.qc) << "\n";
        json entries = json::array();
        for (const auto& [key, v] : table) {
            text << "  [" << seq_str(key.first) << " ; " << seq_str(key.second)
                 << "] = " << v.str() << "\n";
            entries.push_back({seq_str(key.first), seq_str(key.second),
                               v.str()});
        }
        jblocks.push_back({{"alpha", root_str(alpha)}, {"entries", entries}});
    }
    if (opt.format == "json")
        std::cout << json{{"blocks", jblocks}}.dump(2) << "\n";
    else
        std::cout << text.str();
    return 0;
}

int run_fock_verify(const Options& opt) {
    require_format(opt.format, {"text", "json"});
    Setup s = configure(opt);
    if (opt.dmax < 0) throw std::invalid_argument("fock-verify needs --dmax");
    auto report = verify_uqg_relations(opt.dmax, s.kappa, s.qc, s.exec);
    if (opt.format == "json") {
        json arr = json::array();
        for (const auto& v : report) arr.push_back(v.str());
        std::cout << json{{"violations", arr}}.dump(2) << "\n";
    } else if (report.empty()) {
        std::cout << "no violations\n";
    } else {
        for (const auto& v : report) std::cout << v.str() << "\n";
    }
    return report.empty() ? 0 : 2;
}

int run_seminormal_check(const Options& opt) {
    require_format(opt.format, {"text", "json"});
    Setup s = configure(opt);
    if (opt.d < 0) throw std::invalid_argument("seminormal-check needs --d");
    bool clean = true;
    json arr = json::array();
    std::ostringstream text;
    text << "seminormal e=" << opt.e << " kappa=" << kappa_str(s.kappa)
         << " d=" << opt.d << "\n";
    for (auto& mu : enumerate_multipartitions(opt.d, (long)s.kappa.size())) {
        KLRRep rep = build_seminormal(mu, s.kappa, s.qc);
        auto report = verify_klr_relations(rep, s.kappa, s.qc, s.exec);
        json lines = json::array();
        text << "[" << mu.str() << "] dim=" << rep.dim();
        if (report.empty()) {
            text << " ok\n";
        } else {
            clean = false;
            text << "\n";
            for (const auto& v : report) {
                text << "  " << v.str() << "\n";
                lines.push_back(v.str());
            }
        }
        arr.push_back({{"shape", mu.str()},
                       {"dim", rep.dim()},
                       {"violations", lines}});
    }
    if (clean) text << "no violations\n";
    if (opt.format == "json")
        std::cout << json{{"reps", arr}}.dump(2) << "\n";
    else
        std::cout << text.str();
    return clean ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graded representation combinatorics of cyclotomic Hecke "
                 "algebras"};
    app.require_subcommand(1);
    Options opt;
    int rc = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--e", opt.e, "quantum characteristic (0 or >= 2)")
            ->required();
        sub->add_option("--kappa", opt.kappa_text,
                        "multicharge, comma-separated residues")
            ->required();
        sub->add_option("--format", opt.format, "output format");
        sub->add_option("--jobs", opt.jobs, "worker threads (1 = serial)");
        return sub;
    };

    auto* blocks = add_common(app.add_subcommand(
        "blocks", "list blocks of a given size with their members"));
    blocks->add_option("--d", opt.d, "total size")->required();
    blocks->callback([&] { rc = run_blocks(opt); });

    auto* specht = add_common(app.add_subcommand(
        "specht-char", "graded Specht characters of a size or block"));
    specht->add_option("--d", opt.d, "total size");
    specht->add_option("--alpha", opt.alpha_text, "block content, e.g. 0:2,1:1");
    specht->callback([&] { rc = run_specht_char(opt); });

    auto* irr = add_common(app.add_subcommand(
        "irr-char", "graded irreducible characters of a size or block"));
    irr->add_option("--d", opt.d, "total size");
    irr->add_option("--alpha", opt.alpha_text, "block content");
    irr->add_option("--method", opt.method, "llt, bar, extremal or all");
    irr->add_option("--cache-dir", opt.cache_dir, "matrix cache directory");
    irr->callback([&] { rc = run_irr_char(opt); });

    auto* decomp = add_common(app.add_subcommand(
        "decomp", "graded decomposition matrices of a size or block"));
    decomp->add_option("--d", opt.d, "total size");
    decomp->add_option("--alpha", opt.alpha_text, "block content");
    decomp->add_option("--method", opt.method, "llt, bar, extremal or all");
    decomp->add_option("--cache-dir", opt.cache_dir, "matrix cache directory");
    decomp->callback([&] { rc = run_decomp(opt); });

    auto* crystal = add_common(app.add_subcommand(
        "crystal", "crystal graph up to a given size (dot or json)"));
    crystal->add_option("--d", opt.d, "maximal size")->required();
    crystal->callback([&] {
        if (opt.format == "text") opt.format = "dot";
        rc = run_crystal(opt);
    });

    auto* restricted = add_common(app.add_subcommand(
        "restricted", "restricted multipartitions up to a given size"));
    restricted->add_option("--d", opt.d, "maximal size")->required();
    restricted->callback([&] { rc = run_restricted(opt); });

    auto* mull = add_common(app.add_subcommand(
        "mullineux", "Mullineux images of restricted partitions"));
    mull->add_option("--d", opt.d, "maximal size")->required();
    mull->callback([&] { rc = run_mullineux(opt); });

    auto* gdim = add_common(app.add_subcommand(
        "graded-dim", "graded dimensions qdim e(i) H e(j) by block"));
    gdim->add_option("--d", opt.d, "total size");
    gdim->add_option("--alpha", opt.alpha_text, "block content");
    gdim->callback([&] { rc = run_graded_dim(opt); });

    auto* fock = add_common(app.add_subcommand(
        "fock-verify", "check quantum group relations on a Fock truncation"));
    fock->add_option("--dmax", opt.dmax, "truncation size")->required();
    fock->callback([&] { rc = run_fock_verify(opt); });

    auto* semi = add_common(app.add_subcommand(
        "seminormal-check", "verify KLR relations on seminormal forms"));
    semi->add_option("--d", opt.d, "total size")->required();
    semi->callback([&] { rc = run_seminormal_check(opt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
