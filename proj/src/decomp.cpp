#include "grk/decomp.hpp"

#include "grk/crystal.hpp"

#include <json.hpp>

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace grk {

namespace {

bool level1_restricted(const Multipartition& mu, const std::vector<long>& kappa,
                       const QuantumChar& qc) {
    auto r = is_restricted_closed_form(mu, kappa, qc);
    if (!r) throw std::logic_error("no closed-form restriction test");
    return *r;
}

void require_level1(const Multipartition& lam, const std::vector<long>& kappa,
                    const QuantumChar& qc) {
    if (qc.e() < 2 || kappa.size() != 1 || lam.level() != 1)
        throw std::invalid_argument("needs level 1 and e >= 2");
    if (!level1_restricted(lam, kappa, qc))
        throw std::invalid_argument("partition is not restricted: " + lam.str());
}

// bottom removable node whose removal keeps the partition restricted
Node peel_node(const Multipartition& cur, const std::vector<long>& kappa,
               const QuantumChar& qc, std::vector<Node>* weakly_below) {
    std::vector<Node> rem = boundary_nodes(cur).removable;
    for (auto it = rem.rbegin(); it != rem.rend(); ++it)
        if (level1_restricted(cur.remove_node(*it), kappa, qc)) {
            if (weakly_below) weakly_below->assign(it.base() - 1, rem.end());
            return *it;
        }
    throw std::logic_error("no removable node keeps " + cur.str() +
                           " restricted");
}

bool char_bar_invariant(const QCharacter& ch) {
    for (const auto& [s, c] : ch.terms())
        if (!c.is_bar_invariant()) return false;
    return true;
}

bool char_nonneg(const QCharacter& ch) {
    for (const auto& [s, c] : ch.terms())
        if (c.has_negative_coeff()) return false;
    return true;
}

}  // namespace

std::vector<long> j_sequence(const Multipartition& lam,
                             const std::vector<long>& kappa,
                             const QuantumChar& qc) {
    require_level1(lam, kappa, qc);
    std::vector<long> j(lam.size());
    Multipartition cur = lam;
    for (long k = lam.size(); k >= 1; --k) {
        Node a = peel_node(cur, kappa, qc, nullptr);
        j[k - 1] = node_residue(a, kappa, qc);
        cur = cur.remove_node(a);
    }
    return j;
}

LaurentPoly r_lambda(const Multipartition& lam, const std::vector<long>& kappa,
                     const QuantumChar& qc) {
    require_level1(lam, kappa, qc);
    LaurentPoly r(1);
    Multipartition cur = lam;
    while (cur.size() > 0) {
        std::vector<Node> strip;
        peel_node(cur, kappa, qc, &strip);
        for (auto it = strip.rbegin(); it != strip.rend(); ++it)
            cur = cur.remove_node(*it);
        r *= quantum_factorial((long)strip.size());
    }
    return r;
}

LaurentPoly m_mult(const QCharacter& ch, const Multipartition& lam,
                   const std::vector<long>& kappa, const QuantumChar& qc) {
    std::vector<long> j = j_sequence(lam, kappa, qc);
    if (ch.is_zero()) return LaurentPoly();
    if (ch.length() != lam.size())
        throw std::invalid_argument("character length does not match the shape");
    return ch.coeff(j);
}

BasicTaskResult solve_basic_task(const LaurentPoly& t, const LaurentPoly& r) {
    if (r.is_zero() || !r.is_bar_invariant() || r.has_negative_coeff())
        throw std::invalid_argument("divisor must be bar-invariant, "
                                    "nonnegative and nonzero");
    const long R = r.max_exp();
    const LaurentPoly::Coeff b = r.coeff(R);
    BasicTaskResult out;
    LaurentPoly work = t;
    while (!work.is_zero()) {
        long M = work.max_exp();
        if (M <= 0) {
            // d*r would contribute a term of positive exponent, so d = 0
            out.m += work;
            break;
        }
        long N = -work.min_exp();
        if (N > M) throw std::invalid_argument("no valid splitting exists");
        if (N < M) {
            LaurentPoly::Coeff a = work.coeff(M);
            if (a <= 0 || a % b != 0 || M - R < 1)
                throw std::invalid_argument("no valid splitting exists");
            LaurentPoly term = LaurentPoly::monomial(a / b, M - R);
            out.d += term;
            work -= term * r;
        } else {
            LaurentPoly::Coeff a = work.coeff(-N);
            if (a <= 0) throw std::invalid_argument("no valid splitting exists");
            LaurentPoly pair = LaurentPoly::monomial(a, -N) +
                               LaurentPoly::monomial(a, N);
            out.m += pair;
            work -= pair;
        }
    }
    if ((!out.d.is_zero() && !out.d.in_q_nonneg()) ||
        !out.m.is_bar_invariant() || out.m.has_negative_coeff())
        throw std::invalid_argument("no valid splitting exists");
    return out;
}

LaurentPoly DecompositionMatrix::entry(const Multipartition& mu,
                                       const Multipartition& nu) const {
    auto it = entries.find({mu, nu});
    return it == entries.end() ? LaurentPoly() : it->second;
}

void validate_decomposition_matrix(const DecompositionMatrix& dm) {
    std::set<Multipartition> colset(dm.cols.begin(), dm.cols.end());
    for (const auto& [key, val] : dm.entries) {
        const auto& [mu, nu] = key;
        if (!colset.count(nu) || val.is_zero())
            throw std::logic_error("matrix entry outside the column set");
        if (!dominates(mu, nu))
            throw std::logic_error("nonzero entry above the diagonal: " +
                                   mu.str() + " / " + nu.str());
        if (mu == nu) {
            if (val != LaurentPoly(1))
                throw std::logic_error("diagonal entry differs from 1 at " +
                                       mu.str());
        } else if (!val.in_q_nonneg()) {
            throw std::logic_error("off-diagonal entry outside qZ_{>=0}[q] at " +
                                   mu.str() + " / " + nu.str());
        }
    }
    for (const auto& nu : dm.cols)
        if (dm.entry(nu, nu) != LaurentPoly(1))
            throw std::logic_error("missing diagonal entry at " + nu.str());
}

namespace {

RootElement normalized_root(const RootElement& alpha, const QuantumChar& qc) {
    RootElement out;
    for (const auto& [i, c] : alpha) {
        if (c < 0) throw std::invalid_argument("negative root coefficient");
        if (c > 0) add_to(out, qc.normalize(i), c);
    }
    return out;
}

DecompositionMatrix make_block(const RootElement& alpha,
                               const std::vector<long>& kappa,
                               const QuantumChar& qc) {
    DecompositionMatrix dm;
    dm.alpha = normalized_root(alpha, qc);
    dm.rows = multipartitions_with_content(height(dm.alpha), kappa, qc, dm.alpha);
    for (const auto& mu : dm.rows)
        if (is_restricted(mu, kappa, qc)) dm.cols.push_back(mu);
    return dm;
}

std::map<Multipartition, QCharacter> block_characters(
    const std::vector<Multipartition>& shapes, const std::vector<long>& kappa,
    const QuantumChar& qc, Exec exec) {
    std::vector<QCharacter> chs = specht_qcharacters(shapes, kappa, qc, exec);
    std::map<Multipartition, QCharacter> out;
    for (size_t k = 0; k < shapes.size(); ++k) out.emplace(shapes[k], chs[k]);
    return out;
}

}  // namespace

DecompositionMatrix decomposition_matrix_llt(const RootElement& alpha,
                                             const std::vector<long>& kappa,
                                             const QuantumChar& qc, Exec exec) {
    if (qc.e() < 2 || kappa.size() != 1)
        throw std::invalid_argument("row induction needs level 1 and e >= 2");
    DecompositionMatrix dm = make_block(alpha, kappa, qc);
    auto chS = block_characters(dm.rows, kappa, qc, exec);
    std::map<Multipartition, std::vector<long>> jseq;
    std::map<Multipartition, LaurentPoly> rlam;
    for (const auto& kap : dm.cols) {
        jseq.emplace(kap, j_sequence(kap, kappa, qc));
        rlam.emplace(kap, r_lambda(kap, kappa, qc));
    }

    // m_mult values of the irreducibles, keyed by (word shape, irreducible)
    std::map<std::pair<Multipartition, Multipartition>, LaurentPoly> mD;
    for (auto nu = dm.rows.rbegin(); nu != dm.rows.rend(); ++nu) {
        bool nu_restricted =
            std::find(dm.cols.begin(), dm.cols.end(), *nu) != dm.cols.end();
        for (const auto& kap : dm.cols) {  // lex-descending
            if (!dominates(*nu, kap)) continue;
            if (kap == *nu) {
                dm.entries[{*nu, *nu}] = LaurentPoly(1);
                mD[{*nu, *nu}] = rlam.at(*nu);
                continue;
            }
            LaurentPoly rhs = chS.at(*nu).coeff(jseq.at(kap));
            for (const auto& phi : dm.cols)
                if (phi != *nu && phi != kap && dominates(*nu, phi) &&
                    dominates(phi, kap)) {
                    LaurentPoly dnp = dm.entry(*nu, phi);
                    if (!dnp.is_zero()) rhs -= dnp * mD.at({kap, phi});
                }
            if (nu_restricted) {
                BasicTaskResult split = solve_basic_task(rhs, rlam.at(kap));
                if (!split.d.is_zero()) dm.entries[{*nu, kap}] = split.d;
                mD[{kap, *nu}] = split.m;
            } else {
                auto q = exact_div(rhs, rlam.at(kap));
                if (!q)
                    throw std::logic_error("multiplicity not divisible by the "
                                           "factorial product at " + nu->str());
                if (!q->is_zero()) dm.entries[{*nu, kap}] = *q;
            }
        }
    }
    validate_decomposition_matrix(dm);
    return dm;
}

namespace {

// Incremental Gaussian elimination over exact rationals.  Rows have n
// coefficient slots plus the right-hand side.
class RationalSolver {
public:
    explicit RationalSolver(long n) : n_(n) {}

    void add(std::vector<mpq_class> row) {
        for (;;) {
            long lead = -1;
            for (long k = 0; k < n_; ++k)
                if (row[k] != 0) {
                    lead = k;
                    break;
                }
            if (lead < 0) {
                if (row[n_] != 0)
                    throw std::logic_error("inconsistent linear system");
                return;
            }
            auto it = rows_.find(lead);
            if (it == rows_.end()) {
                mpq_class inv = row[lead];
                for (auto& x : row) x /= inv;
                rows_.emplace(lead, std::move(row));
                return;
            }
            mpq_class f = row[lead];
            for (long k = lead; k <= n_; ++k) row[k] -= f * it->second[k];
        }
    }

    std::vector<mpq_class> solve() const {
        if ((long)rows_.size() != n_)
            throw std::logic_error("underdetermined linear system");
        std::vector<mpq_class> x(n_, 0);
        for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
            mpq_class v = it->second[n_];
            for (long k = it->first + 1; k < n_; ++k)
                v -= it->second[k] * x[k];
            x[it->first] = v;
        }
        return x;
    }

private:
    long n_;
    std::map<long, std::vector<mpq_class>> rows_;
};

// the unique d_v in qZ[q] with target - sum_v d_v * (*lower[v]) bar-invariant;
// unknown degrees are bounded by the top q-exponent of target, which no
// cancellation can defeat since everything in sight is nonnegative
std::vector<LaurentPoly> bar_corrections(
    const QCharacter& target, const std::vector<const QCharacter*>& lower) {
    std::vector<LaurentPoly> out(lower.size());
    long K = 0;
    for (const auto& [s, c] : target.terms())
        if (!c.is_zero()) K = std::max(K, c.max_exp());
    if (lower.empty() || K < 1) return out;

    long n = (long)lower.size() * K;
    auto slot = [&](long v, long k) { return v * K + k - 1; };
    RationalSolver solver(n);
    std::set<QCharacter::Seq> seqs;
    for (const auto& [s, c] : target.terms()) seqs.insert(s);
    for (const QCharacter* ch : lower)
        for (const auto& [s, c] : ch->terms()) seqs.insert(s);
    for (const auto& s : seqs) {
        LaurentPoly p = target.coeff(s);
        LaurentPoly asym = p - bar(p);
        long amax = asym.is_zero() ? 0 : asym.max_exp();
        std::vector<LaurentPoly> qs(lower.size());
        for (size_t v = 0; v < lower.size(); ++v) {
            qs[v] = lower[v]->coeff(s);
            if (!qs[v].is_zero()) amax = std::max(amax, K + qs[v].max_exp());
        }
        for (long a = 1; a <= amax; ++a) {
            std::vector<mpq_class> row(n + 1, 0);
            bool any = false;
            for (size_t v = 0; v < lower.size(); ++v) {
                if (qs[v].is_zero()) continue;
                for (long k = 1; k <= K; ++k) {
                    mpz_class c = qs[v].coeff(a - k) - qs[v].coeff(a + k);
                    if (c != 0) {
                        row[slot(v, k)] = mpq_class(c);
                        any = true;
                    }
                }
            }
            row[n] = mpq_class(asym.coeff(a));
            if (any || row[n] != 0) solver.add(std::move(row));
        }
    }
    std::vector<mpq_class> x = solver.solve();
    for (size_t v = 0; v < lower.size(); ++v)
        for (long k = 1; k <= K; ++k) {
            const mpq_class& c = x[slot(v, k)];
            if (c == 0) continue;
            if (c.get_den() != 1 || c < 0)
                throw std::logic_error(
                    "correction coefficients must be nonnegative integers");
            out[v] += LaurentPoly::monomial(c.get_num(), k);
        }
    return out;
}

}  // namespace

DecompositionMatrix decomposition_matrix_bar(const RootElement& alpha,
                                             const std::vector<long>& kappa,
                                             const QuantumChar& qc, Exec exec) {
    DecompositionMatrix dm = make_block(alpha, kappa, qc);
    auto chS = block_characters(dm.rows, kappa, qc, exec);
    std::set<Multipartition> colset(dm.cols.begin(), dm.cols.end());
    std::map<Multipartition, QCharacter> chD;

    for (auto mu = dm.rows.rbegin(); mu != dm.rows.rend(); ++mu) {
        std::vector<Multipartition> lower;
        std::vector<const QCharacter*> lower_ch;
        for (const auto& nu : dm.cols)
            if (nu != *mu && dominates(*mu, nu)) {
                lower.push_back(nu);
                lower_ch.push_back(&chD.at(nu));
            }
        QCharacter rem = chS.at(*mu);
        std::vector<LaurentPoly> fit = bar_corrections(rem, lower_ch);
        for (size_t v = 0; v < lower.size(); ++v)
            if (!fit[v].is_zero()) {
                dm.entries[{*mu, lower[v]}] = fit[v];
                rem -= lower_ch[v]->scaled(fit[v]);
            }
        if (colset.count(*mu)) {
            if (!char_bar_invariant(rem) || !char_nonneg(rem))
                throw std::logic_error("remainder character is not a valid "
                                       "irreducible character at " + mu->str());
            dm.entries[{*mu, *mu}] = LaurentPoly(1);
            chD.emplace(*mu, std::move(rem));
        } else if (!rem.is_zero()) {
            throw std::logic_error("non-restricted Specht character did not "
                                   "decompose at " + mu->str());
        }
    }
    validate_decomposition_matrix(dm);
    return dm;
}

namespace {

LaurentPoly run_multiplicity(const QCharacter& ch, const ExtremalData& data) {
    LaurentPoly denom(1);
    for (const auto& run : data.runs) denom *= quantum_factorial(run.mult);
    auto mult = exact_div(ch.coeff(data.full_sequence()), denom);
    if (!mult)
        throw std::logic_error(
            "extremal coefficient is not divisible by the run factorials");
    return *mult;
}

// Depth-first search through the extremal-run choices of ch for a tuple whose
// crystal endpoint differs from sigma.
std::optional<ExtremalData> find_avoiding(const QCharacter& ch,
                                          const Multipartition& sigma,
                                          const std::vector<long>& kappa,
                                          const QuantumChar& qc) {
    std::vector<ExtremalRun> peel;  // innermost (last) run first
    std::optional<ExtremalData> found;
    std::function<bool(const QCharacter&)> dfs = [&](const QCharacter& cur) {
        if (cur.length() == 0) {
            ExtremalData data;
            data.runs.assign(peel.rbegin(), peel.rend());
            Multipartition m = Multipartition::empty((long)kappa.size());
            for (long i : data.full_sequence()) {
                auto next = f_tilde(m, i, kappa, qc);
                if (!next)
                    throw std::logic_error("extremal tuple leaves the crystal");
                m = *next;
            }
            data.mu = m;
            if (m == sigma) return false;
            found = std::move(data);
            return true;
        }
        std::set<long> lasts;
        for (const auto& [s, c] : cur.terms()) lasts.insert(s.back());
        for (long j : lasts) {
            peel.push_back({j, char_epsilon(cur, j)});
            bool hit = dfs(char_run_restrict(cur, j, peel.back().mult));
            peel.pop_back();
            if (hit) return true;
        }
        return false;
    };
    if (!ch.is_zero()) dfs(ch);
    return found;
}

}  // namespace

DecompositionMatrix decomposition_matrix_extremal(const RootElement& alpha,
                                                  const std::vector<long>& kappa,
                                                  const QuantumChar& qc,
                                                  Exec exec) {
    DecompositionMatrix dm = make_block(alpha, kappa, qc);
    auto chS = block_characters(dm.rows, kappa, qc, exec);
    std::set<Multipartition> colset(dm.cols.begin(), dm.cols.end());
    std::map<Multipartition, QCharacter> chD;

    for (auto sig = dm.cols.rbegin(); sig != dm.cols.rend(); ++sig) {
        QCharacter rem = chS.at(*sig);
        while (auto data = find_avoiding(rem, *sig, kappa, qc)) {
            LaurentPoly mult = run_multiplicity(rem, *data);
            auto it = chD.find(data->mu);
            if (it == chD.end())
                throw std::logic_error("constituent found out of order: " +
                                       data->mu.str());
            rem -= it->second.scaled(mult);
            if (!char_nonneg(rem))
                throw std::logic_error("residual character went negative at " +
                                       sig->str());
            if (!dm.entries.emplace(std::make_pair(*sig, data->mu), mult)
                     .second)
                throw std::logic_error("constituent peeled twice: " +
                                       data->mu.str());
        }
        if (!char_bar_invariant(rem)) {
            // A constituent can hide from run peeling entirely: every
            // extremal tuple of the residual ends at sig once the
            // constituent's epsilon data is dominated by sig's.  The leftover
            // is still pinned down as the unique correction by known lower
            // irreducible characters whose removal leaves the remainder
            // bar-invariant.
            std::vector<Multipartition> lower;
            std::vector<const QCharacter*> lower_ch;
            for (const auto& nu : dm.cols)
                if (nu != *sig && dominates(*sig, nu)) {
                    lower.push_back(nu);
                    lower_ch.push_back(&chD.at(nu));
                }
            std::vector<LaurentPoly> fit = bar_corrections(rem, lower_ch);
            for (size_t v = 0; v < lower.size(); ++v)
                if (!fit[v].is_zero()) {
                    rem -= lower_ch[v]->scaled(fit[v]);
                    dm.entries[{*sig, lower[v]}] += fit[v];
                }
        }
        auto self = extremal_multiplicity(rem, kappa, qc);
        if (self.first != *sig || self.second != LaurentPoly(1) ||
            !char_bar_invariant(rem) || !char_nonneg(rem))
            throw std::logic_error("residual is not the irreducible character "
                                   "of " + sig->str());
        dm.entries[{*sig, *sig}] = LaurentPoly(1);
        chD.emplace(*sig, std::move(rem));
    }

    for (auto mu = dm.rows.rbegin(); mu != dm.rows.rend(); ++mu) {
        if (colset.count(*mu)) continue;
        QCharacter rem = chS.at(*mu);
        while (!rem.is_zero()) {
            auto [nu, mult] = extremal_multiplicity(rem, kappa, qc);
            auto it = chD.find(nu);
            if (it == chD.end())
                throw std::logic_error("unknown constituent " + nu.str());
            rem -= it->second.scaled(mult);
            if (!char_nonneg(rem))
                throw std::logic_error("residual character went negative at " +
                                       mu->str());
            dm.entries[{*mu, nu}] = mult;
        }
    }
    validate_decomposition_matrix(dm);
    return dm;
}

std::map<Multipartition, QCharacter> irreducible_qcharacters(
    const DecompositionMatrix& dm, const std::vector<long>& kappa,
    const QuantumChar& qc, Exec exec) {
    auto chS = block_characters(dm.cols, kappa, qc, exec);
    std::map<Multipartition, QCharacter> chD;
    for (auto mu = dm.cols.rbegin(); mu != dm.cols.rend(); ++mu) {
        QCharacter ch = chS.at(*mu);
        for (const auto& nu : dm.cols) {
            if (nu == *mu) continue;
            LaurentPoly c = dm.entry(*mu, nu);
            if (!c.is_zero()) ch -= chD.at(nu).scaled(c);
        }
        if (!char_bar_invariant(ch) || !char_nonneg(ch))
            throw std::logic_error("irreducible character of " + mu->str() +
                                   " is not bar-invariant and nonnegative");
        chD.emplace(*mu, std::move(ch));
    }
    return chD;
}

namespace {

constexpr long kMatrixJsonVersion = 1;

}  // namespace

std::string matrix_json(const DecompositionMatrix& dm, long e,
                        const std::vector<long>& kappa) {
    nlohmann::json j;
    j["version"] = kMatrixJsonVersion;
    j["e"] = e;
    j["kappa"] = kappa;
    nlohmann::json a = nlohmann::json::object();
    for (const auto& [i, c] : dm.alpha) a[std::to_string(i)] = c;
    j["alpha"] = a;
    j["rows"] = nlohmann::json::array();
    for (const auto& mu : dm.rows) j["rows"].push_back(mu.str());
    j["cols"] = nlohmann::json::array();
    for (const auto& nu : dm.cols) j["cols"].push_back(nu.str());
    j["entries"] = nlohmann::json::array();
    for (const auto& [key, val] : dm.entries)
        j["entries"].push_back({key.first.str(), key.second.str(), val.str()});
    return j.dump(2);
}

DecompositionMatrix matrix_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(ex.what());
    }
    try {
        if (j.at("version").get<long>() != kMatrixJsonVersion)
            throw std::invalid_argument("unsupported matrix version");
        DecompositionMatrix dm;
        for (const auto& [i, c] : j.at("alpha").items())
            dm.alpha[std::stol(i)] = c.get<long>();
        for (const auto& s : j.at("rows"))
            dm.rows.push_back(Multipartition::parse(s.get<std::string>()));
        for (const auto& s : j.at("cols"))
            dm.cols.push_back(Multipartition::parse(s.get<std::string>()));
        for (const auto& ent : j.at("entries"))
            dm.entries[{Multipartition::parse(ent.at(0).get<std::string>()),
                        Multipartition::parse(ent.at(1).get<std::string>())}] =
                LaurentPoly::parse(ent.at(2).get<std::string>());
        return dm;
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(ex.what());
    }
}

std::string matrix_csv(const DecompositionMatrix& dm, bool at_one) {
    std::ostringstream out;
    auto quoted = [](const std::string& s) { return "\"" + s + "\""; };
    out << "shape";
    for (const auto& nu : dm.cols) out << "," << quoted(nu.str());
    out << "\n";
    for (const auto& mu : dm.rows) {
        out << quoted(mu.str());
        for (const auto& nu : dm.cols) {
            LaurentPoly v = dm.entry(mu, nu);
            out << ",";
            if (at_one)
                out << v.eval_at_one().get_str();
            else
                out << quoted(v.str());
        }
        out << "\n";
    }
    return out.str();
}

namespace {

std::string kappa_key(const std::vector<long>& kappa) {
    std::ostringstream out;
    for (size_t k = 0; k < kappa.size(); ++k) {
        if (k) out << "_";
        out << kappa[k];
    }
    return out.str();
}

std::string alpha_key(const RootElement& alpha) {
    if (alpha.empty()) return "empty";
    std::ostringstream out;
    bool first = true;
    for (const auto& [i, c] : alpha) {
        if (!first) out << "_";
        first = false;
        out << "r" << i << "c" << c;
    }
    return out.str();
}

}  // namespace

std::string cache_path(const std::string& dir, long e,
                       const std::vector<long>& kappa,
                       const RootElement& alpha) {
    std::filesystem::path p(dir);
    p /= std::to_string(e);
    p /= kappa_key(kappa);
    p /= alpha_key(alpha) + ".json";
    return p.string();
}

std::optional<DecompositionMatrix> cache_load(const std::string& dir, long e,
                                              const std::vector<long>& kappa,
                                              const RootElement& alpha) {
    std::ifstream in(cache_path(dir, e, kappa, alpha));
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return matrix_from_json(buf.str());
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

void cache_store(const std::string& dir, long e, const std::vector<long>& kappa,
                 const DecompositionMatrix& dm) {
    std::filesystem::path target(cache_path(dir, e, kappa, dm.alpha));
    std::filesystem::create_directories(target.parent_path());
    std::filesystem::path tmp = target;
    tmp += ".tmp" + std::to_string(::getpid());
    {
        std::ofstream out(tmp);
        out << matrix_json(dm, e, kappa);
    }
    std::filesystem::rename(tmp, target);
}

} // namespace grk
