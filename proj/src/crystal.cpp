#include "grk/crystal.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace grk {

long ReducedSignature::eps() const {
    long n = 0;
    for (const auto& it : items) n += it.sign == -1;
    return n;
}

long ReducedSignature::phi() const {
    long n = 0;
    for (const auto& it : items) n += it.sign == +1;
    return n;
}

std::optional<Node> ReducedSignature::good() const {
    for (const auto& it : items)
        if (it.sign == -1) return it.node;
    return std::nullopt;
}

std::optional<Node> ReducedSignature::cogood() const {
    for (auto it = items.rbegin(); it != items.rend(); ++it)
        if (it->sign == +1) return it->node;
    return std::nullopt;
}

ReducedSignature reduced_signature(const Multipartition& mu, long i,
                                   const std::vector<long>& kappa,
                                   const QuantumChar& qc) {
    i = qc.normalize(i);
    BoundaryNodes bn = boundary_nodes(mu);
    ReducedSignature sig;
    for (const Node& b : bn.addable)
        if (node_residue(b, kappa, qc) == i) sig.items.push_back({b, +1});
    for (const Node& a : bn.removable)
        if (node_residue(a, kappa, qc) == i) sig.items.push_back({a, -1});
    std::sort(sig.items.begin(), sig.items.end(),
              [](const SignatureItem& a, const SignatureItem& b) {
                  return node_above(a.node, b.node);
              });
    // cancel each '+' against the nearest surviving '-' above it
    std::vector<size_t> open_minus;
    for (size_t k = 0; k < sig.items.size(); ++k) {
        if (sig.items[k].sign == -1) {
            open_minus.push_back(k);
        } else if (!open_minus.empty()) {
            sig.items[open_minus.back()].sign = 0;
            sig.items[k].sign = 0;
            open_minus.pop_back();
        }
    }
    return sig;
}

long epsilon(const Multipartition& mu, long i, const std::vector<long>& kappa,
             const QuantumChar& qc) {
    return reduced_signature(mu, i, kappa, qc).eps();
}

long phi(const Multipartition& mu, long i, const std::vector<long>& kappa,
         const QuantumChar& qc) {
    return reduced_signature(mu, i, kappa, qc).phi();
}

std::optional<Multipartition> e_tilde(const Multipartition& mu, long i,
                                      const std::vector<long>& kappa,
                                      const QuantumChar& qc) {
    auto a = reduced_signature(mu, i, kappa, qc).good();
    if (!a) return std::nullopt;
    return mu.remove_node(*a);
}

std::optional<Multipartition> f_tilde(const Multipartition& mu, long i,
                                      const std::vector<long>& kappa,
                                      const QuantumChar& qc) {
    auto b = reduced_signature(mu, i, kappa, qc).cogood();
    if (!b) return std::nullopt;
    return mu.add_node(*b);
}

std::vector<Multipartition> enumerate_restricted(long d,
                                                 const std::vector<long>& kappa,
                                                 const QuantumChar& qc) {
    if (d < 0) throw std::invalid_argument("need d >= 0");
    std::vector<Multipartition> out{Multipartition::empty((long)kappa.size())};
    std::vector<Multipartition> layer = out;
    for (long size = 1; size <= d; ++size) {
        std::set<Multipartition> next;
        for (const auto& mu : layer) {
            std::set<long> residues;
            for (const Node& b : boundary_nodes(mu).addable)
                residues.insert(node_residue(b, kappa, qc));
            for (long i : residues)
                if (auto nu = f_tilde(mu, i, kappa, qc)) next.insert(*nu);
        }
        layer.assign(next.begin(), next.end());
        std::sort(layer.begin(), layer.end(),
                  [](const Multipartition& a, const Multipartition& b) {
                      return lex_less(b, a);
                  });
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

bool is_restricted(const Multipartition& mu, const std::vector<long>& kappa,
                   const QuantumChar& qc) {
    if (auto closed = is_restricted_closed_form(mu, kappa, qc)) return *closed;
    auto all = enumerate_restricted(mu.size(), kappa, qc);
    return std::find(all.begin(), all.end(), mu) != all.end();
}

CrystalGraph crystal_graph(long d, const std::vector<long>& kappa,
                           const QuantumChar& qc) {
    CrystalGraph g;
    g.vertices = enumerate_restricted(d, kappa, qc);
    for (const auto& mu : g.vertices) {
        if (mu.size() == d) break;
        std::set<long> residues;
        for (const Node& b : boundary_nodes(mu).addable)
            residues.insert(node_residue(b, kappa, qc));
        for (long i : residues)
            if (auto nu = f_tilde(mu, i, kappa, qc))
                g.edges.push_back({mu, *nu, i});
    }
    return g;
}

std::string crystal_dot(const CrystalGraph& g) {
    std::ostringstream out;
    out << "digraph crystal {\n  rankdir=TB;\n";
    for (const auto& v : g.vertices)
        out << "  \"" << v.str() << "\";\n";
    for (const auto& e : g.edges)
        out << "  \"" << e.source.str() << "\" -> \"" << e.target.str()
            << "\" [label=\"i=" << e.residue << "\"];\n";
    out << "}\n";
    return out.str();
}

Multipartition mullineux(const Multipartition& mu, const std::vector<long>& kappa,
                         const QuantumChar& qc) {
    if (mu.level() != 1 || kappa.size() != 1)
        throw std::invalid_argument("defined for level 1 only");
    if (!is_restricted(mu, kappa, qc))
        throw std::invalid_argument("partition is not restricted: " + mu.str());
    std::vector<long> chain;  // chain[s] is the s-th peeled residue
    Multipartition cur = mu;
    while (cur.size() > 0) {
        std::set<long> residues;
        for (const Node& a : boundary_nodes(cur).removable)
            residues.insert(node_residue(a, kappa, qc));
        bool peeled = false;
        for (long i : residues) {
            if (auto prev = e_tilde(cur, i, kappa, qc)) {
                chain.push_back(i);
                cur = *prev;
                peeled = true;
                break;
            }
        }
        if (!peeled)
            throw std::logic_error("restricted partition with no good node");
    }
    std::vector<long> neg_kappa{-kappa[0]};
    Multipartition nu = Multipartition::empty(1);
    for (auto s = chain.rbegin(); s != chain.rend(); ++s) {
        auto next = f_tilde(nu, -*s, neg_kappa, qc);
        if (!next) throw std::logic_error("negated chain left the crystal");
        nu = *next;
    }
    return nu;
}

std::vector<long> ExtremalData::full_sequence() const {
    std::vector<long> seq;
    for (const auto& run : runs)
        seq.insert(seq.end(), run.mult, run.residue);
    return seq;
}

long char_epsilon(const QCharacter& ch, long j) {
    long best = 0;
    for (const auto& [seq, c] : ch.terms()) {
        long run = 0;
        for (auto it = seq.rbegin(); it != seq.rend() && *it == j; ++it) ++run;
        best = std::max(best, run);
    }
    return best;
}

QCharacter char_run_restrict(const QCharacter& ch, long j, long m) {
    QCharacter out;
    for (const auto& [seq, c] : ch.terms()) {
        if ((long)seq.size() < m) continue;
        bool tail = true;
        for (long k = 0; k < m; ++k)
            if (seq[seq.size() - 1 - k] != j) {
                tail = false;
                break;
            }
        if (!tail) continue;
        out.add(QCharacter::Seq(seq.begin(), seq.end() - m), c);
    }
    return out;
}

ExtremalData extremal_sequence(const QCharacter& ch,
                               const std::vector<long>& kappa,
                               const QuantumChar& qc) {
    if (ch.is_zero())
        throw std::invalid_argument("extremal sequence of the zero character");
    ExtremalData data;
    QCharacter work = ch;
    while (work.length() > 0) {
        std::set<long> last;
        for (const auto& [seq, c] : work.terms())
            last.insert(seq.back());
        long pick = 0, mult = 0;
        for (long j : last) {
            long m = char_epsilon(work, j);
            if (m > 0) {
                pick = j;
                mult = m;
                break;  // residues scanned in increasing order
            }
        }
        if (mult == 0)
            throw std::logic_error("nonempty sequences without trailing runs");
        data.runs.insert(data.runs.begin(), {pick, mult});
        work = char_run_restrict(work, pick, mult);
        if (work.is_zero())
            throw std::logic_error("run restriction emptied the character");
    }
    Multipartition mu = Multipartition::empty((long)kappa.size());
    for (long i : data.full_sequence()) {
        auto next = f_tilde(mu, i, kappa, qc);
        if (!next)
            throw std::invalid_argument(
                "extremal tuple leaves the crystal; character is not a "
                "nonnegative combination of irreducibles");
        mu = *next;
    }
    data.mu = mu;
    return data;
}

std::pair<Multipartition, LaurentPoly> extremal_multiplicity(
    const QCharacter& ch, const std::vector<long>& kappa,
    const QuantumChar& qc) {
    ExtremalData data = extremal_sequence(ch, kappa, qc);
    LaurentPoly denom(1);
    for (const auto& run : data.runs) denom *= quantum_factorial(run.mult);
    auto mult = exact_div(ch.coeff(data.full_sequence()), denom);
    if (!mult)
        throw std::invalid_argument(
            "extremal coefficient is not divisible by the run factorials");
    return {data.mu, *mult};
}

} // namespace grk
