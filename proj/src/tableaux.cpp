#include "grk/tableaux.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace grk {

Tableau::Tableau(std::vector<std::vector<std::vector<long>>> rows)
    : rows_(std::move(rows)) {
    if (rows_.empty()) throw std::invalid_argument("level must be >= 1");
    long d = 0;
    for (const auto& comp : rows_)
        for (const auto& row : comp) d += (long)row.size();
    node_by_entry_.assign(d, Node{});
    std::vector<bool> seen(d, false);
    for (long m = 1; m <= (long)rows_.size(); ++m) {
        const auto& comp = rows_[m - 1];
        for (long r = 1; r <= (long)comp.size(); ++r) {
            if (comp[r - 1].empty() || (r > 1 && comp[r - 1].size() > comp[r - 2].size()))
                throw std::invalid_argument("tableau shape is not a multipartition");
            for (long c = 1; c <= (long)comp[r - 1].size(); ++c) {
                long k = comp[r - 1][c - 1];
                if (k < 1 || k > d || seen[k - 1])
                    throw std::invalid_argument("entries must be a bijection with 1..d");
                seen[k - 1] = true;
                node_by_entry_[k - 1] = Node{r, c, m};
            }
        }
    }
}

Multipartition Tableau::shape() const {
    std::vector<std::vector<long>> comps;
    for (const auto& comp : rows_) {
        std::vector<long> parts;
        for (const auto& row : comp) parts.push_back((long)row.size());
        comps.push_back(std::move(parts));
    }
    return Multipartition(std::move(comps));
}

long Tableau::entry(const Node& a) const {
    if (a.comp < 1 || a.comp > (long)rows_.size())
        throw std::out_of_range("component index");
    const auto& comp = rows_[a.comp - 1];
    if (a.row < 1 || a.row > (long)comp.size() || a.col < 1 ||
        a.col > (long)comp[a.row - 1].size())
        throw std::out_of_range("node outside tableau: " + node_str(a));
    return comp[a.row - 1][a.col - 1];
}

Node Tableau::node_of(long k) const {
    if (k < 1 || k > size()) throw std::out_of_range("entry out of range");
    return node_by_entry_[k - 1];
}

bool Tableau::is_standard() const {
    for (const auto& comp : rows_)
        for (size_t r = 0; r < comp.size(); ++r)
            for (size_t c = 0; c < comp[r].size(); ++c) {
                if (c + 1 < comp[r].size() && comp[r][c] >= comp[r][c + 1])
                    return false;
                if (r + 1 < comp.size() && c < comp[r + 1].size() &&
                    comp[r][c] >= comp[r + 1][c])
                    return false;
            }
    return true;
}

std::string Tableau::str() const {
    std::ostringstream out;
    for (size_t m = 0; m < rows_.size(); ++m) {
        if (m) out << "|";
        if (rows_[m].empty()) {
            out << "0";
            continue;
        }
        for (size_t r = 0; r < rows_[m].size(); ++r) {
            if (r) out << "/";
            for (size_t c = 0; c < rows_[m][r].size(); ++c) {
                if (c) out << ",";
                out << rows_[m][r][c];
            }
        }
    }
    return out.str();
}

namespace {

void grow_tableaux(const Multipartition& target, Multipartition& cur,
                   std::vector<std::vector<std::vector<long>>>& fill, long next,
                   std::vector<Tableau>& out) {
    if (next > target.size()) {
        out.emplace_back(fill);
        return;
    }
    for (const Node& b : boundary_nodes(cur).addable) {
        if (b.col > target.part(b.comp, b.row)) continue;
        auto& comp = fill[b.comp - 1];
        if (b.row > (long)comp.size()) comp.emplace_back();
        comp[b.row - 1].push_back(next);
        cur = cur.add_node(b);
        grow_tableaux(target, cur, fill, next + 1, out);
        cur = cur.remove_node(b);
        comp[b.row - 1].pop_back();
        if (comp.back().empty()) comp.pop_back();
    }
}

}  // namespace

std::vector<Tableau> standard_tableaux(const Multipartition& mu) {
    std::vector<Tableau> out;
    Multipartition cur = Multipartition::empty(mu.level());
    std::vector<std::vector<std::vector<long>>> fill(mu.level());
    grow_tableaux(mu, cur, fill, 1, out);
    return out;
}

Tableau leading_tableau(const Multipartition& mu) {
    std::vector<std::vector<std::vector<long>>> fill(mu.level());
    long next = 1;
    for (long m = 1; m <= mu.level(); ++m)
        for (long r = 1; r <= mu.rows(m); ++r) {
            std::vector<long> row(mu.part(m, r));
            for (long& x : row) x = next++;
            fill[m - 1].push_back(std::move(row));
        }
    return Tableau(std::move(fill));
}

std::vector<long> residue_sequence(const Tableau& t, const std::vector<long>& kappa,
                                   const QuantumChar& qc) {
    std::vector<long> seq(t.size());
    for (long k = 1; k <= t.size(); ++k)
        seq[k - 1] = node_residue(t.node_of(k), kappa, qc);
    return seq;
}

RootElement sequence_content(const std::vector<long>& seq, const QuantumChar& qc) {
    RootElement alpha;
    for (long i : seq) add_to(alpha, qc.normalize(i));
    return alpha;
}

std::vector<long> tableau_permutation(const Tableau& t) {
    Tableau lead = leading_tableau(t.shape());
    std::vector<long> w(t.size());
    for (long k = 1; k <= t.size(); ++k) w[lead.entry(t.node_of(k)) - 1] = k;
    return w;
}

std::string perm_cycles_str(const std::vector<long>& w) {
    std::ostringstream out;
    std::vector<bool> done(w.size(), false);
    for (size_t s = 0; s < w.size(); ++s) {
        if (done[s] || w[s] == (long)s + 1) continue;
        out << "(";
        long k = (long)s + 1;
        bool first = true;
        while (!done[k - 1]) {
            done[k - 1] = true;
            if (!first) out << " ";
            out << k;
            first = false;
            k = w[k - 1];
        }
        out << ")";
    }
    std::string s = out.str();
    return s.empty() ? "()" : s;
}

long tableau_degree(const Tableau& t, const std::vector<long>& kappa,
                    const QuantumChar& qc) {
    if (!t.is_standard()) throw std::invalid_argument("tableau is not standard");
    Multipartition shape = t.shape();
    long deg = 0;
    for (long k = t.size(); k >= 1; --k) {
        Node a = t.node_of(k);
        deg += d_below(shape, a, kappa, qc);
        shape = shape.remove_node(a);
    }
    return deg;
}

long QCharacter::length() const {
    if (terms_.empty()) throw std::logic_error("zero character has no length");
    return (long)terms_.begin()->first.size();
}

LaurentPoly QCharacter::coeff(const Seq& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? LaurentPoly() : it->second;
}

void QCharacter::add(const Seq& s, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(s);
    if (it == terms_.end()) {
        terms_.emplace(s, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QCharacter& QCharacter::operator+=(const QCharacter& o) {
    for (const auto& [s, c] : o.terms_) add(s, c);
    return *this;
}

QCharacter& QCharacter::operator-=(const QCharacter& o) {
    for (const auto& [s, c] : o.terms_) add(s, -c);
    return *this;
}

QCharacter QCharacter::scaled(const LaurentPoly& c) const {
    QCharacter r;
    if (c.is_zero()) return r;
    for (const auto& [s, k] : terms_) r.terms_.emplace(s, k * c);
    return r;
}

LaurentPoly QCharacter::qdim() const {
    LaurentPoly d;
    for (const auto& [s, c] : terms_) d += c;
    return d;
}

QCharacter specht_qcharacter(const Multipartition& mu,
                             const std::vector<long>& kappa,
                             const QuantumChar& qc) {
    QCharacter ch;
    for (const Tableau& t : standard_tableaux(mu))
        ch.add(residue_sequence(t, kappa, qc),
               LaurentPoly::q(tableau_degree(t, kappa, qc)));
    return ch;
}

std::vector<QCharacter> specht_qcharacters(const std::vector<Multipartition>& mus,
                                           const std::vector<long>& kappa,
                                           const QuantumChar& qc, Exec exec) {
    std::vector<QCharacter> out(mus.size());
    if (exec == Exec::serial) {
        for (size_t k = 0; k < mus.size(); ++k)
            out[k] = specht_qcharacter(mus[k], kappa, qc);
        return out;
    }
#pragma omp parallel for schedule(dynamic)
    for (size_t k = 0; k < mus.size(); ++k)
        out[k] = specht_qcharacter(mus[k], kappa, qc);
    return out;
}

QCharacter restrict_character(const QCharacter& ch) {
    QCharacter r;
    for (const auto& [s, c] : ch.terms()) {
        if (s.empty())
            throw std::invalid_argument("cannot restrict a length-0 character");
        QCharacter::Seq head(s.begin(), s.end() - 1);
        r.add(head, c);
    }
    return r;
}

LaurentPoly block_graded_dimension(const RootElement& alpha,
                                   const std::vector<long>& kappa,
                                   const QuantumChar& qc,
                                   const std::vector<long>& i,
                                   const std::vector<long>& j) {
    if (sequence_content(i, qc) != alpha || sequence_content(j, qc) != alpha)
        throw std::invalid_argument("residue sequences must have content alpha");
    LaurentPoly dim;
    for (const auto& mu :
         multipartitions_with_content(height(alpha), kappa, qc, alpha)) {
        QCharacter ch = specht_qcharacter(mu, kappa, qc);
        dim += ch.coeff(i) * ch.coeff(j);
    }
    return dim;
}

std::map<std::pair<QCharacter::Seq, QCharacter::Seq>, LaurentPoly>
graded_dimension_table(const RootElement& alpha, const std::vector<long>& kappa,
                       const QuantumChar& qc, Exec exec) {
    auto mus = multipartitions_with_content(height(alpha), kappa, qc, alpha);
    auto chars = specht_qcharacters(mus, kappa, qc, exec);
    std::map<std::pair<QCharacter::Seq, QCharacter::Seq>, LaurentPoly> table;
    if (exec == Exec::serial) {
        for (const auto& ch : chars)
            for (const auto& [i, ci] : ch.terms())
                for (const auto& [j, cj] : ch.terms()) {
                    auto& entry = table[{i, j}];
                    entry += ci * cj;
                    if (entry.is_zero()) table.erase({i, j});
                }
        return table;
    }
#pragma omp parallel
    {
        std::map<std::pair<QCharacter::Seq, QCharacter::Seq>, LaurentPoly> local;
#pragma omp for schedule(dynamic) nowait
        for (size_t k = 0; k < chars.size(); ++k)
            for (const auto& [i, ci] : chars[k].terms())
                for (const auto& [j, cj] : chars[k].terms()) local[{i, j}] += ci * cj;
#pragma omp critical
        for (auto& [key, val] : local) {
            auto& entry = table[key];
            entry += val;
            if (entry.is_zero()) table.erase(key);
        }
    }
    return table;
}

} // namespace grk
