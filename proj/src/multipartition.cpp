#include "grk/multipartition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace grk {

bool node_above(const Node& a, const Node& b) {
    if (a.comp != b.comp) return a.comp < b.comp;
    return a.row < b.row;
}

std::string node_str(const Node& a) {
    std::ostringstream out;
    out << "(" << a.row << "," << a.col << "," << a.comp << ")";
    return out.str();
}

Multipartition::Multipartition(std::vector<std::vector<long>> comps)
    : comps_(std::move(comps)) {
    if (comps_.empty()) throw std::invalid_argument("level must be >= 1");
    for (auto& c : comps_) {
        while (!c.empty() && c.back() == 0) c.pop_back();
        for (size_t r = 0; r < c.size(); ++r) {
            if (c[r] <= 0 || (r > 0 && c[r] > c[r - 1]))
                throw std::invalid_argument("component is not a partition");
        }
    }
}

Multipartition Multipartition::empty(long level) {
    if (level < 1) throw std::invalid_argument("level must be >= 1");
    Multipartition mu;
    mu.comps_.assign(level, {});
    return mu;
}

long Multipartition::size() const {
    long s = 0;
    for (const auto& c : comps_)
        for (long p : c) s += p;
    return s;
}

long Multipartition::part(long m, long row) const {
    if (m < 1 || m > level()) throw std::out_of_range("component index");
    const auto& c = comps_[m - 1];
    if (row < 1) throw std::out_of_range("row index");
    return row <= (long)c.size() ? c[row - 1] : 0;
}

std::vector<Node> Multipartition::nodes() const {
    std::vector<Node> out;
    for (long m = 1; m <= level(); ++m)
        for (long r = 1; r <= rows(m); ++r)
            for (long c = 1; c <= part(m, r); ++c) out.push_back({r, c, m});
    return out;
}

Multipartition Multipartition::remove_node(const Node& a) const {
    if (a.comp < 1 || a.comp > level()) throw std::out_of_range("component index");
    if (part(a.comp, a.row) != a.col || part(a.comp, a.row + 1) >= a.col)
        throw std::invalid_argument("node is not removable: " + node_str(a));
    Multipartition mu = *this;
    auto& c = mu.comps_[a.comp - 1];
    if (--c[a.row - 1] == 0) c.pop_back();
    return mu;
}

Multipartition Multipartition::add_node(const Node& b) const {
    if (b.comp < 1 || b.comp > level()) throw std::out_of_range("component index");
    bool ok = b.row >= 1 && part(b.comp, b.row) + 1 == b.col &&
              (b.row == 1 || part(b.comp, b.row - 1) >= b.col);
    if (!ok) throw std::invalid_argument("node is not addable: " + node_str(b));
    Multipartition mu = *this;
    auto& c = mu.comps_[b.comp - 1];
    if (b.row > (long)c.size()) c.push_back(1);
    else ++c[b.row - 1];
    return mu;
}

bool Multipartition::operator<(const Multipartition& o) const {
    if (level() != o.level()) return level() < o.level();
    return lex_less(*this, o);
}

std::string Multipartition::str() const {
    std::ostringstream out;
    for (long m = 1; m <= level(); ++m) {
        if (m > 1) out << "|";
        if (rows(m) == 0) {
            out << "0";
            continue;
        }
        for (long r = 1; r <= rows(m); ++r) {
            if (r > 1) out << ",";
            out << part(m, r);
        }
    }
    return out.str();
}

Multipartition Multipartition::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty multipartition text");
    std::vector<std::vector<long>> comps;
    std::istringstream in(s);
    std::string comp_text;
    while (std::getline(in, comp_text, '|')) {
        std::vector<long> parts;
        if (comp_text != "0" && !comp_text.empty()) {
            std::istringstream cin(comp_text);
            std::string p;
            while (std::getline(cin, p, ',')) parts.push_back(std::stol(p));
        }
        comps.push_back(std::move(parts));
    }
    if (!s.empty() && s.back() == '|') comps.push_back({});
    return Multipartition(std::move(comps));
}

long node_residue(const Node& a, const std::vector<long>& kappa,
                  const QuantumChar& qc) {
    if (a.comp < 1 || a.comp > (long)kappa.size())
        throw std::out_of_range("node component exceeds level of kappa");
    return qc.normalize(kappa[a.comp - 1] + (a.col - a.row));
}

RootElement content(const Multipartition& mu, const std::vector<long>& kappa,
                    const QuantumChar& qc) {
    RootElement alpha;
    for (const Node& a : mu.nodes()) add_to(alpha, node_residue(a, kappa, qc));
    return alpha;
}

BoundaryNodes boundary_nodes(const Multipartition& mu) {
    BoundaryNodes bn;
    for (long m = 1; m <= mu.level(); ++m) {
        for (long r = 1; r <= mu.rows(m) + 1; ++r) {
            long len = mu.part(m, r);
            if (len > 0 && len > mu.part(m, r + 1))
                bn.removable.push_back({r, len, m});
            if (r == 1 || mu.part(m, r - 1) > len)
                bn.addable.push_back({r, len + 1, m});
        }
    }
    return bn;
}

bool dominates(const Multipartition& mu, const Multipartition& nu) {
    if (mu.level() != nu.level() || mu.size() != nu.size())
        throw std::invalid_argument("dominance needs equal level and size");
    long pref_mu = 0, pref_nu = 0;
    for (long m = 1; m <= mu.level(); ++m) {
        long sum_mu = 0, sum_nu = 0;
        long rows = std::max(mu.rows(m), nu.rows(m));
        for (long r = 1; r <= rows; ++r) {
            sum_mu += mu.part(m, r);
            sum_nu += nu.part(m, r);
            if (pref_mu + sum_mu < pref_nu + sum_nu) return false;
        }
        pref_mu += sum_mu;
        pref_nu += sum_nu;
    }
    return true;
}

bool lex_less(const Multipartition& mu, const Multipartition& nu) {
    if (mu.level() != nu.level())
        throw std::invalid_argument("lex comparison needs equal level");
    for (long m = 1; m <= mu.level(); ++m) {
        long rows = std::max(mu.rows(m), nu.rows(m));
        for (long r = 1; r <= rows; ++r) {
            if (mu.part(m, r) != nu.part(m, r))
                return mu.part(m, r) < nu.part(m, r);
        }
    }
    return false;
}

namespace {

// addable-minus-removable count over the i-nodes passing the position filter
template <class Filter>
long signed_count(const Multipartition& mu, long i, const std::vector<long>& kappa,
                  const QuantumChar& qc, Filter keep) {
    BoundaryNodes bn = boundary_nodes(mu);
    long d = 0;
    for (const Node& b : bn.addable)
        if (node_residue(b, kappa, qc) == qc.normalize(i) && keep(b)) ++d;
    for (const Node& a : bn.removable)
        if (node_residue(a, kappa, qc) == qc.normalize(i) && keep(a)) --d;
    return d;
}

bool is_removable(const Multipartition& mu, const Node& a) {
    for (const Node& r : boundary_nodes(mu).removable)
        if (r == a) return true;
    return false;
}

bool is_addable(const Multipartition& mu, const Node& b) {
    for (const Node& x : boundary_nodes(mu).addable)
        if (x == b) return true;
    return false;
}

}  // namespace

long d_below(const Multipartition& mu, const Node& a,
             const std::vector<long>& kappa, const QuantumChar& qc) {
    if (!is_removable(mu, a))
        throw std::invalid_argument("node is not removable: " + node_str(a));
    long i = node_residue(a, kappa, qc);
    return signed_count(mu, i, kappa, qc,
                        [&](const Node& x) { return node_above(a, x); });
}

long d_above(const Multipartition& mu, const Node& b,
             const std::vector<long>& kappa, const QuantumChar& qc) {
    if (!is_addable(mu, b))
        throw std::invalid_argument("node is not addable: " + node_str(b));
    long i = node_residue(b, kappa, qc);
    return signed_count(mu, i, kappa, qc,
                        [&](const Node& x) { return node_above(x, b); });
}

long d_total(const Multipartition& mu, long i, const std::vector<long>& kappa,
             const QuantumChar& qc) {
    return signed_count(mu, i, kappa, qc, [](const Node&) { return true; });
}

std::optional<bool> is_restricted_closed_form(const Multipartition& mu,
                                              const std::vector<long>& kappa,
                                              const QuantumChar& qc) {
    long l = mu.level();
    if ((long)kappa.size() != l)
        throw std::invalid_argument("kappa level does not match multipartition");
    long e = qc.e();
    if (l == 1 && e > 0) {
        for (long r = 1; r <= mu.rows(1); ++r)
            if (mu.part(1, r) - mu.part(1, r + 1) >= e) return false;
        return true;
    }
    if (e == 0) {
        bool dec = true, inc = true;
        for (long m = 1; m < l; ++m) {
            dec = dec && kappa[m - 1] >= kappa[m];
            inc = inc && kappa[m - 1] <= kappa[m];
        }
        if (dec) {
            for (long m = 1; m < l; ++m) {
                long off = kappa[m - 1] - kappa[m];
                for (long r = 1; r <= mu.rows(m); ++r)
                    if (r - off >= 1 && mu.part(m, r) > mu.part(m + 1, r - off))
                        return false;
            }
            return true;
        }
        if (inc) {
            for (long m = 1; m < l; ++m) {
                long off = kappa[m] - kappa[m - 1];
                for (long r = 1; r <= mu.rows(m); ++r)
                    if (mu.part(m, r) > mu.part(m + 1, r) + off) return false;
            }
            return true;
        }
    }
    return std::nullopt;
}

namespace {

void partitions_of(long n, long max_part, std::vector<long>& cur,
                   std::vector<std::vector<long>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (long p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_of(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<long>> partitions(long n) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    partitions_of(n, n, cur, out);
    return out;
}

}  // namespace

std::vector<Multipartition> enumerate_multipartitions(long d, long l) {
    if (d < 0 || l < 1) throw std::invalid_argument("need d >= 0 and l >= 1");
    std::vector<std::vector<std::vector<long>>> partial{{}};
    for (long m = 0; m < l; ++m) {
        std::vector<std::vector<std::vector<long>>> next;
        for (const auto& head : partial) {
            long used = 0;
            for (const auto& c : head)
                for (long p : c) used += p;
            long budget = d - used;
            long lo = (m == l - 1) ? budget : 0;
            for (long s = lo; s <= budget; ++s)
                for (auto& p : partitions(s)) {
                    auto h = head;
                    h.push_back(p);
                    next.push_back(std::move(h));
                }
        }
        partial = std::move(next);
    }
    std::vector<Multipartition> out;
    out.reserve(partial.size());
    for (auto& comps : partial) out.emplace_back(std::move(comps));
    std::sort(out.begin(), out.end(),
              [](const Multipartition& a, const Multipartition& b) {
                  return lex_less(b, a);
              });
    return out;
}

std::vector<Multipartition> multipartitions_with_content(
    long d, const std::vector<long>& kappa, const QuantumChar& qc,
    const RootElement& alpha) {
    std::vector<Multipartition> out;
    for (auto& mu : enumerate_multipartitions(d, (long)kappa.size()))
        if (content(mu, kappa, qc) == alpha) out.push_back(mu);
    return out;
}

std::vector<long> transpose(const std::vector<long>& lambda) {
    std::vector<long> t(lambda.empty() ? 0 : lambda[0], 0);
    for (long p : lambda)
        for (long c = 0; c < p; ++c) ++t[c];
    return t;
}

} // namespace grk
