#include "grk/fock.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace grk {

FockVector FockVector::basis(const Multipartition& mu) {
    FockVector v;
    v.terms_.emplace(mu, LaurentPoly(1));
    return v;
}

LaurentPoly FockVector::coeff(const Multipartition& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? LaurentPoly() : it->second;
}

void FockVector::add(const Multipartition& mu, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(mu);
    if (it == terms_.end()) {
        terms_.emplace(mu, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FockVector& FockVector::operator+=(const FockVector& o) {
    for (const auto& [mu, c] : o.terms_) add(mu, c);
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
    for (const auto& [mu, c] : o.terms_) add(mu, -c);
    return *this;
}

FockVector FockVector::scaled(const LaurentPoly& c) const {
    FockVector r;
    if (c.is_zero()) return r;
    for (const auto& [mu, k] : terms_) r.terms_.emplace(mu, k * c);
    return r;
}

FockVector fock_E(long i, const FockVector& v, const std::vector<long>& kappa,
                  const QuantumChar& qc) {
    FockVector out;
    for (const auto& [mu, c] : v.terms())
        for (const Node& a : boundary_nodes(mu).removable)
            if (node_residue(a, kappa, qc) == qc.normalize(i))
                out.add(mu.remove_node(a),
                        c.shifted(d_below(mu, a, kappa, qc)));
    return out;
}

FockVector fock_F(long i, const FockVector& v, const std::vector<long>& kappa,
                  const QuantumChar& qc) {
    FockVector out;
    for (const auto& [mu, c] : v.terms())
        for (const Node& b : boundary_nodes(mu).addable)
            if (node_residue(b, kappa, qc) == qc.normalize(i))
                out.add(mu.add_node(b), c.shifted(-d_above(mu, b, kappa, qc)));
    return out;
}

FockVector fock_K(long i, const FockVector& v, const std::vector<long>& kappa,
                  const QuantumChar& qc, bool inverse) {
    FockVector out;
    for (const auto& [mu, c] : v.terms()) {
        long d = d_total(mu, i, kappa, qc);
        out.add(mu, c.shifted(inverse ? -d : d));
    }
    return out;
}

FockVector fock_divided_power(ChevalleyOp op, long i, long n,
                              const FockVector& v,
                              const std::vector<long>& kappa,
                              const QuantumChar& qc) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    FockVector w = v;
    for (long k = 0; k < n; ++k)
        w = op == ChevalleyOp::E ? fock_E(i, w, kappa, qc)
                                 : fock_F(i, w, kappa, qc);
    LaurentPoly nf = quantum_factorial(n);
    FockVector out;
    for (const auto& [mu, c] : w.terms()) {
        auto q = exact_div(c, nf);
        if (!q)
            throw std::logic_error("divided power coefficient not divisible by [n]!");
        out.add(mu, *q);
    }
    return out;
}

std::string RelationViolation::str() const {
    std::ostringstream out;
    out << relation << " fails on M_" << mu.str() << " with i=" << i
        << " j=" << j;
    return out.str();
}

namespace {

std::vector<long> residue_window(long dmax, const std::vector<long>& kappa,
                                 const QuantumChar& qc) {
    std::vector<long> out;
    if (qc.e() > 0) {
        for (long i = 0; i < qc.e(); ++i) out.push_back(i);
        return out;
    }
    long lo = *std::min_element(kappa.begin(), kappa.end()) - (dmax + 2);
    long hi = *std::max_element(kappa.begin(), kappa.end()) + (dmax + 2);
    for (long i = lo; i <= hi; ++i) out.push_back(i);
    return out;
}

void check_on_basis(const Multipartition& mu, const std::vector<long>& residues,
                    const std::vector<long>& kappa, const QuantumChar& qc,
                    std::vector<RelationViolation>& out) {
    const FockVector v = FockVector::basis(mu);
    const LaurentPoly qdiff = LaurentPoly::q(1) - LaurentPoly::q(-1);
    for (long i : residues) {
        FockVector kv = fock_K(i, v, kappa, qc);
        FockVector kinv = fock_K(i, v, kappa, qc, true);
        for (long j : residues) {
            long a = qc.cartan_entry(i, j);
            FockVector ej = fock_E(j, v, kappa, qc);
            FockVector fj = fock_F(j, v, kappa, qc);

            FockVector lhs = fock_K(i, fock_E(j, kinv, kappa, qc), kappa, qc);
            if (lhs != ej.scaled(LaurentPoly::q(a)))
                out.push_back({"K E K^-1 = q^a E", mu, i, j});
            lhs = fock_K(i, fock_F(j, kinv, kappa, qc), kappa, qc);
            if (lhs != fj.scaled(LaurentPoly::q(-a)))
                out.push_back({"K F K^-1 = q^-a F", mu, i, j});

            FockVector comm = fock_E(i, fj, kappa, qc);
            comm -= fock_F(j, fock_E(i, v, kappa, qc), kappa, qc);
            FockVector want;
            if (i == j) {
                want = kv;
                want -= kinv;
            }
            if (comm.scaled(qdiff) != want)
                out.push_back({"(q-q^-1)[E,F] = delta (K-K^-1)", mu, i, j});

            if (i == j) continue;
            long n = 1 - a;
            for (ChevalleyOp op : {ChevalleyOp::E, ChevalleyOp::F}) {
                auto apply = [&](long which, const FockVector& w) {
                    return op == ChevalleyOp::E ? fock_E(which, w, kappa, qc)
                                                : fock_F(which, w, kappa, qc);
                };
                FockVector serre;
                for (long m = 0; m <= n; ++m) {
                    FockVector t = v;
                    for (long k = 0; k < m; ++k) t = apply(i, t);
                    t = apply(j, t);
                    for (long k = 0; k < n - m; ++k) t = apply(i, t);
                    LaurentPoly coeff = quantum_binomial(n, m);
                    if (m % 2) coeff = -coeff;
                    serre += t.scaled(coeff);
                }
                if (!serre.is_zero())
                    out.push_back({op == ChevalleyOp::E ? "Serre for E"
                                                        : "Serre for F",
                                   mu, i, j});
            }
        }
    }
}

}  // namespace

std::vector<RelationViolation> verify_uqg_relations(long dmax,
                                                    const std::vector<long>& kappa,
                                                    const QuantumChar& qc,
                                                    Exec exec) {
    if (dmax < 0) throw std::invalid_argument("need dmax >= 0");
    std::vector<Multipartition> mus;
    for (long d = 0; d <= dmax; ++d)
        for (auto& mu : enumerate_multipartitions(d, (long)kappa.size()))
            mus.push_back(mu);
    std::vector<long> residues = residue_window(dmax, kappa, qc);

    std::vector<RelationViolation> report;
    if (exec == Exec::serial) {
        for (const auto& mu : mus)
            check_on_basis(mu, residues, kappa, qc, report);
        return report;
    }
#pragma omp parallel
    {
        std::vector<RelationViolation> local;
#pragma omp for schedule(dynamic) nowait
        for (size_t k = 0; k < mus.size(); ++k)
            check_on_basis(mus[k], residues, kappa, qc, local);
#pragma omp critical
        report.insert(report.end(), local.begin(), local.end());
    }
    std::sort(report.begin(), report.end(),
              [](const RelationViolation& x, const RelationViolation& y) {
                  return std::tuple(x.mu.str(), x.relation, x.i, x.j) <
                         std::tuple(y.mu.str(), y.relation, y.i, y.j);
              });
    return report;
}

} // namespace grk
