#include "grk/seminormal.hpp"

#include "grk/tableaux.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace grk {

Matrix zero_matrix(long n) {
    return Matrix(n, std::vector<mpq_class>(n, 0));
}

Matrix identity_matrix(long n) {
    Matrix m = zero_matrix(n);
    for (long k = 0; k < n; ++k) m[k][k] = 1;
    return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    long n = (long)a.size();
    Matrix c = zero_matrix(n);
    for (long i = 0; i < n; ++i)
        for (long k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (long j = 0; j < n; ++j)
                if (b[k][j] != 0) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

Matrix matadd(const Matrix& a, const Matrix& b) {
    Matrix c = a;
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < c.size(); ++j) c[i][j] += b[i][j];
    return c;
}

Matrix matsub(const Matrix& a, const Matrix& b) {
    Matrix c = a;
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < c.size(); ++j) c[i][j] -= b[i][j];
    return c;
}

bool is_zero_matrix(const Matrix& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (x != 0) return false;
    return true;
}

Matrix KLRRep::idempotent(const std::vector<long>& i) const {
    Matrix m = zero_matrix(dim());
    for (long b = 0; b < dim(); ++b)
        if (iseq[b] == i) m[b][b] = 1;
    return m;
}

namespace {

std::string seq_str(const std::vector<long>& i) {
    std::ostringstream out;
    out << "(";
    for (size_t k = 0; k < i.size(); ++k) {
        if (k) out << ",";
        out << i[k];
    }
    out << ")";
    return out.str();
}

Tableau swap_entries(const Tableau& t, long r) {
    Multipartition mu = t.shape();
    std::vector<std::vector<std::vector<long>>> rows(mu.level());
    for (long m = 1; m <= mu.level(); ++m) {
        rows[m - 1].resize(mu.rows(m));
        for (long row = 1; row <= mu.rows(m); ++row) {
            auto& line = rows[m - 1][row - 1];
            line.resize(mu.part(m, row));
            for (long col = 1; col <= mu.part(m, row); ++col) {
                long k = t.entry({row, col, m});
                if (k == r) k = r + 1;
                else if (k == r + 1) k = r;
                line[col - 1] = k;
            }
        }
    }
    return Tableau(std::move(rows));
}

}  // namespace

KLRRep build_seminormal(const Multipartition& mu, const std::vector<long>& kappa,
                        const QuantumChar& qc) {
    if (qc.e() != 0 || kappa.size() != 1 || mu.level() != 1)
        throw std::invalid_argument("seminormal modules need e = 0 at level 1");

    std::vector<Tableau> tabs = standard_tableaux(mu);
    KLRRep rep;
    rep.d = mu.size();
    long n = (long)tabs.size();
    std::map<Tableau, long> index;
    for (long b = 0; b < n; ++b) {
        rep.labels.push_back(tabs[b].str());
        rep.iseq.push_back(residue_sequence(tabs[b], kappa, qc));
        rep.deg.push_back(0);
        index.emplace(tabs[b], b);
    }
    for (long b = 0; b < n; ++b)
        for (long r = 1; r < rep.d; ++r)
            if (rep.iseq[b][r - 1] == rep.iseq[b][r])
                throw std::logic_error(
                    "adjacent equal residues in a standard tableau at e = 0");

    rep.y.assign(rep.d, zero_matrix(n));
    rep.psi.assign(std::max(rep.d - 1, 0L), zero_matrix(n));
    for (long b = 0; b < n; ++b)
        for (long r = 1; r < rep.d; ++r) {
            Tableau s = swap_entries(tabs[b], r);
            if (s.is_standard()) rep.psi[r - 1][index.at(s)][b] = 1;
        }
    return rep;
}

std::string KLRViolation::str() const {
    std::ostringstream out;
    out << relation;
    if (r > 0) out << " at r=" << r;
    if (s > 0) out << " s=" << s;
    if (!where.empty()) out << " on " << where;
    return out.str();
}

namespace {

void check_shape(const KLRRep& rep) {
    long n = rep.dim();
    if (rep.d < 0 || (long)rep.labels.size() != n ||
        (long)rep.deg.size() != n || (long)rep.y.size() != rep.d ||
        (long)rep.psi.size() != std::max(rep.d - 1, 0L))
        throw std::invalid_argument("malformed module data");
    for (const auto& i : rep.iseq)
        if ((long)i.size() != rep.d)
            throw std::invalid_argument("residue sequence of wrong length");
    auto square = [n](const Matrix& m) {
        if ((long)m.size() != n) return false;
        for (const auto& row : m)
            if ((long)row.size() != n) return false;
        return true;
    };
    for (const auto& m : rep.y)
        if (!square(m)) throw std::invalid_argument("y matrix of wrong shape");
    for (const auto& m : rep.psi)
        if (!square(m)) throw std::invalid_argument("psi matrix of wrong shape");
}

using SeqSet = std::set<std::vector<long>>;
using Task = std::function<void(std::vector<KLRViolation>&)>;

// One closure per (relation family, strand indices); all closures only refer
// to state owned by the caller of verify_klr_relations.
std::vector<Task> collect_tasks(const KLRRep& rep, const SeqSet& present,
                                const std::vector<long>& kappa,
                                const QuantumChar& qc) {
    std::vector<Task> tasks;
    const long d = rep.d;

    for (long r = 1; r <= d; ++r) {
        tasks.push_back([&rep, &present, r](std::vector<KLRViolation>& out) {
            for (const auto& i : present) {
                Matrix e = rep.idempotent(i);
                if (!is_zero_matrix(matsub(matmul(rep.y[r - 1], e),
                                           matmul(e, rep.y[r - 1]))))
                    out.push_back({"y e(i) = e(i) y", r, 0, seq_str(i)});
            }
        });
        tasks.push_back([&rep, r](std::vector<KLRViolation>& out) {
            for (long b = 0; b < rep.dim(); ++b)
                for (long c = 0; c < rep.dim(); ++c)
                    if (rep.y[r - 1][b][c] != 0 &&
                        rep.deg[b] != rep.deg[c] + 2) {
                        out.push_back({"deg y = 2", r, 0, rep.labels[c]});
                        return;
                    }
        });
        for (long s = r + 1; s <= d; ++s)
            tasks.push_back([&rep, r, s](std::vector<KLRViolation>& out) {
                if (!is_zero_matrix(
                        matsub(matmul(rep.y[r - 1], rep.y[s - 1]),
                               matmul(rep.y[s - 1], rep.y[r - 1]))))
                    out.push_back({"y y = y y", r, s, ""});
            });
    }

    for (long r = 1; r < d; ++r) {
        tasks.push_back([&rep, &present, r](std::vector<KLRViolation>& out) {
            SeqSet window = present;
            for (auto i : present) {
                std::swap(i[r - 1], i[r]);
                window.insert(i);
            }
            for (const auto& i : window) {
                auto si = i;
                std::swap(si[r - 1], si[r]);
                if (!is_zero_matrix(
                        matsub(matmul(rep.psi[r - 1], rep.idempotent(i)),
                               matmul(rep.idempotent(si), rep.psi[r - 1]))))
                    out.push_back({"psi e(i) = e(si) psi", r, 0, seq_str(i)});
            }
        });

        tasks.push_back([&rep, &qc, r](std::vector<KLRViolation>& out) {
            for (long b = 0; b < rep.dim(); ++b)
                for (long c = 0; c < rep.dim(); ++c)
                    if (rep.psi[r - 1][b][c] != 0 &&
                        rep.deg[b] != rep.deg[c] - qc.cartan_entry(
                                                       rep.iseq[c][r - 1],
                                                       rep.iseq[c][r])) {
                        out.push_back({"deg psi = -a", r, 0, rep.labels[c]});
                        return;
                    }
        });

        for (long s = 1; s <= d; ++s)
            if (s != r && s != r + 1)
                tasks.push_back([&rep, r, s](std::vector<KLRViolation>& out) {
                    if (!is_zero_matrix(
                            matsub(matmul(rep.psi[r - 1], rep.y[s - 1]),
                                   matmul(rep.y[s - 1], rep.psi[r - 1]))))
                        out.push_back({"psi y = y psi", r, s, ""});
                });
        for (long s = r + 2; s < d; ++s)
            tasks.push_back([&rep, r, s](std::vector<KLRViolation>& out) {
                if (!is_zero_matrix(
                        matsub(matmul(rep.psi[r - 1], rep.psi[s - 1]),
                               matmul(rep.psi[s - 1], rep.psi[r - 1]))))
                    out.push_back({"psi psi = psi psi", r, s, ""});
            });

        tasks.push_back([&rep, &present, r](std::vector<KLRViolation>& out) {
            for (const auto& i : present) {
                Matrix e = rep.idempotent(i);
                Matrix lhs = matmul(matmul(rep.psi[r - 1], rep.y[r]), e);
                Matrix rhs = matmul(rep.y[r - 1], matmul(rep.psi[r - 1], e));
                if (i[r - 1] == i[r]) rhs = matadd(rhs, e);
                if (!is_zero_matrix(matsub(lhs, rhs)))
                    out.push_back({"psi y(r+1) e(i)", r, 0, seq_str(i)});
                lhs = matmul(matmul(rep.y[r], rep.psi[r - 1]), e);
                rhs = matmul(rep.psi[r - 1], matmul(rep.y[r - 1], e));
                if (i[r - 1] == i[r]) rhs = matadd(rhs, e);
                if (!is_zero_matrix(matsub(lhs, rhs)))
                    out.push_back({"y(r+1) psi e(i)", r, 0, seq_str(i)});
            }
        });

        tasks.push_back([&rep, &present, &qc, r](std::vector<KLRViolation>& out) {
            for (const auto& i : present) {
                Matrix e = rep.idempotent(i);
                Matrix lhs = matmul(matmul(rep.psi[r - 1], rep.psi[r - 1]), e);
                long a = i[r - 1], b = i[r];
                Matrix rhs;
                if (a == b) rhs = zero_matrix(rep.dim());
                else if (qc.unlinked(a, b)) rhs = e;
                else if (qc.double_arrow(a, b))
                    rhs = matmul(matmul(matsub(rep.y[r], rep.y[r - 1]),
                                        matsub(rep.y[r - 1], rep.y[r])), e);
                else if (qc.arrow_to(a, b))
                    rhs = matmul(matsub(rep.y[r], rep.y[r - 1]), e);
                else
                    rhs = matmul(matsub(rep.y[r - 1], rep.y[r]), e);
                if (!is_zero_matrix(matsub(lhs, rhs)))
                    out.push_back({"psi^2 e(i)", r, 0, seq_str(i)});
            }
        });
    }

    for (long r = 1; r + 1 < d; ++r)
        tasks.push_back([&rep, &present, &qc, r](std::vector<KLRViolation>& out) {
            Matrix braid =
                matsub(matmul(rep.psi[r - 1],
                              matmul(rep.psi[r], rep.psi[r - 1])),
                       matmul(rep.psi[r],
                              matmul(rep.psi[r - 1], rep.psi[r])));
            for (const auto& i : present) {
                Matrix e = rep.idempotent(i);
                long a = i[r - 1], b = i[r], c = i[r + 1];
                Matrix corr = zero_matrix(rep.dim());
                if (c == a && qc.double_arrow(a, b)) {
                    corr = matadd(rep.y[r - 1], rep.y[r + 1]);
                    corr = matsub(corr, matadd(rep.y[r], rep.y[r]));
                } else if (c == a && qc.arrow_to(a, b)) {
                    corr = identity_matrix(rep.dim());
                } else if (c == a && qc.arrow_from(a, b)) {
                    corr = matsub(corr, identity_matrix(rep.dim()));
                }
                if (!is_zero_matrix(matsub(matmul(braid, e), matmul(corr, e))))
                    out.push_back({"braid e(i)", r, 0, seq_str(i)});
            }
        });

    if (d >= 1)
        tasks.push_back([&rep, &present, &kappa, &qc](
                            std::vector<KLRViolation>& out) {
            for (const auto& i : present) {
                long n = weight_pairing(kappa, RootElement{{i[0], 1}}, qc);
                Matrix m = rep.idempotent(i);
                for (long k = 0; k < n; ++k) m = matmul(rep.y[0], m);
                if (!is_zero_matrix(m))
                    out.push_back({"y(1)^(L,a) e(i) = 0", 0, 0, seq_str(i)});
            }
        });

    return tasks;
}

}  // namespace

std::vector<KLRViolation> verify_klr_relations(const KLRRep& rep,
                                               const std::vector<long>& kappa,
                                               const QuantumChar& qc,
                                               Exec exec) {
    check_shape(rep);
    SeqSet present(rep.iseq.begin(), rep.iseq.end());
    std::vector<Task> tasks = collect_tasks(rep, present, kappa, qc);

    std::vector<KLRViolation> report;
    if (exec == Exec::serial) {
        for (const Task& t : tasks) t(report);
    } else {
#pragma omp parallel
        {
            std::vector<KLRViolation> local;
#pragma omp for schedule(dynamic) nowait
            for (size_t k = 0; k < tasks.size(); ++k) tasks[k](local);
#pragma omp critical
            report.insert(report.end(), local.begin(), local.end());
        }
    }
    std::sort(report.begin(), report.end(),
              [](const KLRViolation& x, const KLRViolation& y) {
                  return std::tuple(x.relation, x.r, x.s, x.where) <
                         std::tuple(y.relation, y.r, y.s, y.where);
              });
    return report;
}

std::string klr_rep_json(const KLRRep& rep) {
    nlohmann::json j;
    j["d"] = rep.d;
    j["basis"] = nlohmann::json::array();
    for (long b = 0; b < rep.dim(); ++b) {
        nlohmann::json entry;
        entry["label"] = rep.labels[b];
        entry["residues"] = rep.iseq[b];
        entry["degree"] = rep.deg[b];
        j["basis"].push_back(entry);
    }
    auto sparse = [](const Matrix& m) {
        nlohmann::json arr = nlohmann::json::array();
        for (size_t b = 0; b < m.size(); ++b)
            for (size_t c = 0; c < m.size(); ++c)
                if (m[b][c] != 0)
                    arr.push_back({{"to", b}, {"from", c},
                                   {"coeff", m[b][c].get_str()}});
        return arr;
    };
    j["y"] = nlohmann::json::array();
    for (const Matrix& m : rep.y) j["y"].push_back(sparse(m));
    j["psi"] = nlohmann::json::array();
    for (const Matrix& m : rep.psi) j["psi"].push_back(sparse(m));
    return j.dump(2);
}

} // namespace grk
