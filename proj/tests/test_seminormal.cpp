#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "grk/seminormal.hpp"
#include "grk/tableaux.hpp"

#include <json.hpp>

#include <cstdlib>
#include <set>

using namespace grk;

namespace {

long label_index(const KLRRep& rep, const std::string& label) {
    for (long b = 0; b < rep.dim(); ++b)
        if (rep.labels[b] == label) return b;
    REQUIRE(false);
    return -1;
}

long factorial(long n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("matrix helpers") {
    Matrix a = identity_matrix(2);
    a[0][1] = mpq_class(1, 2);
    Matrix b = zero_matrix(2);
    b[1][0] = 3;
    Matrix c = matmul(a, b);
    CHECK(c[0][0] == mpq_class(3, 2));
    CHECK(c[1][0] == 3);
    CHECK(is_zero_matrix(matsub(matadd(a, b), matadd(b, a))));
    CHECK(!is_zero_matrix(a));
}

TEST_CASE("seminormal construction") {
    QuantumChar e0(0);
    std::vector<long> kappa{0};

    SUBCASE("single row kills every psi") {
        KLRRep rep = build_seminormal(Multipartition::parse("4"), kappa, e0);
        CHECK(rep.dim() == 1);
        CHECK(rep.iseq[0] == std::vector<long>{0, 1, 2, 3});
        for (const Matrix& m : rep.psi) CHECK(is_zero_matrix(m));
        for (const Matrix& m : rep.y) CHECK(is_zero_matrix(m));
    }

    SUBCASE("hook of size three") {
        KLRRep rep = build_seminormal(Multipartition::parse("2,1"), kappa, e0);
        REQUIRE(rep.dim() == 2);
        long lead = label_index(rep, "1,2/3");
        long other = label_index(rep, "1,3/2");
        CHECK(rep.iseq[lead] == std::vector<long>{0, 1, -1});
        CHECK(rep.iseq[other] == std::vector<long>{0, -1, 1});
        // swapping 1,2 breaks standardness; swapping 2,3 moves between the two
        for (long b = 0; b < 2; ++b) CHECK(rep.psi[0][b][lead] == 0);
        CHECK(rep.psi[1][other][lead] == 1);
        CHECK(rep.psi[1][lead][other] == 1);
        for (long b = 0; b < 2; ++b) CHECK(rep.deg[b] == 0);
    }

    SUBCASE("dimension is the number of standard tableaux") {
        for (auto& mu : enumerate_multipartitions(5, 1)) {
            KLRRep rep = build_seminormal(mu, kappa, e0);
            CHECK(rep.dim() == (long)standard_tableaux(mu).size());
        }
    }

    SUBCASE("rejects other configurations") {
        CHECK_THROWS_AS(
            build_seminormal(Multipartition::parse("2,1"), {0}, QuantumChar(2)),
            std::invalid_argument);
        CHECK_THROWS_AS(
            build_seminormal(Multipartition::parse("2,1"), {0, 1}, e0),
            std::invalid_argument);
    }
}

TEST_CASE("all relations hold on seminormal modules") {
    QuantumChar e0(0);
    for (long kap : {0L, 5L}) {
        std::vector<long> kappa{kap};
        for (long d = 0; d <= 6; ++d)
            for (auto& mu : enumerate_multipartitions(d, 1)) {
                KLRRep rep = build_seminormal(mu, kappa, e0);
                auto report = verify_klr_relations(rep, kappa, e0);
                for (const auto& v : report) MESSAGE(mu.str(), ": ", v.str());
                CHECK(report.empty());
                CHECK(report ==
                      verify_klr_relations(rep, kappa, e0, Exec::serial));
            }
    }
}

TEST_CASE("corrupted modules are rejected") {
    QuantumChar e0(0);
    std::vector<long> kappa{0};
    KLRRep rep = build_seminormal(Multipartition::parse("3,2"), kappa, e0);

    SUBCASE("flipped psi entry") {
        KLRRep bad = rep;
        bad.psi[1][0][0] += 1;
        CHECK(!verify_klr_relations(bad, kappa, e0).empty());
    }
    SUBCASE("nonzero y entry") {
        KLRRep bad = rep;
        bad.y[0][1][1] = 1;
        auto report = verify_klr_relations(bad, kappa, e0);
        REQUIRE(!report.empty());
        bool degree_hit = false, cyclotomic_hit = false;
        for (const auto& v : report) {
            degree_hit |= v.relation == "deg y = 2";
            cyclotomic_hit |= v.relation == "y(1)^(L,a) e(i) = 0";
        }
        CHECK(degree_hit);
        CHECK(cyclotomic_hit);
    }
    SUBCASE("wrong degree") {
        KLRRep bad = rep;
        bad.deg[2] = 1;
        CHECK(!verify_klr_relations(bad, kappa, e0).empty());
    }
    SUBCASE("wrong dominant weight") {
        auto report = verify_klr_relations(rep, {7}, e0);
        REQUIRE(!report.empty());
        CHECK(report[0].relation == "y(1)^(L,a) e(i) = 0");
    }
    SUBCASE("malformed shape throws") {
        KLRRep bad = rep;
        bad.y[0].pop_back();
        CHECK_THROWS_AS(verify_klr_relations(bad, kappa, e0),
                        std::invalid_argument);
    }
}

TEST_CASE("semisimple dimension count and residue separation") {
    QuantumChar e0(0);
    std::vector<long> kappa{0};
    for (long d = 1; d <= 6; ++d) {
        long total = 0;
        std::set<std::vector<long>> seen;
        long seen_count = 0;
        for (auto& mu : enumerate_multipartitions(d, 1)) {
            KLRRep rep = build_seminormal(mu, kappa, e0);
            total += rep.dim() * rep.dim();
            for (const auto& i : rep.iseq) {
                CHECK(i[0] == 0);  // entry 1 always sits at the first node
                seen.insert(i);
                ++seen_count;
            }
            // psi only moves between residue sequences differing in a
            // non-adjacent pair, so each nonzero block has degree shift 0
            for (long r = 1; r < rep.d; ++r)
                for (long b = 0; b < rep.dim(); ++b)
                    for (long c = 0; c < rep.dim(); ++c)
                        if (rep.psi[r - 1][b][c] != 0)
                            CHECK(std::abs(rep.iseq[c][r - 1] -
                                           rep.iseq[c][r]) >= 2);
        }
        CHECK(total == factorial(d));
        CHECK((long)seen.size() == seen_count);
    }
}

TEST_CASE("json dump") {
    QuantumChar e0(0);
    KLRRep rep = build_seminormal(Multipartition::parse("2,1"), {0}, e0);
    auto j = nlohmann::json::parse(klr_rep_json(rep));
    CHECK(j["d"] == 3);
    REQUIRE(j["basis"].size() == 2);
    CHECK(j["basis"][0].contains("residues"));
    CHECK(j["y"].size() == 3);
    REQUIRE(j["psi"].size() == 2);
    long nonzero = 0;
    for (const auto& m : j["psi"]) nonzero += (long)m.size();
    CHECK(nonzero == 2);
    for (const auto& m : j["y"]) CHECK(m.empty());
}
