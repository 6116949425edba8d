#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "discsos/resultant.hpp"
#include "discsos/sos.hpp"
#include "test_support.hpp"

using namespace discsos;
using namespace discsos::test;

namespace {

Rational certificate_total(const SosCertificate& cert) {
    Rational sum;
    for (const SosTerm& t : cert.terms) {
        const Rational& w = std::get<Rational>(t.witness);
        sum += t.weight * w * w;
    }
    return sum;
}

Mat<GaussQ> random_hermitian(std::mt19937& rng, int n) {
    Mat<GaussQ> m(n, n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = GaussQ(random_rational(rng, 3));
        for (int j = i + 1; j < n; ++j) {
            GaussQ v(random_rational(rng, 3), random_rational(rng, 3));
            m(i, j) = v;
            m(j, i) = v.conj();
        }
    }
    return m;
}

} // namespace

TEST_CASE("zstar layout") {
    Mat<GaussQ> i2 = Mat<GaussQ>::identity(2);
    Mat<GaussQ> zs = zstar(i2);
    REQUIRE(zs.rows() == 4);
    REQUIRE(zs.cols() == 2);
    for (int r = 0; r < 4; ++r) CHECK(zs(r, 0) == zs(r, 1)); // both columns vectorize I
    // every maximal minor vanishes (repeated eigenvalue: D = 0)
    SosCertificate cert = ilyushechkin_certificate(i2);
    CHECK(certificate_total(cert) == Rational(0));

    Mat<Rational> d12 = diag({Rational(1), Rational(2)});
    Mat<Rational> zs2 = zstar_real(d12);
    CHECK(zs2(0, 0) == Rational(1)); // row (1,1)
    CHECK(zs2(0, 1) == Rational(1));
    CHECK(zs2(3, 0) == Rational(1)); // row (2,2)
    CHECK(zs2(3, 1) == Rational(2));
    CHECK(zs2(1, 0) == Rational(0)); // off-diagonal rows vanish
    CHECK(zs2(2, 1) == Rational(0));

    Mat<Rational> d3 = diag({Rational(0), Rational(1), Rational(2)});
    Mat<Rational> zs3 = zstar_real(d3);
    REQUIRE(zs3.rows() == 9);
    REQUIRE(zs3.cols() == 3);
    int nonzero_rows = 0;
    for (int r = 0; r < 9; ++r) {
        bool nz = false;
        for (int c = 0; c < 3; ++c) nz = nz || !zs3(r, c).is_zero();
        if (nz) ++nonzero_rows;
    }
    CHECK(nonzero_rows == 3);

    CHECK_THROWS_AS(zstar(Mat<GaussQ>(2, 3)), std::invalid_argument);
}

TEST_CASE("ilyushechkin certificate on hand examples") {
    SosCertificate c1 = ilyushechkin_certificate(diag({Rational(1), Rational(2)}));
    CHECK(std::get<Rational>(c1.target) == Rational(1));
    CHECK(verify_certificate(c1).ok);

    Mat<Rational> sw(2, 2);
    sw(0, 1) = Rational(1);
    sw(1, 0) = Rational(1);
    SosCertificate c2 = ilyushechkin_certificate(sw);
    CHECK(std::get<Rational>(c2.target) == Rational(4));
    CHECK(certificate_total(c2) == Rational(4));
    CHECK(c2.terms.size() == 6);
    CHECK(verify_certificate(c2).ok);

    SosCertificate c3 = ilyushechkin_certificate(Mat<Rational>::identity(3));
    CHECK(std::get<Rational>(c3.target) == Rational(0));
    CHECK(verify_certificate(c3).ok);
}

TEST_CASE("ilyushechkin rejects non-normal input") {
    Mat<Rational> shear(2, 2);
    shear(0, 0) = Rational(1);
    shear(0, 1) = Rational(1);
    shear(1, 1) = Rational(1);
    CHECK_THROWS_AS(ilyushechkin_certificate(shear), std::domain_error);
}

TEST_CASE("ilyushechkin total equals the resultant discriminant (real symmetric)") {
    std::mt19937 rng(91);
    for (int n = 2; n <= 4; ++n)
        for (int rep = 0; rep < (n == 4 ? 5 : 20); ++rep) {
            Mat<Rational> x = random_symmetric(rng, n, 3);
            SosCertificate cert = ilyushechkin_certificate(x);
            Rational d = poly_discriminant(charpoly(x));
            CHECK(std::get<Rational>(cert.target) == d);
            CHECK(certificate_total(cert) == d);
            CHECK(verify_certificate(cert).ok);
        }
}

TEST_CASE("ilyushechkin totals |D| for hermitian and gaussian-diagonal input") {
    std::mt19937 rng(92);
    for (int n = 2; n <= 3; ++n)
        for (int rep = 0; rep < 5; ++rep) {
            Mat<GaussQ> h = random_hermitian(rng, n);
            REQUIRE(is_normal(h));
            SosCertificate cert = ilyushechkin_certificate(h);
            // hermitian: the characteristic polynomial is real and D >= 0
            GaussQ d = poly_discriminant(charpoly(h));
            CHECK(d.im.is_zero());
            CHECK(std::get<Rational>(cert.target) == d.re.abs());
            CHECK(verify_certificate(cert).ok);
        }
    for (int rep = 0; rep < 5; ++rep) {
        Mat<GaussQ> z(3, 3);
        for (int i = 0; i < 3; ++i) z(i, i) = GaussQ(random_rational(rng, 2), random_rational(rng, 2));
        SosCertificate cert = ilyushechkin_certificate(z);
        // |D| = prod |z_i - z_j|^2 directly
        Rational expect(1);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) expect *= (z(i, i) - z(j, j)).norm_sq();
        CHECK(std::get<Rational>(cert.target) == expect);
        CHECK(verify_certificate(cert).ok);
    }
}

TEST_CASE("ilyushechkin handles a real normal non-symmetric matrix") {
    Mat<Rational> rot(2, 2);
    rot(0, 1) = Rational(-1);
    rot(1, 0) = Rational(1);
    SosCertificate cert = ilyushechkin_certificate(rot);
    // eigenvalues +-i: D = -4, the certified value is |D| = 4
    CHECK(std::get<Rational>(cert.target) == Rational(4));
    CHECK(verify_certificate(cert).ok);
}

TEST_CASE("symmetric minor counts") {
    CHECK(symmetric_minor_count(2) == 3);
    CHECK(symmetric_minor_count(3) == 20);
    CHECK(symmetric_minor_count(4) == 210);
    CHECK(symmetric_minor_count(6) == 54264);
}

TEST_CASE("symmetric-basis certificate equals the entry-basis one") {
    std::mt19937 rng(93);
    SosCertificate cd = symmetric_basis_certificate(diag({Rational(1), Rational(2)}));
    CHECK(std::get<Rational>(cd.target) == Rational(1));
    CHECK(cd.terms.size() == 3);
    CHECK(verify_certificate(cd).ok);

    for (int n = 2; n <= 4; ++n)
        for (int rep = 0; rep < (n == 4 ? 3 : 10); ++rep) {
            Mat<Rational> x = random_symmetric(rng, n, 3);
            SosCertificate sym = symmetric_basis_certificate(x);
            CHECK(sym.terms.size() == symmetric_minor_count(n));
            CHECK(verify_certificate(sym).ok);
            SosCertificate ent = ilyushechkin_certificate(x);
            CHECK(std::get<Rational>(sym.target) == std::get<Rational>(ent.target));
        }

    Mat<Rational> nonsym(2, 2, {Rational(0), Rational(1), Rational(2), Rational(0)});
    CHECK_THROWS_AS(symmetric_basis_certificate(nonsym), std::domain_error);
}

TEST_CASE("pk certificate on hand examples") {
    PairData g2 = build_pair(PairId::glnr(2));
    SosCertificate c1 = pk_certificate(g2, {Rational(3), Rational(1), Rational(0)}, 1);
    CHECK(std::get<Rational>(c1.target) == Rational(4)); // P_1 = Tr f = (3-1)^2
    CHECK(verify_certificate(c1).ok);

    PairData s31 = build_pair(PairId::sopq(3, 1));
    SosCertificate c2 = pk_certificate(s31, {Rational(1), Rational(1), Rational(0)}, 2);
    CHECK(std::get<Rational>(c2.target) == Rational(4)); // P_2 from t(t-2)^2
    CHECK(verify_certificate(c2).ok);

    // k above the orbit dimension: zero target, all witnesses zero
    SosCertificate c3 = pk_certificate(g2, {Rational(1), Rational(1), Rational(0)}, 1);
    CHECK(std::get<Rational>(c3.target) == Rational(0));
    for (const SosTerm& t : c3.terms) CHECK(std::get<Rational>(t.witness).is_zero());
    CHECK(verify_certificate(c3).ok);

    CHECK_THROWS_AS(pk_certificate(g2, {Rational(1), Rational(2), Rational(3)}, 0), std::invalid_argument);
    CHECK_THROWS_AS(pk_certificate(g2, {Rational(1), Rational(2), Rational(3)}, 4), std::invalid_argument);
}

TEST_CASE("pk certificates total P_k across pairs, samples and k") {
    std::mt19937 rng(94);
    for (const PairId& id : {PairId::glnr(2), PairId::glnr(3), PairId::glnc(2), PairId::sopq(3, 1),
                             PairId::sopq(2, 2), PairId::sopq(3, 2)}) {
        PairData pd = build_pair(id);
        for (int rep = 0; rep < 3; ++rep) {
            std::vector<Rational> x = random_coords(rng, pd.r, 2);
            UPolyQ cf = charpolys(pd, x).cf;
            for (int k = 1; k <= pd.r - pd.l; ++k) {
                SosCertificate cert = pk_certificate(pd, x, k);
                CHECK(std::get<Rational>(cert.target) == signed_coeff(cf, k));
                CHECK(verify_certificate(cert).ok);
            }
        }
    }
}

TEST_CASE("rudin certificate: the two-variable square example") {
    SosCertificate cert = rudin_certificate(2, 2);
    REQUIRE(cert.terms.size() == 3);
    CHECK(cert.terms[0].weight == Rational(1));
    CHECK(cert.terms[1].weight == Rational(2));
    CHECK(cert.terms[2].weight == Rational(1));
    CHECK(verify_certificate(cert).ok);
    CHECK(cert.terms.size() == dim_P(2, 2));
}

TEST_CASE("rudin certificates expand exactly for k <= 5, n <= 4") {
    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k <= 5; ++k) {
            SosCertificate cert = rudin_certificate(k, n);
            CHECK(cert.terms.size() == dim_P(k, n));
            CHECK(verify_certificate(cert).ok);
            // weights are the multinomials k!/alpha!
            for (const SosTerm& t : cert.terms) {
                mpz_class mult;
                mpz_fac_ui(mult.get_mpz_t(), static_cast<unsigned long>(k));
                for (int a : t.index) {
                    mpz_class fa;
                    mpz_fac_ui(fa.get_mpz_t(), static_cast<unsigned long>(a));
                    mult /= fa;
                }
                CHECK(t.weight == Rational(mult));
            }
        }
}

TEST_CASE("dimension formulas") {
    CHECK(dim_P(3, 3) == 10);
    CHECK(dim_H(3, 3) == 7);
    CHECK(dim_P(2, 2) == 3);
    CHECK(dim_H(2, 2) == 2);
    CHECK(dim_H(1, 2) == 2);
    CHECK(dim_H(4, 3) == 9);
    CHECK(dim_P(4, 3) == 15);
}

TEST_CASE("odd norm powers are sums of two squares") {
    // (x^2 + y^2)^3 = (x(x^2+y^2))^2 + (y(x^2+y^2))^2
    MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
    MPoly s = x * x + y * y;
    SosCertificate cert;
    cert.kind = "rudin";
    cert.target = s.pow(3);
    cert.terms.push_back({Rational(1), x * s, {0}});
    cert.terms.push_back({Rational(1), y * s, {1}});
    CHECK(verify_certificate(cert).ok);
}

TEST_CASE("lift raises the target degree by four and stays valid") {
    for (int n = 2; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k) {
            SosCertificate cert = rudin_certificate(k, n);
            SosCertificate lifted = lift(cert);
            CHECK(std::get<MPoly>(lifted.target).total_degree() ==
                  std::get<MPoly>(cert.target).total_degree() + 4);
            CHECK(verify_certificate(lifted).ok);
            SosCertificate twice = lift(lifted);
            CHECK(verify_certificate(twice).ok);
            CHECK(twice.params["lifted"] == 2);
        }
    SosCertificate rational_cert = ilyushechkin_certificate(diag({Rational(1), Rational(2)}));
    CHECK_THROWS_AS(lift(rational_cert), std::domain_error);
}

TEST_CASE("verifier rejects broken certificates") {
    SosCertificate cert = rudin_certificate(2, 2);
    cert.terms[1].weight += Rational(1);
    CHECK(!verify_certificate(cert).ok);

    SosCertificate neg = rudin_certificate(2, 2);
    neg.terms[0].weight = Rational(-1);
    CHECK(!verify_certificate(neg).ok);

    SosCertificate wrong_target = ilyushechkin_certificate(diag({Rational(1), Rational(2)}));
    wrong_target.target = Rational(5);
    CHECK(!verify_certificate(wrong_target).ok);
}

TEST_CASE("json round-trip preserves certificates byte-for-byte") {
    std::mt19937 rng(95);
    std::vector<SosCertificate> certs;
    certs.push_back(rudin_certificate(3, 3));
    certs.push_back(ilyushechkin_certificate(random_symmetric(rng, 3, 3)));
    certs.push_back(ilyushechkin_certificate(random_hermitian(rng, 2)));
    certs.push_back(symmetric_basis_certificate(random_symmetric(rng, 3, 3)));
    certs.push_back(lift(rudin_certificate(2, 2)));
    {
        PairData g2 = build_pair(PairId::glnr(2));
        certs.push_back(pk_certificate(g2, {Rational(3), Rational(1), Rational(1, 2)}, 1));
    }
    for (const SosCertificate& cert : certs) {
        nlohmann::json j = certificate_to_json(cert);
        std::string dumped = j.dump(2);
        CHECK(dumped == certificate_to_json(cert).dump(2)); // deterministic
        SosCertificate back = certificate_from_json(nlohmann::json::parse(dumped));
        CHECK(verify_certificate(back).ok);
        CHECK(certificate_to_json(back).dump(2) == dumped);
    }
}

TEST_CASE("certificate json rejects malformed payloads") {
    CHECK_THROWS_AS(certificate_from_json(nlohmann::json::object()), std::invalid_argument);
    nlohmann::json j = certificate_to_json(rudin_certificate(2, 2));
    j["terms"][0]["weight"] = 0.5; // floating point is not a rational string
    CHECK_THROWS_AS(certificate_from_json(j), std::invalid_argument);
}

TEST_CASE("matrix json round trip") {
    std::mt19937 rng(96);
    Mat<GaussQ> h = random_hermitian(rng, 3);
    CHECK(matrix_from_json(matrix_to_json(h)) == h);
    CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse("[[1,2],[3,4]]")), std::invalid_argument);
    CHECK_THROWS_AS(coords_from_json(nlohmann::json::parse("[0.5]")), std::invalid_argument);
}

TEST_CASE("threaded construction matches sequential output") {
    std::mt19937 rng(97);
    Mat<Rational> x = random_symmetric(rng, 3, 3);
    nlohmann::json seq = certificate_to_json(ilyushechkin_certificate(x, 1));
    nlohmann::json par = certificate_to_json(ilyushechkin_certificate(x, 8));
    CHECK(seq.dump() == par.dump());
    nlohmann::json seq2 = certificate_to_json(symmetric_basis_certificate(x, 1));
    nlohmann::json par2 = certificate_to_json(symmetric_basis_certificate(x, 5));
    CHECK(seq2.dump() == par2.dump());
}
