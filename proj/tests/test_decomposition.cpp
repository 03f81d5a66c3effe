#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "werner/certificate_json.hpp"
#include "werner/decomposition.hpp"
#include "werner/errors.hpp"
#include "werner/partial_transpose.hpp"
#include "werner/spectra.hpp"

using namespace werner;

namespace {

int count_twos(const IndexTuple& t) {
    int c = 0;
    for (int x : t) c += (x == 2 || x == -2) ? 1 : 0;
    return c;
}

int count_negatives(const IndexTuple& t) {
    int c = 0;
    for (int x : t) c += x < 0 ? 1 : 0;
    return c;
}

// All 4^d tuples, admissible or not.
std::vector<IndexTuple> all_tuples(int d) {
    static constexpr int kAlphabet[4] = {1, -1, 2, -2};
    std::vector<IndexTuple> out;
    IndexTuple tuple(static_cast<std::size_t>(d));
    const std::size_t total = std::size_t{1} << (2 * d);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t rest = code;
        for (int k = d - 1; k >= 0; --k) {
            tuple[static_cast<std::size_t>(k)] = kAlphabet[rest & 3];
            rest >>= 2;
        }
        out.push_back(tuple);
    }
    return out;
}

DenseMatrix projector_product(const IndexTuple& tuple) {
    DenseMatrix out = projector(tuple.front());
    for (std::size_t k = 1; k < tuple.size(); ++k) out = kron(out, projector(tuple[k]));
    return out;
}

// Weighted sum of projector products over all tuples, with a per-tuple
// complex coefficient. This is the expanded form the generating products
// must reproduce.
template <typename CoefFn>
DenseMatrix selector_sum(int d, CoefFn&& coefficient) {
    DenseMatrix sum(std::size_t{1} << d);
    for (const IndexTuple& tuple : all_tuples(d)) {
        DenseMatrix term = projector_product(tuple);
        term *= coefficient(tuple);
        sum += term;
    }
    return sum;
}

}  // namespace

TEST_CASE("admissibility rules on two qubits") {
    CHECK(index_admissible({1, 1}));
    CHECK_FALSE(index_admissible({1, -1}));
    CHECK(index_admissible({2, -2}));
    CHECK_FALSE(index_admissible({2, 2}));
    CHECK(index_admissible({-1, -1}));
    CHECK(index_admissible({-2, 2}));
    CHECK_FALSE(index_admissible({-2, -2}));
    CHECK_FALSE(index_admissible({2, 1}));  // odd count of +-2

    CHECK_THROWS_AS(index_admissible({1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(index_admissible({3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(index_admissible({1, -5}), std::invalid_argument);
}

TEST_CASE("enumeration matches a brute-force scan of the rules") {
    for (int d = 2; d <= 6; ++d) {
        const std::vector<IndexTuple> admissible = enumerate_terms(d);
        std::size_t expected = 0;
        for (const IndexTuple& tuple : all_tuples(d)) {
            const int twos = count_twos(tuple);
            const int negatives = count_negatives(tuple);
            bool ok = twos % 2 == 0;
            if (ok && twos % 4 == 0) ok = negatives % 2 == 0;
            if (ok && twos % 4 == 2) ok = negatives % 2 == 1;
            if (ok) ++expected;
        }
        CHECK(admissible.size() == expected);
        CHECK(admissible.size() == (std::size_t{1} << (2 * (d - 1))));
    }
}

TEST_CASE("two-qubit enumeration lists exactly the four admissible tuples") {
    const std::vector<IndexTuple> terms = enumerate_terms(2);
    REQUIRE(terms.size() == 4);
    const std::vector<IndexTuple> expected = {
        {1, 1}, {-1, -1}, {2, -2}, {-2, 2}};
    for (const IndexTuple& want : expected)
        CHECK(std::count(terms.begin(), terms.end(), want) == 1);
}

TEST_CASE("count law holds up to the enumeration cap") {
    for (int d = 2; d <= 10; ++d)
        CHECK(enumerate_terms(d).size() == (std::size_t{1} << (2 * (d - 1))));
    CHECK_THROWS_AS(enumerate_terms(13), CapacityError);
    CHECK_THROWS_AS(enumerate_terms(1), std::invalid_argument);
}

TEST_CASE("decomposition weights") {
    const std::vector<DecompositionTerm> d2 = build_decomposition(2);
    REQUIRE(d2.size() == 6);
    for (const DecompositionTerm& term : d2) CHECK(term.weight == Rational(1, 6));

    const std::vector<DecompositionTerm> d3 = build_decomposition(3);
    REQUIRE(d3.size() == 18);
    CHECK(d3[0].weight == Rational(1, 10));  // poles first
    CHECK(d3[1].weight == Rational(1, 10));
    for (std::size_t k = 2; k < d3.size(); ++k) CHECK(d3[k].weight == Rational(1, 20));

    // Trace identity: weights sum to 1 exactly, for all assembly sizes.
    for (int d = 2; d <= 7; ++d) {
        Rational sum = 0;
        for (const DecompositionTerm& term : build_decomposition(d)) sum += term.weight;
        CHECK(sum == 1);
        // Equivalently 4^(d-1) * eps_c/2^(d-1) + 2 * eps_c/2 = 1.
        const Rational eps_c = critical_epsilon(d);
        CHECK(pow_int(4, d - 1) * (eps_c / pow_int(2, d - 1)) + 2 * (eps_c / 2) == 1);
    }
}

TEST_CASE("a single pole term assembles to a corner projector") {
    DecompositionTerm pole{Rational(1), {3, 3}, {projector(3), projector(3)}};
    const DenseMatrix m = assemble({pole});
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(m(i, j) == (i == 0 && j == 0 ? Complex{1.0, 0.0} : Complex{0.0, 0.0}));
}

TEST_CASE("assembled ensemble reproduces the critical mixture") {
    for (int d = 2; d <= 7; ++d) {
        const SystemShape shape(2, d);
        const double eps_c = to_double(critical_epsilon(d));
        const DenseMatrix target = build_werner(shape, eps_c);
        CHECK(max_abs_diff(assemble(build_decomposition(d)), target) <= 1e-12);
    }
}

TEST_CASE("generating products collapse to their closed forms") {
    for (int d : {2, 3, 4}) {
        const GeneratingProducts products = generating_products(d);
        const std::size_t dim = std::size_t{1} << d;

        DenseMatrix identity_scaled = DenseMatrix::identity(dim);
        identity_scaled *= Complex{std::pow(2.0, d), 0.0};
        CHECK(max_abs_diff(products.t0, identity_scaled) <= 1e-13);
        CHECK(products.t1.max_abs() <= 1e-13);

        DenseMatrix raising = pauli_sigma(1);
        raising += Complex{0.0, 1.0} * pauli_sigma(2);
        DenseMatrix lowering = pauli_sigma(1);
        lowering += Complex{0.0, -1.0} * pauli_sigma(2);
        CHECK(max_abs_diff(products.s2, kron_power(raising, d)) <= 1e-13);
        CHECK(max_abs_diff(products.s3, kron_power(lowering, d)) <= 1e-13);

        // s2 and s3 are entrywise complex conjugates.
        double dev = 0.0;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                dev = std::max(dev, std::abs(products.s2(i, j) - std::conj(products.s3(i, j))));
        CHECK(dev <= 1e-13);
    }
}

TEST_CASE("generating products equal their sector-sum expansions for three qubits") {
    const int d = 3;
    const GeneratingProducts products = generating_products(d);
    const Complex i{0.0, 1.0};

    auto twos_power = [&](const IndexTuple& t, Complex base) {
        Complex c{1.0, 0.0};
        for (int k = 0; k < count_twos(t); ++k) c *= base;
        return c;
    };
    auto sign_negatives = [&](const IndexTuple& t) {
        return count_negatives(t) % 2 == 0 ? 1.0 : -1.0;
    };

    CHECK(max_abs_diff(products.t0, selector_sum(d, [&](const IndexTuple&) {
              return Complex{1.0, 0.0};
          })) <= 1e-13);
    CHECK(max_abs_diff(products.t1, selector_sum(d, [&](const IndexTuple& t) {
              return twos_power(t, Complex{-1.0, 0.0});
          })) <= 1e-13);
    CHECK(max_abs_diff(products.t2, selector_sum(d, [&](const IndexTuple& t) {
              return twos_power(t, i);
          })) <= 1e-13);
    CHECK(max_abs_diff(products.t3, selector_sum(d, [&](const IndexTuple& t) {
              return twos_power(t, -i);
          })) <= 1e-13);
    CHECK(max_abs_diff(products.s0, selector_sum(d, [&](const IndexTuple& t) {
              return Complex{sign_negatives(t), 0.0};
          })) <= 1e-13);
    CHECK(max_abs_diff(products.s1, selector_sum(d, [&](const IndexTuple& t) {
              return sign_negatives(t) * twos_power(t, Complex{-1.0, 0.0});
          })) <= 1e-13);
    CHECK(max_abs_diff(products.s2, selector_sum(d, [&](const IndexTuple& t) {
              return sign_negatives(t) * twos_power(t, i);
          })) <= 1e-13);
    CHECK(max_abs_diff(products.s3, selector_sum(d, [&](const IndexTuple& t) {
              return sign_negatives(t) * twos_power(t, -i);
          })) <= 1e-13);
}

TEST_CASE("half-sum combinations pick out the negative-count parity sectors") {
    const int d = 3;
    const GeneratingProducts products = generating_products(d);

    DenseMatrix even = products.t0;
    even += products.s0;
    even *= Complex{0.5, 0.0};
    DenseMatrix odd = products.t0;
    odd -= products.s0;
    odd *= Complex{0.5, 0.0};

    const DenseMatrix even_expected = selector_sum(d, [&](const IndexTuple& t) {
        return Complex{count_negatives(t) % 2 == 0 ? 1.0 : 0.0, 0.0};
    });
    const DenseMatrix odd_expected = selector_sum(d, [&](const IndexTuple& t) {
        return Complex{count_negatives(t) % 2 == 1 ? 1.0 : 0.0, 0.0};
    });
    CHECK(max_abs_diff(even, even_expected) <= 1e-13);
    CHECK(max_abs_diff(odd, odd_expected) <= 1e-13);
}

TEST_CASE("quarter-sum combinations reduce the admissible sum to four products") {
    // The sum over admissible tuples equals the even-parity part of the
    // 0 mod 4 sector plus the odd-parity part of the 2 mod 4 sector; in
    // terms of the generating products that is (t0 + t1 + s2 + s3)/4.
    const int d = 3;
    const GeneratingProducts products = generating_products(d);

    auto combine = [](const DenseMatrix& a, const DenseMatrix& b, const DenseMatrix& c,
                      const DenseMatrix& e, Complex sc, Complex se) {
        DenseMatrix out = a;
        out += b;
        DenseMatrix third = c;
        third *= sc;
        out += third;
        DenseMatrix fourth = e;
        fourth *= se;
        out += fourth;
        out *= Complex{0.25, 0.0};
        return out;
    };

    auto r_even = [&](const DenseMatrix& t, const DenseMatrix& s) {
        DenseMatrix out = t;
        out += s;
        out *= Complex{0.5, 0.0};
        return out;
    };
    auto r_odd = [&](const DenseMatrix& t, const DenseMatrix& s) {
        DenseMatrix out = t;
        out -= s;
        out *= Complex{0.5, 0.0};
        return out;
    };

    const DenseMatrix even_sector =
        combine(r_even(products.t0, products.s0), r_even(products.t1, products.s1),
                r_even(products.t2, products.s2), r_even(products.t3, products.s3),
                Complex{1.0, 0.0}, Complex{1.0, 0.0});
    const DenseMatrix odd_sector =
        combine(r_odd(products.t0, products.s0), r_odd(products.t1, products.s1),
                r_odd(products.t2, products.s2), r_odd(products.t3, products.s3),
                Complex{-1.0, 0.0}, Complex{-1.0, 0.0});

    // Each quarter-sum reproduces its sector, by direct enumeration.
    const DenseMatrix even_sector_expected = selector_sum(d, [&](const IndexTuple& t) {
        const bool in = count_twos(t) % 4 == 0 && count_negatives(t) % 2 == 0;
        return Complex{in ? 1.0 : 0.0, 0.0};
    });
    const DenseMatrix odd_sector_expected = selector_sum(d, [&](const IndexTuple& t) {
        const bool in = count_twos(t) % 2 == 0 && count_twos(t) % 4 != 0 &&
                        count_negatives(t) % 2 == 1;
        return Complex{in ? 1.0 : 0.0, 0.0};
    });
    CHECK(max_abs_diff(even_sector, even_sector_expected) <= 1e-13);
    CHECK(max_abs_diff(odd_sector, odd_sector_expected) <= 1e-13);

    // Oracle: direct enumeration of the admissible tuples.
    const DenseMatrix admissible_sum = selector_sum(3, [&](const IndexTuple& t) {
        return Complex{index_admissible(t) ? 1.0 : 0.0, 0.0};
    });
    DenseMatrix via_sectors = even_sector;
    via_sectors += odd_sector;
    CHECK(max_abs_diff(via_sectors, admissible_sum) <= 1e-13);

    // And the simplified four-product form.
    DenseMatrix simplified = products.t0;
    simplified += products.t1;
    simplified += products.s2;
    simplified += products.s3;
    simplified *= Complex{0.25, 0.0};
    CHECK(max_abs_diff(simplified, admissible_sum) <= 1e-13);
}

TEST_CASE("generating expansion equals the enumeration route and the state") {
    for (int d = 2; d <= 7; ++d) {
        const DenseMatrix generated = generating_expansion(d);
        const DenseMatrix enumerated = assemble(build_decomposition(d));
        CHECK(max_abs_diff(generated, enumerated) <= 1e-12);
        const DenseMatrix target =
            build_werner(SystemShape(2, d), to_double(critical_epsilon(d)));
        CHECK(max_abs_diff(generated, target) <= 1e-12);
    }
}

TEST_CASE("assembled ensemble is PPT, with a zero eigenvalue on single sites") {
    for (int d = 2; d <= 5; ++d) {
        const SystemShape shape(2, d);
        const DenseMatrix rho = assemble(build_decomposition(d));
        for (int size = 1; size < d; ++size) {
            // Every subset of each size, by bitmask scan.
            for (unsigned bits = 1; bits < (1u << d); ++bits) {
                if (static_cast<int>(std::popcount(bits)) != size) continue;
                std::vector<int> members;
                for (int k = 0; k < d; ++k)
                    if (bits & (1u << k)) members.push_back(k);
                const BipartitionMask mask(members, d);
                const double min_eig =
                    hermitian_spectrum(partial_transpose(rho, shape, mask)).min_eigenvalue();
                CHECK(min_eig >= -1e-10);
                if (size == 1) CHECK(std::abs(min_eig) <= 1e-10);
            }
        }
    }
}

TEST_CASE("certificate verification accepts the built ensemble") {
    for (int d : {2, 3, 6}) {
        const CertificateReport report = verify_separability_certificate(d);
        CHECK(report.d == d);
        CHECK(report.epsilon_c == critical_epsilon(d));
        CHECK(report.terms.size() == (std::size_t{1} << (2 * (d - 1))) + 2);
        CHECK(report.max_deviation <= 1e-12);
    }
    CHECK(verify_separability_certificate(2).max_deviation <= 1e-15);
}

TEST_CASE("certificate verification rejects tampered ensembles") {
    std::vector<DecompositionTerm> terms = build_decomposition(2);
    terms[3].weight = -terms[3].weight;
    CHECK_THROWS_AS(check_certificate(2, terms), CertificateError);
    try {
        check_certificate(2, build_decomposition(2));
    } catch (...) {
        FAIL("untampered certificate must not throw");
    }

    // Weight tampering that keeps positivity but breaks normalization.
    std::vector<DecompositionTerm> skewed = build_decomposition(2);
    skewed[0].weight *= 2;
    CHECK_THROWS_AS(check_certificate(2, skewed), CertificateError);

    // Factor tampering: not idempotent.
    std::vector<DecompositionTerm> bent = build_decomposition(2);
    bent[1].factors[0] *= Complex{1.0 + 1e-6, 0.0};
    CHECK_THROWS_AS(check_certificate(2, bent), CertificateError);

    // The error carries the failing term.
    try {
        std::vector<DecompositionTerm> again = build_decomposition(2);
        again[3].weight = -again[3].weight;
        check_certificate(2, again);
        FAIL("expected CertificateError");
    } catch (const CertificateError& err) {
        CHECK(err.term_index() == 3);
    }
}

TEST_CASE("certificate JSON export") {
    const Json doc = certificate_json(verify_separability_certificate(2));
    CHECK(doc["d"] == 2);
    CHECK(doc["epsilon_c"] == "1/3");
    CHECK(doc["term_count"] == 6);
    CHECK(doc["terms"].size() == 6);
    CHECK(doc["max_deviation"].get<double>() <= 1e-12);
    const Json& first = doc["terms"][0];
    CHECK(first["weight"] == "1/6");
    CHECK(first["label"].size() == 2);
    CHECK(first["factors"].size() == 2);
    CHECK(first["factors"][0].size() == 2);        // rows
    CHECK(first["factors"][0][0].size() == 2);     // entries per row
    CHECK(first["factors"][0][0][0].size() == 2);  // [re, im]

    const Json listing = enumeration_json(8);
    CHECK(listing["d"] == 8);
    CHECK(listing["term_count"] == 16384 + 2);
    CHECK_FALSE(listing["terms"][0].contains("factors"));
}

TEST_CASE("assembly-size guards") {
    CHECK_THROWS_AS(build_decomposition(8), CapacityError);
    CHECK_THROWS_AS(generating_products(8), CapacityError);
    CHECK_THROWS_AS(build_decomposition(1), std::invalid_argument);
}
