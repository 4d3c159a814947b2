#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "vzc/acceptance.hpp"
#include "vzc/json_io.hpp"

using namespace vzc;

TEST_CASE("coarse classes round-trip through json") {
    for (auto& key : enumerate_coarse_classes(2, 2, 3, 2)) {
        json j = coarse_to_json(key.cls);
        CoarseClass back = coarse_from_json(j);
        CHECK(canonical_string(back) == key.canon);
    }
}

TEST_CASE("cache hit and cache miss produce identical results") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "vzc_cache_test";
    fs::remove_all(dir);
    fs::create_directories(dir);
    auto miss = enumerate_cached(dir.string(), 1, 2, 3, 2);
    auto hit = enumerate_cached(dir.string(), 1, 2, 3, 2);
    REQUIRE(miss.size() == hit.size());
    for (size_t i = 0; i < miss.size(); ++i) {
        CHECK(miss[i].canon == hit[i].canon);
        CHECK(miss[i].dim == hit[i].dim);
        CHECK(miss[i].codim == hit[i].codim);
    }
    fs::remove_all(dir);
}

TEST_CASE("cusp table file: the pullback-span example") {
    CuspTable table;
    load_cusp_table(table, std::string(VZC_DATA_DIR) + "/cusp_table_pullback.json");
    CHECK(table.mult(12, 11) == 12);
    CHECK(table.mult(13, 11) == 78);
    // the identity trace equals the multiplicity
    const CuspEntry& e = table.entry(12, 11);
    REQUIRE(e.character == CharacterTag::Custom);
    std::vector<int> id(12, 1);
    CHECK(e.traces.at(id) == Rational(12));

    // the pointed-elliptic series picks the entry up
    HodgeSeries p12 = pure_m1n(table, 12);
    CHECK(p12.coeff(11, Monomial::S(11)) == Rational(12));
    auto big = m1n_maps_pure(table, 11, 1, 2);
    CHECK(big.pure.coeff(11, Monomial::S(11)) == Rational(12));
    CHECK(!big.pure.coeff(13, Monomial::S(11).times(Monomial::L(1))).is_zero());
}

TEST_CASE("custom characters agree with the sign tag on the symmetric stratum") {
    // a custom table whose traces are the sign character must reproduce the
    // built-in sign computation
    CuspTable sign_table;
    CuspTable custom_table;
    CuspEntry e;
    e.mult = 1;
    e.character = CharacterTag::Custom;
    std::vector<int> part;
    std::function<void(int, int)> go = [&](int left, int maxp) {
        if (left == 0) {
            int sgn = 1;
            for (int p : part)
                if (p % 2 == 0) sgn = -sgn;
            std::vector<int> type = part;
            std::sort(type.rbegin(), type.rend());
            e.traces[type] = Rational(sgn);
            return;
        }
        for (int p = std::min(left, maxp); p >= 1; --p) {
            part.push_back(p);
            go(left - p, p);
            part.pop_back();
        }
    };
    go(11, 11);
    custom_table.set(11, 11, e);

    TailsOracle oracle;
    CoarseClass cc = accept::star_class(11, std::vector<int>(11, 1));
    StratumKey key = StratumKey::make(cc, 11);
    CensusContext c1{&sign_table, &oracle, 11};
    CensusContext c2{&custom_table, &oracle, 11};
    auto r1 = stratum_pure(c1, key);
    auto r2 = stratum_pure(c2, key);
    CHECK(r1.invariant_pure == r2.invariant_pure);
}

TEST_CASE("tails table file loads and overrides the budget") {
    TailsOracle small(TailsOracleOptions{3, 6, 6});
    CHECK_THROWS_AS(small.mbar_maps(0, 4, 2), NeedsTableError);
    TailsOracle with_table(TailsOracleOptions{3, 6, 6});
    load_tails_table(with_table, std::string(VZC_DATA_DIR) + "/tails_table_example.json");
    const QPoly& p = with_table.mbar_maps(0, 4, 2);
    CHECK(p.palindromic());
    // matches the built-in oracle at the default budget
    TailsOracle full;
    CHECK(p == full.mbar_maps(0, 4, 2));
}

TEST_CASE("golden divisor files match the enumeration") {
    for (int n = 0; n <= 2; ++n)
        for (int d = 2; d <= 3; ++d) {
            std::string path = std::string(VZC_GOLDEN_DIR) + "/divisors_n" +
                               std::to_string(n) + "_d" + std::to_string(d) + ".json";
            std::ifstream in(path);
            REQUIRE(bool(in));
            json want;
            in >> want;
            std::vector<std::string> got;
            for (auto& k : boundary_divisors(n, 2, d)) got.push_back(k.canon);
            CHECK(want.get<std::vector<std::string>>() == got);
        }
}
