#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <rr5/family.hpp>
#include <rr5/store.hpp>

#include <filesystem>
#include <fstream>

using namespace rr5;

namespace {
std::filesystem::path fresh_root(const std::string& tag) {
    auto p = std::filesystem::temp_directory_path() / ("rr5_store_" + tag);
    std::filesystem::remove_all(p);
    return p;
}
}  // namespace

TEST_CASE("round trip of a p_d record") {
    Store st{fresh_root("rt")};
    PdRecord r = seed_record(19);
    r.verified.divides_into = "P1";
    r.verified.h_match = true;
    st.put_pd(r);
    auto got = st.get_pd(19);
    REQUIRE(got.has_value());
    CHECK(got->poly == r.poly);
    CHECK(got->h == 1);
    CHECK(got->provenance == "seed");
    CHECK(got->verified.divides_into == "P1");
    CHECK_FALSE(st.get_pd(23).has_value());
}

TEST_CASE("unverified records are refused without force") {
    Store st{fresh_root("force")};
    PdRecord r = seed_record(19);
    r.verified.invariance = false;  // strip the verification
    CHECK_THROWS_AS(st.put_pd(r), store_error);
    st.put_pd(r, true);
    CHECK(st.get_pd(19).has_value());
}

TEST_CASE("corrupt files are rejected with a schema error") {
    auto root = fresh_root("corrupt");
    Store st{root};
    {
        std::ofstream out(root / "pd" / "7.json");
        out << "{\"kind\":\"pd\",\"d\":\"7\"";  // truncated JSON
    }
    CHECK_THROWS_AS(st.get_pd(7), store_error);
    {
        std::ofstream out(root / "pd" / "11.json");
        // degree does not match 4h
        out << R"({"kind":"pd","d":"11","h":1,"provenance":"x",
                 "verified":{"divides_into":"P2","h_match":true,"invariance":true,
                 "disc_checked":false},
                 "poly":{"var":"x","coeffs":["1","1"]}})";
    }
    CHECK_THROWS_AS(st.get_pd(11), store_error);
}

TEST_CASE("interrupted writes never adopt the temp file") {
    auto root = fresh_root("atomic");
    Store st{root};
    // simulate a crashed writer: stray temp file next to a valid record
    PdRecord r = seed_record(16);
    r.verified.divides_into = "P2";
    r.verified.h_match = true;
    st.put_pd(r);
    {
        std::ofstream out(root / "pd" / "16.json.tmp");
        out << "garbage";
    }
    auto got = st.get_pd(16);
    REQUIRE(got.has_value());
    CHECK(got->poly == seeds::p16());
}

TEST_CASE("tower and hilbert round trips") {
    Store st{fresh_root("tower")};
    TowerPoly r1 = build_R(1);
    st.put_tower(r1);
    auto got = st.get_tower(TowerKind::R, 1);
    REQUIRE(got.has_value());
    CHECK(got->poly == r1.poly);
    CHECK_FALSE(st.get_tower(TowerKind::S, 1).has_value());

    auto h = hilbert_cached(19, &st);
    CHECK(h == UniPoly<Int>::from_coeffs({884736, 1}));
    auto again = st.get_hilbert(19);
    REQUIRE(again.has_value());
    CHECK(*again == h);
}

TEST_CASE("t_d records round trip") {
    Store st{fresh_root("td")};
    TdRecord t = td_from_pd(seed_record(19));
    st.put_td(t);
    auto got = st.get_td(19);
    REQUIRE(got.has_value());
    CHECK(got->poly == t.poly);
    CHECK(got->h == 1);
    TdRecord bad = t;
    bad.relation_checked = false;
    CHECK_THROWS_AS(st.put_td(bad), store_error);
}

TEST_CASE("polynomial JSON round trips, univariate and bivariate") {
    auto p = seeds::p19();
    CHECK(poly_from_json(poly_to_json(p)) == p);
    auto g = seeds::g();
    CHECK(bipoly_from_json(bipoly_to_json(g)) == g);
    // decimal-string coefficients, index = degree
    auto j = poly_to_json(UniPoly<Int>::from_coeffs({-3, 0, 7}));
    CHECK(j["coeffs"][0] == "-3");
    CHECK(j["coeffs"][2] == "7");
    CHECK(j["var"] == "x");
}

TEST_CASE("environment override picks the store root") {
    auto root = fresh_root("env");
    setenv("RR5_STORE", root.c_str(), 1);
    Store st = Store::from_env_or("/nonexistent/should/not/be/used");
    CHECK(st.root() == root);
    unsetenv("RR5_STORE");
    Store st2 = Store::from_env_or(fresh_root("envfb"));
    CHECK(st2.root() != root);
}
