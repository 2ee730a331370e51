#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mapenum/render.hpp"

#include <cstdlib>
#include <filesystem>

using namespace mapenum;

TEST_CASE("csv and json rendering are deterministic and exact") {
    std::vector<CountRow> rows{{3, 0, 2, Rat(12), "closed-form", "raw"},
                               {3, 0, 4, Rat(180138816, 5), "closed-form", "raw"}};
    std::string csv = csv_counts(rows);
    CHECK(csv == csv_counts(rows));
    CHECK(csv.find("3,0,4,180138816,5,closed-form") != std::string::npos);
    std::string js = json_counts(rows);
    CHECK(js.find("\"180138816/5\"") != std::string::npos);
}

TEST_CASE("series json uses p/q strings") {
    Series s(Var::xi2, 2, {Rat(0), Rat(3, 2), Rat(189)});
    std::string js = json_series("e1", s);
    CHECK(js.find("\"3/2\"") != std::string::npos);
    CHECK(js.find("\"189\"") != std::string::npos);
}

TEST_CASE("svg output renders finite documents with axes") {
    std::vector<std::pair<Rat, Rat>> pts{{Rat(0), Rat(0)}, {Rat(1), Rat(1, 9)}, {Rat(2), Rat(0)}};
    std::string svg = svg_curve(pts, {{Rat(1), Rat(1, 9)}}, 6);
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("polyline") != std::string::npos);
    CHECK(svg.find("circle") != std::string::npos);
    // empty request still yields a document with axes
    std::string empty = svg_curve({}, {}, 6);
    CHECK(empty.find("<line") != std::string::npos);
}

TEST_CASE("cache round-trips byte-identically and uses stable keys") {
    std::string dir = std::filesystem::temp_directory_path() / "mapenum-test-cache";
    std::filesystem::remove_all(dir);
    Cache cache(dir);
    CHECK(!cache.load("some-key"));
    std::string payload = "valence,genus\n3,0\n";
    cache.store("some-key", payload);
    auto back = cache.load("some-key");
    REQUIRE(back.has_value());
    CHECK(*back == payload);
    CHECK(content_hash("a") != content_hash("b"));
    CHECK(content_hash("table|j=3") == content_hash("table|j=3"));
    std::filesystem::remove_all(dir);
}
