#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "seatstorm/cli_io.hpp"

using namespace seatstorm;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("/tmp/seatstorm_test_" + name) {
        std::ofstream os(path);
        os << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

const char* kRunningExampleCsv =
    "district_id,party,votes\n"
    "D1,P1,1104\n"
    "D1,P2,363\n"
    "D1,P3,355\n"
    "D1,P4,178\n"
    "D1,P5,52\n";

}  // namespace

TEST_CASE("load a single-district election") {
    TempFile f("ex1.csv", kRunningExampleCsv);
    LoadOptions options;
    options.threshold = ThresholdSpec::absolute(100);
    options.default_seats = 6;
    ElectionData data = load_election(f.path, options);
    REQUIRE(data.election.districts.size() == 1);
    CHECK(data.election.districts[0].profile.counts ==
          std::vector<Votes>{1104, 363, 355, 178, 52});
    CHECK(data.election.districts[0].threshold == 100);
    CHECK(data.election.districts[0].seats == 6);
    CHECK(data.parties[0].name == "P1");
    CHECK(data.parties[4].index == 5);
}

TEST_CASE("round-trip: write and reload") {
    TempFile f("two.csv",
               "district_id,party,votes\n"
               "north,alpha,10\n"
               "north,beta,6\n"
               "south,beta,4\n"
               "south,alpha,2\n"
               "south,gamma,1\n");
    LoadOptions options;
    options.seats_by_district = {{"north", 2}, {"south", 3}};
    ElectionData data = load_election(f.path, options);
    REQUIRE(data.election.districts.size() == 2);
    // gamma never appears in north: zero there
    CHECK(data.election.districts[0].profile.counts == std::vector<Votes>{10, 6, 0});
    CHECK(data.election.districts[1].profile.counts == std::vector<Votes>{2, 4, 1});

    std::ostringstream os;
    write_election_csv(data, os);
    TempFile g("two_rt.csv", os.str());
    ElectionData again = load_election(g.path, options);
    CHECK(again.district_ids == data.district_ids);
    REQUIRE(again.parties.size() == data.parties.size());
    for (std::size_t i = 0; i < data.parties.size(); ++i)
        CHECK(again.parties[i].name == data.parties[i].name);
    for (std::size_t j = 0; j < data.election.districts.size(); ++j)
        CHECK(again.election.districts[j].profile.counts ==
              data.election.districts[j].profile.counts);
}

TEST_CASE("parse errors carry line numbers") {
    TempFile f("bad.csv",
               "district_id,party,votes\n"
               "D1,P1,10\n"
               "D1,P2,-3\n");
    try {
        load_election(f.path, LoadOptions{});
        FAIL("expected InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }

    TempFile empty("empty.csv", "");
    CHECK_THROWS_AS(load_election(empty.path, LoadOptions{}), InputError);

    TempFile header_only("h.csv", "district_id,party,votes\n");
    CHECK_THROWS_AS(load_election(header_only.path, LoadOptions{}), InputError);

    TempFile bad_header("bh.csv", "region,party,votes\nD1,P1,5\n");
    CHECK_THROWS_AS(load_election(bad_header.path, LoadOptions{}), InputError);
}

TEST_CASE("tie-break override reorders parties") {
    TempFile f("order.csv",
               "district_id,party,votes\n"
               "D1,alpha,5\n"
               "D1,beta,9\n");
    LoadOptions options;
    options.tie_break = {"beta", "alpha"};
    ElectionData data = load_election(f.path, options);
    CHECK(data.parties[0].name == "beta");
    CHECK(data.election.districts[0].profile.counts == std::vector<Votes>{9, 5});

    options.tie_break = {"beta"};
    CHECK_THROWS_AS(load_election(f.path, options), InputError);
    options.tie_break = {"beta", "nobody"};
    CHECK_THROWS_AS(load_election(f.path, options), InputError);
}

TEST_CASE("ranked ballots load and validate") {
    TempFile f("ex1.csv", kRunningExampleCsv);
    TempFile b("ex1_ballots.csv",
               "district_id,multiplicity,ranking\n"
               "D1,604,P1>P2>P3>P5>P4\n"
               "D1,215,P2>P1>P5>P4>P3\n"
               "D1,355,P3>P2>P1>P4>P5\n"
               "D1,300,P1>P5>P3>P2>P4\n"
               "D1,178,P4>P2>P3>P1>P5\n"
               "D1,148,P2>P4>P3>P1>P5\n"
               "D1,200,P1>P3>P4>P5>P2\n"
               "D1,52,P5>P2>P3>P4>P1\n");
    LoadOptions options;
    options.threshold = ThresholdSpec::absolute(100);
    options.default_seats = 6;
    ElectionData data = load_election(f.path, options);
    RankedElection ranked = load_ranked_ballots(b.path, data, options);
    REQUIRE(ranked.districts.size() == 1);
    CHECK(ranked.total_votes() == 2052);
    SupportAllocation sigma =
        second_chance_support(ranked.districts[0].profile, ranked.districts[0].threshold);
    CHECK(sigma.support == std::vector<Votes>{1104, 415, 355, 178, 0});

    TempFile bad("bad_ballots.csv",
                 "district_id,multiplicity,ranking\n"
                 "D1,10,P1>P2\n");
    CHECK_THROWS_AS(load_ranked_ballots(bad.path, data, options), InputError);
}

TEST_CASE("config files are strict about keys") {
    TempFile cfg("cfg.json", R"({"method": "lrm", "threshold": "0.05", "seats": 6})");
    RunConfig c = parse_config_file(cfg.path);
    CHECK(*c.method == "lrm");
    CHECK(*c.threshold == "0.05");
    CHECK(*c.default_seats == 6);

    TempFile bad("badcfg.json", R"({"methd": "lrm"})");
    CHECK_THROWS_AS(parse_config_file(bad.path), InputError);

    TempFile notjson("notjson.json", "not json at all");
    CHECK_THROWS_AS(parse_config_file(notjson.path), InputError);
}

TEST_CASE("cli apportion reproduces the running example") {
    TempFile f("ex1_cli.csv", kRunningExampleCsv);
    CHECK(cli_dispatch({"apportion", "--election", f.path, "--method", "dhondt", "--threshold",
                        "abs:100", "--seats", "6"}) == 0);
}

TEST_CASE("cli bribe exit codes") {
    TempFile f("ex1_cli2.csv", kRunningExampleCsv);
    // P1 already holds four seats: YES at budget zero
    CHECK(cli_dispatch({"bribe", "--election", f.path, "--method", "dhondt", "--threshold",
                        "abs:100", "--seats", "6", "--star", "P1", "--direction", "constructive",
                        "--objective", "seats", "--l", "4", "--k", "0", "--assert-yes"}) == 0);
    // five seats need moves: NO under --assert-yes exits 1
    CHECK(cli_dispatch({"bribe", "--election", f.path, "--method", "dhondt", "--threshold",
                        "abs:100", "--seats", "6", "--star", "P1", "--direction", "constructive",
                        "--objective", "seats", "--l", "5", "--k", "0", "--assert-yes"}) == 1);
    CHECK(cli_dispatch({"bribe", "--election", "/nonexistent.csv", "--star", "P1"}) == 2);
    CHECK(cli_dispatch({"bribe", "--election", f.path, "--star", "P1", "--bogus-flag"}) == 2);
}

TEST_CASE("cli min-budget and sweep write outputs") {
    TempFile f("ex1_cli3.csv", kRunningExampleCsv);
    CHECK(cli_dispatch({"min-budget", "--election", f.path, "--method", "fptp", "--seats", "6",
                        "--star", "P2", "--direction", "constructive", "--objective",
                        "winner"}) == 0);

    TempFile small("small.csv",
                   "district_id,party,votes\n"
                   "D1,A,60\n"
                   "D1,B,30\n"
                   "D1,C,10\n");
    std::string out = "/tmp/seatstorm_test_sweep.dat";
    CHECK(cli_dispatch({"sweep", "--election", small.path, "--method", "dhondt", "--seats", "5",
                        "--star", "A", "--budget-fraction", "0.05", "--out", out}) == 0);
    std::ifstream is(out);
    REQUIRE(is.good());
    std::string line;
    int lines = 0;
    while (std::getline(is, line)) ++lines;
    CHECK(lines == 241);
    std::remove(out.c_str());
}
