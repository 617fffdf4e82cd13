#include "support.hpp"

#include "rhnn/io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace rhnn;

namespace {

const std::filesystem::path data_dir = RHNN_DATA_DIR;

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("bundled network files") {
    const auto toy = io::load_network_file(data_dir / "toy7.json");
    REQUIRE(std::holds_alternative<IntegerNetwork>(toy.network));
    CHECK(std::get<IntegerNetwork>(toy.network) == test_support::toy());
    CHECK(toy.order() == 7);
    CHECK(toy.bit_order == BitOrder::msb_first);
    CHECK(io::serialize_network_file(toy) == slurp(data_dir / "toy7.json"));

    const auto cj = io::load_network_file(data_dir / "complex_j1.json");
    REQUIRE(cj.is_complex());
    CHECK(std::get<ComplexNetwork>(cj.network).weights()(0, 0) == Complex(0, 1));

    const auto z = io::load_network_file(data_dir / "zero3.json");
    CHECK(z.order() == 3);
}

TEST_CASE("network file round trip") {
    const Network real(Matrix<double>{{0.5, -1.25}, {3, 0}}, {0.0, -0.75});
    const io::NetworkFile f{real, BitOrder::lsb_first};
    const auto text = io::serialize_network_file(f);
    const auto back = io::parse_network_file(text);
    REQUIRE(std::holds_alternative<Network>(back.network));
    CHECK(std::get<Network>(back.network) == real);
    CHECK(back.bit_order == BitOrder::lsb_first);
    CHECK(io::serialize_network_file(back) == text);

    const ComplexNetwork cn(Matrix<Complex>(2, 2, {{1, -2}, {0, 0.5}, {-3, 0}, {0, 1}}));
    const auto ctext = io::serialize_network_file({cn, BitOrder::msb_first});
    const auto cback = io::parse_network_file(ctext);
    REQUIRE(cback.is_complex());
    CHECK(std::get<ComplexNetwork>(cback.network).weights() == cn.weights());

    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        const auto net = test_support::to_network(oracle::random_matrix(1 + trial % 9, 30, rng));
        const io::NetworkFile nf{net, BitOrder::msb_first};
        const auto again = io::parse_network_file(io::serialize_network_file(nf));
        CHECK(std::get<IntegerNetwork>(again.network) == net);
        CHECK(io::network_checksum(again) == io::network_checksum(nf));
    }
}

TEST_CASE("checksum") {
    const auto toy = io::load_network_file(data_dir / "toy7.json");
    const auto sum = io::network_checksum(toy);
    CHECK(sum.rfind("fnv1a64:", 0) == 0);
    CHECK(sum.size() == 8 + 16);
    CHECK(sum == io::network_checksum(io::load_network_file(data_dir / "toy7.json")));
    auto w = test_support::toy().weights();
    w(0, 1) += 1;
    CHECK(io::network_checksum({IntegerNetwork(w), BitOrder::msb_first}) != sum);
}

TEST_CASE("malformed network files") {
    const char* bad[] = {
        "",
        "{",
        "[]",
        R"({"kind":"real","weights":[0]})",
        R"({"n":2,"kind":"real","weights":[0,1,2]})",
        R"({"n":2,"kind":"real","weights":[0,1,2,"x"]})",
        R"({"n":1,"kind":"quaternion","weights":[0]})",
        R"({"n":1,"kind":"complex","weights":[1]})",
        R"({"n":1,"kind":"complex","weights":[[1,2,3]]})",
        R"({"n":1,"kind":"real","bit_order":"middle","weights":[0]})",
        R"({"n":2,"kind":"real","weights":[0,1,2,3],"thresholds":[1]})",
        R"({"n":0,"kind":"real","weights":[]})",
        R"({"n":-2,"kind":"real","weights":[]})",
    };
    for (const char* text : bad) {
        CAPTURE(text);
        CHECK_THROWS_AS(io::parse_network_file(text), io::malformed_input);
    }
    CHECK_THROWS_AS(io::load_network_file(data_dir / "missing.json"), io::malformed_input);
}

TEST_CASE("format_number") {
    CHECK(io::format_number(3.0) == "3");
    CHECK(io::format_number(-0.75) == "-0.75");
    CHECK(io::format_number(std::int64_t{-12}) == "-12");
    CHECK(std::stod(io::format_number(0.1)) == 0.1);
}

TEST_CASE("pattern spec files") {
    const auto spec = io::load_pattern_spec_file(data_dir / "specs" / "mixed4.json");
    CHECK(spec.n == 4);
    REQUIRE(spec.stable.size() == 2);
    REQUIRE(spec.antistable.size() == 1);
    CHECK(spec.stable[1].value == Rational(17, 2));
    CHECK(spec.antistable[0].pattern == BipolarState{1, 1, -1, -1});

    const auto labelled = io::parse_pattern_spec_file(
        R"({"n":4,"stable":[{"pattern":15,"value":"2.5"}],"antistable":[{"pattern":10,"value":1}]})");
    CHECK(labelled.stable[0].pattern == BipolarState{1, 1, 1, 1});
    CHECK(labelled.stable[0].value == Rational(5, 2));
    CHECK(labelled.antistable[0].pattern == BipolarState{1, -1, 1, -1});

    CHECK_THROWS_AS(io::parse_pattern_spec_file(R"({"n":4,"stable":[{"pattern":[1,1],"value":1}]})"),
                    io::malformed_input);
    CHECK_THROWS_AS(io::parse_pattern_spec_file(R"({"n":4,"stable":[{"pattern":[1,1,0,1],"value":1}]})"),
                    io::malformed_input);
    CHECK_THROWS_AS(io::parse_pattern_spec_file(R"({"n":4,"stable":[{"pattern":99,"value":1}]})"),
                    io::malformed_input);
    CHECK_THROWS_AS(io::parse_pattern_spec_file(R"({"n":4,"stable":[{"pattern":1,"value":"x"}]})"),
                    io::malformed_input);
}

TEST_CASE("sweep result serialization") {
    io::SweepResult r;
    r.network_path = "toy7.json";
    r.network_checksum = io::network_checksum({test_support::toy(), BitOrder::msb_first});
    r.n = 7;
    r.kind = "integer";
    r.schedule = {UpdateSchedule::parallel(), ""};
    r.initials = describe(InitialSource{Exhaustive{}});
    r.max_steps = default_max_steps;
    r.inventory = sweep(test_support::toy(), SweepConfig{});
    for (const auto& c : r.inventory.cycles)
        r.profiles.push_back(cycle_energy_profile(test_support::toy(), c, UpdateSchedule::parallel()));
    r.locality = hamming_locality(r.inventory, 7);

    const auto text = io::serialize_sweep_result(r);
    CHECK(nlohmann::json::accept(text));
    const auto summary = io::parse_sweep_result(text);
    CHECK(summary.n == 7);
    REQUIRE(summary.cycles.size() == 6);
    std::size_t total = 0;
    for (std::size_t k = 0; k < 6; ++k) {
        CHECK(summary.cycles[k].labels == r.inventory.cycles[k].states);
        CHECK(summary.cycles[k].length == r.inventory.cycles[k].length());
        CHECK(summary.cycles[k].basin_size == r.inventory.basins[k].size());
        total += summary.cycles[k].basin_size;
    }
    CHECK(total == 128);
    CHECK(summary.unresolved.empty());
}

TEST_CASE("trace CSV agrees with the energy of each listed state") {
    const auto& net = test_support::toy();
    const auto t = iterate_until_cycle(net, test_support::toy_state(0), UpdateSchedule::parallel());
    const auto csv = io::trace_csv(energy_trace(net, t));
    CHECK(csv.rfind("tick,state_decimal,energy\n", 0) == 0);
    CHECK(csv.find('\r') == std::string::npos);
    const auto rows = io::parse_trace_csv(csv);
    REQUIRE(rows.size() == 5);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        CHECK(rows[k].tick == k);
        CHECK(rows[k].label == t.labels[k]);
        CHECK(std::stoll(rows[k].energy) == quadratic_energy(net, test_support::toy_state(rows[k].label)));
    }
    CHECK(rows[3].energy == "-167");
    CHECK_THROWS_AS(io::parse_trace_csv("tick,state\n0,1\n"), io::malformed_input);
}
