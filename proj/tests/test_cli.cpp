#include <doctest.h>

#include <sstream>

#include "eislat/cli.hpp"
#include "eislat/jsonio.hpp"
#include "eislat/parse.hpp"

using namespace eislat;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("vector parser") {
    LatticePtr l4 = lambda_lattice(4);
    LatticeVector v = parse_vector(l4, "r1+w*r2-th*r3");
    CHECK(v.c[0] == Eis{1});
    CHECK(v.c[1] == omega());
    CHECK(v.c[2] == -theta());
    CHECK(v.c[3].is_zero());
    CHECK(parse_vector(l4, "w^2*r1+r2").c[0] == omega_pow(2));
    CHECK(parse_vector(l4, " - r1 ").c[0] == Eis{-1});
    CHECK(parse_vector(l4, "2*w*r4").c[3] == Eis{0, 2});
    CHECK(parse_vector(l4, "r1+r1").c[0] == Eis{2});
    CHECK_THROWS_AS(parse_vector(l4, "r9"), std::invalid_argument);
    CHECK_THROWS_AS(parse_vector(l4, "x1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_vector(l4, "r1*r2"), std::invalid_argument);
    CHECK(parse_scalar("1+2*w") == Eis{1, 2});
    CHECK(parse_scalar("-th") == -theta());
}

TEST_CASE("shortvec counts") {
    RunResult r = run({"shortvec", "--lattice", "lambda4", "--norm", "3", "--count-only"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["count"] == 240);

    RunResult r6 = run({"shortvec", "--lattice", "lambda4", "--norm", "6", "--count-only",
                        "--orbits"});
    CHECK(r6.code == 0);
    Json j6 = Json::parse(r6.out);
    CHECK(j6["count"] == 2160);
    CHECK(j6["orbit_count"] == 360);

    // byte stability
    RunResult again = run({"shortvec", "--lattice", "lambda4", "--norm", "3", "--count-only"});
    CHECK(again.out == r.out);
}

TEST_CASE("decompose") {
    RunResult r = run({"decompose", "six", "--z", "r1+r2", "--mode", "theta"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["count"] == 3);
    RunResult rp = run({"decompose", "six", "--z", "r1+r2", "--mode", "perp"});
    CHECK(Json::parse(rp.out)["count"] == 4);
}

TEST_CASE("classify") {
    RunResult r = run({"classify", "pair", "--z", "r1+r2", "--r", "r1"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["relative_position"] == "b");
    CHECK(j["rank2_type"] == "d6");
    RunResult ra = run({"classify", "pair", "--z", "r1+r2", "--r", "w^2*r1+r2"});
    CHECK(Json::parse(ra.out)["relative_position"] == "a");
    CHECK(Json::parse(ra.out)["rank2_type"] == "imprimitive-span");
    RunResult rd = run({"classify", "dclass", "--type", "theta"});
    CHECK(rd.code == 0);
    CHECK(Json::parse(rd.out)["nine_lines"] == 4);
}

TEST_CASE("json serialization round trip") {
    LatticePtr l2 = lambda_lattice(2);
    Json j = to_json(l2);
    LatticePtr back = lattice_from_json(j);
    CHECK(back->gram == l2->gram);
    CHECK(lattice_from_json(Json("lambda4"))->rank == 4);
    LatticeVector v = l2->vector({Eis{1, -2}, theta()});
    CHECK(vector_from_json(l2, to_json(v)) == v);
    CHECK(eis_from_json(to_json(theta())) == theta());
    CHECK_THROWS_AS(eis_from_json(Json::array({1})), std::invalid_argument);
}

TEST_CASE("ring and lattice info") {
    RunResult r = run({"ring", "gcd", "--a", "3", "--b", "th"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["gcd"] == Json::array({1, 1}));  // canonical associate of theta
    RunResult ru = run({"ring", "units"});
    CHECK(Json::parse(ru.out)["units"].size() == 6);
    RunResult rl = run({"lattice", "info", "--name", "lambda4"});
    Json jl = Json::parse(rl.out);
    CHECK(jl["rank"] == 4);
    CHECK(jl["discriminant"] == 9);
    CHECK(jl["signature"] == Json::array({4, 0, 0}));
}

TEST_CASE("git and kodaira") {
    RunResult r = run({"git", "stability", "--f0", "[0,0,0,0,1]", "--f1", "[1,0,0,0,0,0,0]"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["pair_stability"] == "stable");
    CHECK(j["divisor_stability"] == "stable");

    RunResult rj = run({"git", "j", "--lambda", "-1", "--mu", "1"});
    CHECK(Json::parse(rj.out)["j"] == Json::array({1, 0}));

    RunResult rk = run({"kodaira", "type", "--j", "inf", "--deg", "2", "--chi", "2"});
    CHECK(Json::parse(rk.out)["type"] == "I2");
    RunResult re = run({"kodaira", "euler", "--type", "II*"});
    CHECK(Json::parse(re.out)["euler"] == 10);
    CHECK(Json::parse(re.out)["root_rank"] == 8);
    RunResult rn = run({"kodaira", "enumerate", "--count-only"});
    CHECK(rn.code == 0);
    CHECK(Json::parse(rn.out)["count"].get<size_t>() > 0);
}

TEST_CASE("verification subcommands") {
    // pham verify reports honestly: every structural identity holds, but the
    // integral monodromy is not of order 6 (its 6th power is a rank-one
    // transvection), so the ledger exits 1 with that single red entry.
    RunResult rp = run({"pham", "verify"});
    CHECK(rp.code == 1);
    Json jp = Json::parse(rp.out);
    CHECK(jp["all_pass"] == false);
    CHECK(jp["braid"]["braid_relations"] == true);
    CHECK(jp["braid"]["r_is_tau_eta"] == true);
    CHECK(jp["eisenstein_image"]["u_equals_2theta_z"] == true);
    CHECK(jp["null_vector"]["isotropic"] == true);
    CHECK(jp["normalized_to_chain_gram"] == true);
    CHECK(jp["integral_module"]["rank"] == 50);
    CHECK(jp["integral_module"]["t6_identity"] == false);
    CHECK(jp["integral_module"]["t3_nontrivial"] == true);
    CHECK(jp["integral_module"]["t6_is_rank1_square_zero_transvection"] == true);

    RunResult rpi = run({"picard", "verify"});
    CHECK(rpi.code == 0);
    CHECK(Json::parse(rpi.out)["cartan_is_affine_e8"] == true);
}

TEST_CASE("error handling") {
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"shortvec", "--bogus"}).code == 2);
    CHECK(run({"shortvec", "--lattice", "lambda4", "--norm", "4"}).code == 2);  // not 3Z
    CHECK(run({"classify", "pair", "--z", "r1+r2", "--r", "zzz"}).code == 2);
    CHECK(run({"decompose", "six", "--z", "r1"}).code == 2);  // not a 6-vector
    CHECK(run({}).code == 2);
    RunResult bad = run({"kodaira", "type", "--j", "0", "--deg", "1", "--chi", "3"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("error") != std::string::npos);
}

}  // TEST_SUITE
