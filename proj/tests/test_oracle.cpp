#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "m3rs/colgen.hpp"
#include "m3rs/instgen.hpp"
#include "m3rs/oracle.hpp"
#include "test_util.hpp"

using namespace m3rs;
using namespace testutil;

TEST_CASE("zero tasks") {
    const Instance inst = instance({});
    const auto res = enumerate_optimal(inst, {0.5});
    CHECK(res.objective == 0.0);
    CHECK(res.solution.routes.empty());
}

TEST_CASE("single candidate value") {
    const Instance inst = instance({task(1, 0, 0, 0, 1000, {dose(2)})});
    const auto res = enumerate_optimal(inst, {0.5});
    CHECK(res.objective == doctest::Approx(0.5 + 0.5 * 0.333).epsilon(1e-12));
    CHECK(res.solution.routes.size() == 1);
}

TEST_CASE("guard rejects large instances") {
    GenSpec spec;
    spec.n_tasks = 9;
    spec.n_agents = 2;
    spec.horizon_hours = 0.5;
    spec.seed = 3;
    CHECK_THROWS_AS(enumerate_optimal(generate(spec), {0.5}), std::invalid_argument);
}

TEST_CASE("oracle dominates other solvers and validates") {
    for (std::uint64_t seed = 40; seed < 52; ++seed) {
        const Instance inst = generate(small_spec(seed));
        const Weights w{0.5};
        const auto oracle = enumerate_optimal(inst, w);
        CHECK(check_solution(inst, oracle.solution).ok);
        CHECK(oracle.solution.objective == doctest::Approx(oracle.objective));

        ColgenConfig cfg;
        cfg.seed = seed;
        const auto cg = run_colgen(inst, w, cfg);
        CHECK(check_solution(inst, cg.solution).ok);
        CHECK(cg.solution.objective <= oracle.objective + 1e-9);
    }
}
