#include <doctest.h>

#include <cstdlib>

#include "tmzv/properties.hpp"
#include "tmzv/sweep.hpp"

using namespace tmzv;

TEST_SUITE("sweep") {

TEST_CASE("index enumeration") {
  CHECK(all_indices(0, 0, 3).size() == 1);
  CHECK(all_indices(1, 2, 3).size() == 12);
  CHECK(all_indices(0, 3, 3).size() == 40);
  const auto two = all_indices(2, 2, 2);
  REQUIRE(two.size() == 4);
  CHECK(two.front() == Index{1, 1});
  CHECK(two.back() == Index{2, 2});
}

TEST_CASE("standard sweep sizes") {
  SweepOptions opt;
  CHECK(sweep_tasks(Statement::recursive_form, opt).size() == 27 * 16);
  CHECK(sweep_tasks(Statement::closed_form, opt).size() == 8 * 16);
  CHECK(sweep_tasks(Statement::power_product, opt).size() == 3 * 45);
  CHECK(sweep_tasks(Statement::head_power, opt).size() == 2 * 2 * 3 * 5);
  CHECK(sweep_tasks(Statement::alternating_sum, opt).size() == 16);
  CHECK(sweep_tasks(Statement::combinatorial, opt).size() == 1600);
  CHECK(sweep_tasks(Statement::split_formula, opt).size() == 4080);
  CHECK(sweep_tasks(Statement::factorial_identity, opt).size() == 6);
  CHECK(sweep_tasks(Statement::zeta8_identity, opt).size() == 3);
  CHECK(sweep_tasks(Statement::numeric_decomposition, opt).size() == 8 * 4 * 3);
}

TEST_CASE("threaded runs keep parameter order") {
  SweepOptions opt;
  opt.max = 2;
  opt.cutoff = 1000;
  const auto serial = run_sweep(Statement::head_power, opt);
  opt.threads = 4;
  const auto parallel = run_sweep(Statement::head_power, opt);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].params == parallel[i].params);
    CHECK(parallel[i].pass);
  }
  CHECK(reports_to_json(serial) == reports_to_json(parallel));
}

TEST_CASE("exceptions from tasks reach the caller") {
  std::vector<std::function<VerifyReport()>> tasks(8, [] { return check_factorial_identity(2); });
  tasks[5] = [] { return check_factorial_identity(3); };
  CHECK_THROWS_AS(run_tasks(tasks, 3), std::invalid_argument);
  CHECK_THROWS_AS(run_tasks(tasks, 1), std::invalid_argument);
}

TEST_CASE("thread count from the environment") {
  setenv("TMZV_THREADS", "3", 1);
  CHECK(threads_from_env(1) == 3);
  setenv("TMZV_THREADS", "zero", 1);
  CHECK(threads_from_env(2) == 2);
  setenv("TMZV_THREADS", "-4", 1);
  CHECK(threads_from_env(1) == 1);
  unsetenv("TMZV_THREADS");
  CHECK(threads_from_env(5) == 5);
}

TEST_CASE("report text") {
  const auto pass = check_factorial_identity(4);
  CHECK(report_to_text(pass) == "PASS factorial-identity k=4");
  VerifyReport fail{Statement::zeta8_identity, {{"l", 1}}, false, ScalarWitness{"1/2", "1/3"}};
  CHECK(report_to_text(fail) == "FAIL zeta8 l=1\n  lhs: 1/2\n  rhs: 1/3");
}

TEST_CASE("property suites are deterministic per seed") {
  const auto a = run_property("stuffle-commutativity", 3, 50);
  const auto b = run_property("stuffle-commutativity", 3, 50);
  CHECK(a.pass());
  CHECK(a.cases == b.cases);
  CHECK(property_names().size() == 9);
  CHECK_THROWS(run_property("no-such-suite", 1, 1));
}

}
