#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include "modlie/roots.hpp"
#include "modlie/util.hpp"
using namespace modlie;

TEST_CASE("root counts") {
  CHECK(build_root_system('A', 1).size() == 2);
  CHECK(build_root_system('A', 2).size() == 6);
  CHECK(build_root_system('G', 2).size() == 12);
  CHECK(build_root_system('B', 3).size() == 18);
  CHECK(build_root_system('C', 3).size() == 18);
  CHECK(build_root_system('D', 4).size() == 24);
  CHECK(build_root_system('F', 4).size() == 48);
  CHECK(build_root_system('E', 6).size() == 72);
  CHECK(build_root_system('E', 7).size() == 126);
  CHECK(build_root_system('E', 8).size() == 240);
}

TEST_CASE("sum free: A1 and G2 and B3") {
  CHECK(max_sum_free_root_set(build_root_system('A', 1)).size == 1);
  CHECK(max_sum_free_root_set(build_root_system('G', 2)).size == 3);
  CHECK(max_sum_free_root_set(build_root_system('B', 3)).size == 5);
}

TEST_CASE("abelian dims") {
  CHECK(max_abelian_dimension('A', 3, 2).result == 5);
  CHECK(max_abelian_dimension('D', 4, 2).result == 8);
  CHECK(max_abelian_dimension('G', 2, 5).result == 3);
  CHECK(max_abelian_dimension('E', 7, 3).result == 27);
  CHECK(max_abelian_dimension('E', 7, 2).result == 28);
  CHECK(max_abelian_dimension('B', 4, 3).result == 7);
  CHECK(max_abelian_dimension('F', 4, 3).result == 9);
  CHECK(max_abelian_dimension('E', 8, 2).result == 36);
  CHECK(max_abelian_dimension('E', 6, 3).result == 17);
  CHECK_THROWS(max_abelian_dimension('G', 2, 3));
}
