#include <doctest.h>

#include "overlapk/hook.hpp"

using namespace overlapk;

TEST_SUITE_BEGIN("hook");

TEST_CASE("hook module ranks are C(n-1,k-1)") {
    CHECK(hook_module_rank(3, 3) == 1);
    CHECK(hook_module_rank(4, 3) == 3);
    CHECK(hook_module_rank(5, 4) == 4);
}

TEST_CASE("cap guards the group algebra size") {
    CHECK_THROWS_AS(hook_module_rank(7, 3), std::runtime_error);
}

TEST_SUITE_END();
