#include <cstdio>
#include <iostream>

#include "qk1/verify.hpp"

int main()
{
    const auto bundle = qk1::run_acceptance(qk1::VerifyConfig{});
    for (const auto &c : bundle.criteria) {
        std::printf("%s  criterion %d: %s (%.2fs)\n", c.pass() ? "PASS" : "FAIL", c.id, c.name.c_str(), c.seconds);
    }
    if (!bundle.pass()) {
        std::cout << "\n" << qk1::to_text(bundle);
    }
    std::printf("%d/%d checks passed\n", bundle.passed(), bundle.total());
    return bundle.pass() ? 0 : 1;
}
