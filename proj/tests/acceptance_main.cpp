// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Usage: acceptance [quick|full]   (default: full)

#include "thetalift/acceptance.hpp"

#include <iostream>

int main(int argc, char** argv) {
    using namespace thetalift::acceptance;
    const Profile profile = argc > 1 ? parse_profile(argv[1]) : Profile::Full;
    std::cout << "acceptance profile: " << to_string(profile) << '\n';
    bool all = true;
    run_all(profile, [&](const CheckResult& r) {
        std::cout << format_line(r) << std::endl;
        all = all && r.pass;
    });
    std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << '\n';
    return all ? 0 : 1;
}
