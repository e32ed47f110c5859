#pragma once

// Property suites over seeded random cases. Each case records its input, the
// property checked and a witness when it fails; the same seed gives the
// same report byte for byte.

#include "scottpersist/json_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace scottpersist {

struct CaseResult {
    std::size_t index = 0;
    Json input;
    std::string property;
    bool pass = false;
    std::string witness;
};

struct VerificationReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t cases = 0;
    std::vector<CaseResult> results;

    std::size_t failures() const;
    bool all_pass() const { return failures() == 0; }
    Json to_json() const;
};

const std::vector<std::string>& suite_names();

/// Throws DomainError for an unknown suite name.
VerificationReport run_suite(const std::string& name, std::uint64_t seed, std::size_t cases);

/// Per-case generator seed, so cases do not depend on each other.
std::uint64_t case_seed(std::uint64_t seed, std::size_t index);

} // namespace scottpersist
