#pragma once
// Bundled fixture documents for the reference corpus. Internal to the
// corpus module.

namespace ail2::corpus::detail {

struct FixtureText {
    const char* id;
    const char* title;
    const char* workflow_json;
    const char* assessment_json;
};

// Seven entries, C1..C7.
extern const FixtureText kFixtures[7];

}  // namespace ail2::corpus::detail
