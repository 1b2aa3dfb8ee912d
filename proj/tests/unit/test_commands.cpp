#include "doctest.h"
#include "unit/support.hpp"

#include "bicross/commands.hpp"
#include "bicross/error.hpp"

using namespace bicross;

namespace {

Report run(const Config& cfg, std::string command, std::vector<std::string> args = {}, std::optional<int> radius = {}) {
    return run_command(cfg, CommandRequest{std::move(command), std::move(args), radius});
}

} // namespace

TEST_CASE("exit codes") {
    const Config h = testing::preset("h_z_z2");
    CHECK(run(h, "verify").exit_code == kExitOk);
    CHECK(run(h, "fuse", {"-1:0", "-2:0"}).exit_code == kExitOk);
    CHECK(run(h, "fuse", {"-1:0", "bogus"}).exit_code == kExitInvalid);
    CHECK(run(h, "character", {"0:7"}).exit_code == kExitInvalid);
    CHECK(run(h, "no-such-command").exit_code == kExitInvalid);

    CHECK(run(testing::fixture("broken_compat.json"), "verify").exit_code == kExitVerificationFailed);
    const Report bad = run(testing::fixture("sigma_two.json"), "cqg-check");
    CHECK(bad.status == "fail");
    CHECK(bad.exit_code == kExitVerificationFailed);

    CommandRequest big{"fusion-table", {}, 4};
    big.max_simples = 3;
    const Report refused = run_command(h, big);
    CHECK(refused.status == "error");
    CHECK(refused.payload.at("error_kind") == "invalid_input");
}

TEST_CASE("report envelope") {
    const Config h = testing::preset("h_z_z2n:2");
    const Report r = run(h, "dual", {"-1:1"});
    const Json j = r.to_json();
    CHECK(j.at("schema_version") == kSchemaVersion);
    CHECK(j.at("command") == "dual");
    CHECK(j.at("config").at("hash") == h.hash);
    CHECK(j.at("status") == "pass");
    CHECK(r.to_text().starts_with("command: dual\n"));
}

TEST_CASE("repeated runs agree") {
    for (const std::string name : {"h_z_z2_tau", "drinfeld:D4"}) {
        CAPTURE(name);
        const Config cfg = testing::preset(name);
        for (const auto& command : command_names()) {
            if (command == "character" || command == "fuse" || command == "dual") continue;
            CAPTURE(command);
            CHECK(run(cfg, command, {}, 2).to_json().dump() == run(cfg, command, {}, 2).to_json().dump());
        }
    }
}
