#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "json.hpp"

namespace {

struct Result {
    int code;
    std::string out;
};

Result jacsyz(const std::string& args) {
    const std::string cmd = std::string(JACSYZ_CLI) + " " + args + " 2>/dev/null";
    Result r{-1, {}};
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST(Cli, AnalyzePrintsJson) {
    auto r = jacsyz("analyze --poly 'x*y*z' --vars x,y,z");
    EXPECT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["milnor"]["tau"], 3);
    EXPECT_EQ(j["saturation"]["sat"], 0);
}

TEST(Cli, AnalyzeWritesFiles) {
    const auto dir = std::filesystem::temp_directory_path() / "jacsyz_cli_test";
    std::filesystem::create_directories(dir);
    const auto json = dir / "r.json", csv = dir / "r.csv";
    auto r = jacsyz("analyze --poly 'x^2*y^2 + z^4' --vars x,y,z --field mod:101 --kmax 12 --json " + json.string() +
                    " --csv " + csv.string());
    EXPECT_EQ(r.code, 0);
    std::ifstream in(json);
    auto j = nlohmann::json::parse(in);
    EXPECT_EQ(j["input"]["field"], "mod:101");
    EXPECT_EQ(j["input"]["kmax"], 12);
    std::ifstream c(csv);
    std::string header;
    std::getline(c, header);
    EXPECT_EQ(header, "k,dim_S,milnor,smooth,ar,kr,er,koszul_hn,J,hatJ,sd,defect");
    std::filesystem::remove_all(dir);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(jacsyz("analyze --poly 'x^2*y^2' --vars x,y,z").code, 3);
    EXPECT_EQ(jacsyz("analyze --poly 'x^2 + y' --vars x,y").code, 1);
    EXPECT_EQ(jacsyz("analyze --poly 'x^2 +' --vars x,y").code, 1);
    EXPECT_EQ(jacsyz("analyze --poly 'x*y*z' --vars x,y,z --field mod:12").code, 1);
    EXPECT_EQ(jacsyz("analyze --poly 'x*y*z' --vars x,y,z --kmax 2").code, 1);
    EXPECT_EQ(jacsyz("analyze --vars x,y").code, 1);
    EXPECT_EQ(jacsyz("frobnicate").code, 1);
    EXPECT_EQ(jacsyz("").code, 1);
}

TEST(Cli, Corpus) {
    auto r = jacsyz("corpus --filter xyz");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("xyz: ok"), std::string::npos);
    EXPECT_EQ(jacsyz("corpus --filter no-such-entry").code, 1);
    EXPECT_EQ(jacsyz("corpus --filter one-node --field mod:random --seed 3").code, 0);
}
