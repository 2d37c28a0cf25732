#include "fastssc/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

using namespace fastssc;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "fastssc");
    std::vector<const char *> argv;
    for (const auto &a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int rc = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {rc, out.str(), err.str()};
}

class TempDir {
public:
    TempDir()
    {
        path_ = fs::temp_directory_path() / ("fastssc_cli_" + std::to_string(::getpid()));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string file(const std::string &name) const { return (path_ / name).string(); }
    std::string write(const std::string &name, const std::string &text) const
    {
        std::ofstream(file(name)) << text;
        return file(name);
    }

private:
    fs::path path_;
};

std::string slurp(const std::string &path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("construct, compile and decode the (8,3) code")
{
    TempDir tmp;
    auto r = cli({"construct", "--n", "8", "--k", "3", "--design-snr-db", "2.5"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "{\"n\":8,\"k\":3,\"frozen_mask\":\"e0\"}\n");
    auto code = tmp.write("c8.json", r.out);

    r = cli({"compile", "--code", code});
    REQUIRE(r.code == 0);
    CHECK(r.out == "ZERO_SPC nv=8 off=0\n");
    auto prog = tmp.write("p8.txt", r.out);

    auto llr = tmp.write("l8.txt", "8 -8 8 -8 8 -8 8 -8\n");
    r = cli({"decode", "--code", code, "--program", prog, "--llr", llr});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["codeword"] == "01010101");
    CHECK(j["message"] == "101");
    CHECK(j["codeword_hex"] == "aa");

    r = cli({"decode", "--code", code, "--llr", llr, "--decoder", "sc", "--quant", "6.5.1"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["codeword"] == "01010101");

    r = cli({"latency", "--code", code});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["cycles"] == 5);
}

TEST_CASE("latency of the rate-1/2 code")
{
    TempDir tmp;
    auto r = cli({"construct", "--n", "1024", "--k", "512", "-o", tmp.file("c.json")});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    r = cli({"latency", "--code", tmp.file("c.json"), "--p", "512", "--rep-max", "16"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["cycles"] == 229);
    r = cli({"latency", "--code", tmp.file("c.json"), "--node-set", "extended"});
    CHECK(nlohmann::json::parse(r.out)["cycles"] == 216);
    r = cli({"latency", "--code", tmp.file("c.json"), "--node-set", "original", "--no-fusion"});
    CHECK(nlohmann::json::parse(r.out)["cycles"] == 326);
}

TEST_CASE("report")
{
    auto r = cli({"report", "--cycles", "165", "--k", "512", "--clock-mhz", "103"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["table"]["throughput_mbps"] == "320");
    CHECK(j["table"]["info_bits_per_cc"] == "3.10");
    CHECK(j["table"]["latency_us"] == "1.60");
    CHECK(cli({"report", "--cycles", "165", "--clock-mhz", "103"}).code == 1);
}

TEST_CASE("simulate and alter")
{
    TempDir tmp;
    REQUIRE(cli({"construct", "--n", "64", "--k", "32", "-o", tmp.file("c.json")}).code == 0);
    auto r = cli({"simulate", "--code", tmp.file("c.json"), "--snr-start", "2", "--snr-stop", "3",
                  "--snr-step", "0.5", "--min-errors", "20", "--seed", "4"});
    REQUIRE(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);
    auto again = cli({"simulate", "--code", tmp.file("c.json"), "--snr-start", "2", "--snr-stop",
                      "3", "--snr-step", "0.5", "--min-errors", "20", "--seed", "4"});
    CHECK(again.out == r.out);

    r = cli({"alter", "--code", tmp.file("c.json"), "--max-swaps", "2", "--window-h", "4",
             "--fer-errors", "10", "--fer-frames", "5000", "--final-errors", "0", "-o",
             tmp.file("alt.json")});
    REQUIRE(r.code == 0);
    auto front = nlohmann::json::parse(r.out);
    CHECK(front.is_array());
    CHECK_FALSE(front.empty());
    CHECK(nlohmann::json::parse(slurp(tmp.file("alt.json")))["k"] == 32);
}

TEST_CASE("errors are reported as json")
{
    auto r = cli({"latency"});
    CHECK(r.code == 2);
    CHECK(nlohmann::json::parse(r.err).contains("error"));
    r = cli({"latency", "--code", "/nonexistent/code.json"});
    CHECK(r.code == 1);
    CHECK(nlohmann::json::parse(r.err).contains("error"));
    r = cli({"construct", "--n", "12", "--k", "3"});
    CHECK(r.code == 1);
    r = cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("construct") != std::string::npos);
}
