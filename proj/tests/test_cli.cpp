#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include <json.hpp>

#include "markov/markov.hpp"

namespace {

struct CliResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

CliResult run_command(const std::string& command) {
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) output.append(buffer.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

CliResult run_cli(const std::string& args) {
  return run_command(std::string(MARKOV_CLI_PATH) + " " + args);
}

}  // namespace

TEST_CASE("cli number") {
  auto r = run_cli("number --p 2 --q 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "29\n");

  CHECK(run_cli("number --p 1 --q 24").output == "7778742049\n");

  auto oracle = run_cli("number --p 13 --q 14 --oracle");
  CHECK(oracle.exit_code == 0);
  CHECK(oracle.output == "7645370045 7645370045\n");

  auto bad = run_cli("number --p 2 --q 4");
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("reduced") != std::string::npos);

  CHECK(run_cli("number --p 2").exit_code == 2);  // missing required flag
}

TEST_CASE("cli distance") {
  CHECK(run_cli("distance --from 0,0 --to 3,0").output == "8\n");
  CHECK(run_cli("distance --from 0,0 --to 1,1").output == "2\n");
  CHECK(run_cli("distance --from 2,2 --to 2,2").output == "0\n");
  CHECK(run_cli("distance --from 0,0 --to nonsense").exit_code == 2);
}

TEST_CASE("cli snake") {
  CHECK(run_cli("snake --p 1 --q 2 --show count").output == "5\n");
  CHECK(run_cli("snake --p 1 --q 1 --show tiles,count").output == "3+\n2\n");

  auto tiles = run_cli("snake --p 2 --q 3 --show tiles");
  CHECK(tiles.exit_code == 0);
  CHECK(tiles.output.substr(0, 2) == "3+");

  CHECK(run_cli("snake --p 2 --q 4 --show count").exit_code == 2);
  CHECK(run_cli("snake --p 1 --q 2 --show bogus").exit_code == 2);
}

TEST_CASE("cli scan formats carry identical payloads") {
  auto csv = run_cli("scan --slope -6/5 --intercept 149/5 --x-min 14 --x-max 24 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output.find("14,13,7645370045") != std::string::npos);
  CHECK(csv.output.find("verdict=non-monotonic") != std::string::npos);

  auto js = run_cli("scan --slope -6/5 --intercept 149/5 --x-min 14 --x-max 24 --format json");
  CHECK(js.exit_code == 0);
  auto parsed = nlohmann::json::parse(js.output);
  CHECK(parsed["verdict"] == "non-monotonic");
  REQUIRE(parsed["points"].size() == 3);
  CHECK(parsed["points"][0]["x"] == 14);
  CHECK(parsed["points"][0]["y"] == 13);
  CHECK(parsed["points"][0]["m"] == "7645370045");
  CHECK(parsed["points"][1]["m"] == "6684339842");
  CHECK(parsed["points"][2]["m"] == "7778742049");

  auto decreasing = run_cli("scan --slope -5/4 --intercept 16 --x-min 5 --x-max 14");
  CHECK(decreasing.exit_code == 0);
  CHECK(decreasing.output.find("verdict: decreasing") != std::string::npos);

  auto increasing = run_cli("scan --slope 0 --intercept 1 --x-min 2 --x-max 9");
  CHECK(increasing.exit_code == 0);
  CHECK(increasing.output.find("verdict: increasing") != std::string::npos);

  CHECK(run_cli("scan --slope 1..2 --intercept 0 --x-min 1 --x-max 2").exit_code == 2);
}

TEST_CASE("cli region") {
  auto csv = run_cli("region --center 3,2 --radius 1");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output.find("x,y,class") != std::string::npos);
  CHECK(csv.output.find("3,2,center") != std::string::npos);
  CHECK(csv.output.find("4,1,larger") != std::string::npos);
  CHECK(csv.output.find("2,1,smaller") != std::string::npos);
}

TEST_CASE("cli verify") {
  auto ok = run_cli("verify --suite identities --max-coord 5");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("markov-equation") != std::string::npos);
  CHECK(ok.output.find(" 0 failures") != std::string::npos);

  auto a = run_cli("verify --suite ratios --seed 42 --format json");
  auto b = run_cli("verify --suite ratios --seed 42 --format json");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);

  auto scans = run_cli("verify --suite scans");
  CHECK(scans.exit_code == 0);
  CHECK(scans.output.find("monotonic-windows") != std::string::npos);

  CHECK(run_cli("verify --suite bogus").exit_code == 2);
}

TEST_CASE("cli cache") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "markov_cli_cache";
  fs::create_directories(dir);
  fs::path cache = dir / "cache.txt";
  fs::remove(cache);

  auto first = run_cli("--cache " + cache.string() + " number --p 2 --q 3");
  CHECK(first.exit_code == 0);
  CHECK(fs::exists(cache));

  auto second = run_cli("--cache " + cache.string() + " number --p 2 --q 3");
  CHECK(second.exit_code == 0);
  CHECK(second.output == "29\n");

  {
    std::ofstream out(cache);
    out << "3,2,30\n";  // corrupted value
  }
  auto corrupt = run_cli("--cache " + cache.string() + " number --p 2 --q 3");
  CHECK(corrupt.exit_code == 2);
  CHECK(corrupt.output.find("revalidation") != std::string::npos);

  // the environment variable overrides the flag
  fs::path env_cache = dir / "env_cache.txt";
  auto env_run = run_command("MARKOV_CACHE=" + env_cache.string() + " " + MARKOV_CLI_PATH +
                             " --cache " + cache.string() + " number --p 1 --q 2");
  CHECK(env_run.exit_code == 0);
  CHECK(env_run.output == "5\n");
  CHECK(fs::exists(env_cache));
  fs::remove_all(dir);
}

TEST_CASE("cli snake count equals number on random fractions") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  while (checked < 50) {
    std::int64_t q = 2 + static_cast<std::int64_t>(rng() % 24);
    std::int64_t p = 1 + static_cast<std::int64_t>(rng() % (q - 1));
    if (markov::gcd_abs(p, q) != 1) continue;
    ++checked;
    std::string flags = "--p " + std::to_string(p) + " --q " + std::to_string(q);
    auto count = run_cli("snake " + flags + " --show count");
    auto value = run_cli("number " + flags);
    CHECK(count.exit_code == 0);
    CHECK(count.output == value.output);
  }
}
