#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>

namespace {

struct Run {
  int status;
  std::string out;
};

/// Runs the CLI with stderr discarded.
Run cli(const std::string& args) {
  const std::string command = std::string(EPIFACTOR_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST_CASE("generate") {
  CHECK(cli("generate -d '|a b' -n 13").out == "abaababaabaab\n");
  CHECK(cli("generate -d '|a b c' -n 7").out == "abacaba\n");
  CHECK(cli("generate -d '|a a' -n 4").status == 1);
  const auto j = nlohmann::json::parse(cli("generate -d 'a^2 | b a' -n 6 --format json").out);
  CHECK(j.at("word") == "aabaaa");
}

TEST_CASE("factorize") {
  const auto both = cli("factorize -d '|a b' --scheme z -k 5 --source both");
  CHECK(both.status == 0);
  CHECK(both.out.find("z oracle: a|b|aa|bab|aabaa\n") != std::string::npos);
  CHECK(both.out.find("z closed: a|b|aa|bab|aabaa\n") != std::string::npos);
  CHECK(both.out.find("MATCH") != std::string::npos);
  CHECK(cli("factorize --literal aaaa --scheme c").out == "a|aaa\n");
  CHECK(cli("factorize --literal ''").status == 1);
  CHECK(cli("factorize --literal ab -d '|a b'").status == 1);
  CHECK(cli("factorize --literal ab --source both").status == 1);
  CHECK(cli("factorize").status == 1);
}

TEST_CASE("factorize JSON rejoins to the generated prefix") {
  const auto run = cli("factorize -d 'b^2 a | b a' -n 200 --scheme c --format json");
  REQUIRE(run.status == 0);
  const auto j = nlohmann::json::parse(run.out);
  std::string joined;
  for (const auto& f : j.at("factors")) joined += f.get<std::string>();
  CHECK(joined == cli("generate -d 'b^2 a | b a' -n 200").out.substr(0, 200));
  CHECK(j.at("input_length") == 200);

  const auto both = nlohmann::json::parse(cli("factorize -d '|a b c' --scheme c -k 9 --source both --format json").out);
  CHECK(both.at("verdict") == "MATCH");
  CHECK(both.at("closed_form").at("j") == 5);
}

TEST_CASE("verify") {
  const auto one = cli("verify --spec '|a b' --lemma deltaY");
  CHECK(one.status == 0);
  CHECK(one.out.find("pass run-powers m=1") != std::string::npos);
  CHECK(one.out.find("all 1 properties passed") != std::string::npos);
  CHECK(cli("verify --spec '|a'").status == 1);
  CHECK(cli("verify --spec '|a b' --lemma bogus").status == 1);
  const auto small = cli("verify --alphabet 2 --max-runs 1 --max-exp 2 --format json");
  CHECK(small.status == 0);
  const auto j = nlohmann::json::parse(small.out);
  CHECK(j.at("passed") == true);
  CHECK(j.at("specs") == 6);
}

TEST_CASE("bench") {
  const auto a = nlohmann::json::parse(cli("bench --engine lpf --literal-random -n 5000 --seed 7").out);
  const auto b = nlohmann::json::parse(cli("bench --engine naive --literal-random -n 5000 --seed 7").out);
  CHECK(a.at("factors") == b.at("factors"));
  CHECK(a.at("n") == 5000);
  CHECK(cli("bench --engine naive -n 2000").status == 0);
  CHECK(cli("bench --engine nope").status == 1);
}
