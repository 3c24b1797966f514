#include "gcover/divisor.hpp"

#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(GCOVER_BIN) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("kodaira verdict") {
    auto r = run("kodaira --genus 13");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("verdict") == "general_type");
    CHECK(j.at("s_max") == "9/11");
    CHECK(j.at("gamma_max") == "1/14");

    auto r11 = run("kodaira --genus 11");
    CHECK(json::parse(r11.out).at("verdict") == "inconclusive");
}

TEST_CASE("covers count") {
    auto r = run("covers count --group mu2 --genus 2 --image full");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("count") == "15");
    CHECK(j.at("method") == "moebius");

    auto rb = run("covers count --group S3 --genus 2 --marks c2,c2 --image S3 --up-to-conj");
    CHECK(rb.exit_code == 0);
    json jb = json::parse(rb.out);
    auto rbrute =
        run("covers count --group S3 --genus 2 --marks c2,c2 --image S3 --up-to-conj --method brute");
    CHECK(json::parse(rbrute.out).at("count") == jb.at("count"));
}

TEST_CASE("canonical class round trip") {
    auto r = run("canonical --genus 13");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("coeffs").at("lambda") == "13/1");
    gcover::DivisorClass parsed = gcover::DivisorClass::from_json(j);
    CHECK(parsed == gcover::canonical_class(13));
}

TEST_CASE("byte-identical output on identical inputs") {
    for (const std::string& cmd :
         {std::string("canonical --genus 13"), std::string("koszul class --i 6"),
          std::string("boundary list --group S3 --genus 4")}) {
        auto a = run(cmd);
        auto b = run(cmd);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("age, eigen and elliptic-tail subcommands") {
    json age = json::parse(run("age --group S3 --rep R --element \"(12)\"").out);
    CHECK(age.at("age") == "1/2");
    json eig = json::parse(run("eigen --group S3 --rep R --element \"(123)\"").out);
    CHECK(eig.at("eigen").at("w") == json::array({0, 1, 1}));
    CHECK(eig.at("eigen").at("age") == "1/1");

    json et = json::parse(run("elliptic-tail --group S3 --image N --aut 6").out);
    CHECK(et.at("classes").size() == 4);
    CHECK(et.at("lifting_classes").size() == 1);
    json rh = json::parse(run("elliptic-tail genus").out);
    CHECK(rh.at("genus") == 0);
    CHECK(rh.at("degree") == 4);
}

TEST_CASE("pencil and boundary subcommands") {
    json p = json::parse(run("pencil check --i 3 --a 13 --b0p 2 --b0c2 3").out);
    CHECK(p.at("passes") == true);
    json b = json::parse(run("boundary list --group S3 --genus 4 --component S3").out);
    CHECK(b.at("labels").is_array());
    for (const auto& l : b.at("labels")) CHECK(l.at("verdict") == "nonempty");
}

TEST_CASE("exit codes") {
    CHECK(run("no-such-subcommand").exit_code == 2);
    CHECK(run("kodaira").exit_code == 2);               // missing required --genus
    CHECK(run("pullback --i 9 --genus 13").exit_code == 1);  // IndexOutOfRange
    json err = json::parse(run("pullback --i 9 --genus 13").out);
    CHECK(err.at("error").at("code") == "IndexOutOfRange");
    // SearchTooLarge carries the required tuple count.
    auto big = run("--cutoff 10 covers count --group S3 --genus 2 --method brute");
    CHECK(big.exit_code == 1);
    CHECK(json::parse(big.out).at("error").at("code") == "SearchTooLarge");
}

TEST_CASE("GCOVER_CUTOFF environment override") {
    std::string save = std::string(GCOVER_BIN);
    auto env_run = [&](const std::string& args) {
        std::string cmd = "GCOVER_CUTOFF=10 " + save + " " + args + " 2>/dev/null";
        FILE* p = popen(cmd.c_str(), "r");
        REQUIRE(p != nullptr);
        std::string out;
        std::array<char, 4096> buf;
        std::size_t n;
        while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
        pclose(p);
        return out;
    };
    json j = json::parse(env_run("covers count --group S3 --genus 2 --method brute"));
    CHECK(j.at("error").at("code") == "SearchTooLarge");
    // An explicit flag wins over the environment.
    json ok = json::parse(env_run("--cutoff 100000 covers count --group S3 --genus 2 --method brute"));
    CHECK(ok.contains("count"));
}

TEST_CASE("table output") {
    auto r = run("--output table kodaira --genus 13");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("general_type") != std::string::npos);
}
