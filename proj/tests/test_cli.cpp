#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <regex>
#include <string>

namespace {

struct Run {
    int status;
    std::string out;
};

// Runs the CLI through the shell; stderr is merged into stdout only when asked.
Run run(const std::string& args, bool with_stderr = false) {
    const std::string cmd = std::string(HOPF_CLI_PATH) + " " + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

TEST(CliMotive, FactoredAndExpanded) {
    const auto r = run("motive --family rep_agl1_total --n 3");
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(contains(r.out, "factored: q(q-1)(3q-2)"));
    EXPECT_TRUE(contains(r.out, "expanded: 3*q^3 - 5*q^2 + 2*q"));
    EXPECT_TRUE(contains(r.out, "origin:"));
}

TEST(CliMotive, Evaluation) {
    const auto r = run("motive --family omega --eval 5");
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(contains(r.out, "q=5: 115"));
}

TEST(CliMotive, EmptyStratum) {
    const auto r = run("motive --family rep_gl2_stratum:xi2_xi0 --n 1");
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(contains(r.out, "expanded: 0\n"));
}

TEST(CliMotive, Json) {
    const auto r = run("motive --family char_gl2_total --n 2 --eval 3 --format json");
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(contains(r.out, "\"family\":\"char_gl2_total\""));
    EXPECT_TRUE(contains(r.out, "\"factored\":\"(q-1)^2(2q^2-q+1)\""));
    EXPECT_TRUE(contains(r.out, "\"q=3\":\"64\""));
}

TEST(CliMotive, BadInput) {
    EXPECT_EQ(run("motive --family rep_gl3_total").status, 2);
    EXPECT_EQ(run("motive --family omega --n 0").status, 2);
    EXPECT_EQ(run("motive").status, 2);
    EXPECT_EQ(run("frobnicate").status, 2);
    EXPECT_EQ(run("motive --family omega --format csv").status, 2);
}

TEST(CliVerify, FullSuitePasses) {
    const auto r = run("verify --family all --n 1..4 --primes auto", true);
    EXPECT_EQ(r.status, 0);
    EXPECT_FALSE(contains(r.out, "mismatch "));
    EXPECT_TRUE(contains(r.out, " with mismatches"));
    EXPECT_TRUE(contains(r.out, "0 with mismatches"));
}

TEST(CliVerify, NaiveCrosscheckReportsBoth) {
    const auto r = run("verify --family rep_gl2_total --n 2 --primes 3 --naive-crosscheck --format csv");
    EXPECT_EQ(r.status, 0);
    const std::regex top("(^|\n)rep_gl2_total,2,3,(naive|class_based),1152,1152,match,");
    auto begin = std::sregex_iterator(r.out.begin(), r.out.end(), top);
    EXPECT_EQ(std::distance(begin, std::sregex_iterator()), 2);
    EXPECT_TRUE(contains(r.out, ",naive,1152,1152,match,"));
    EXPECT_TRUE(contains(r.out, ",class_based,1152,1152,match,"));
}

TEST(CliVerify, InadmissiblePrimeIsBadInput) {
    const auto r = run("verify --family rep_agl2_total --n 3 --primes 5", true);
    EXPECT_EQ(r.status, 2);
    EXPECT_TRUE(contains(r.out, "p=5 inadmissible for n=3 (5 ≢ 1 mod 3)"));
}

TEST(CliVerify, OtherSelectors) {
    EXPECT_EQ(run("verify --family twisted --n 1..2 --primes 3,5").status, 0);
    EXPECT_EQ(run("verify --family sl_gl_relation --n 2 --primes 3").status, 0);
    EXPECT_EQ(run("verify --family sl_gl_relation --n 1 --primes 7").status, 2);
    EXPECT_EQ(run("verify --family rep_gl2_total --n 1 --primes 11 --strategy naive").status, 2);
    EXPECT_EQ(run("verify --family nonsense").status, 2);
    EXPECT_EQ(run("verify --family omega --primes 4").status, 2);
    EXPECT_EQ(run("verify --family omega --strategy fast").status, 2);
}

TEST(CliVerify, AutoPrimesWarnWhenShort) {
    const auto r = run("verify --family omega --n 5 --primes auto", true);
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(contains(r.out, "warning: n=5 has 1 admissible prime(s) <= 13"));
    EXPECT_TRUE(contains(r.out, "p=11"));
}

TEST(CliVerify, JsonLines) {
    const auto r = run("verify --family totals --n 2 --primes 3,5 --format json");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(count_lines(r.out), 6u);
    EXPECT_TRUE(contains(r.out, "\"family\":\"rep_agl1_total\",\"n\":2,\"p\":3,\"strategy\":\"enumeration\","
                                "\"formula_value\":\"30\",\"counted_value\":\"30\",\"verdict\":\"match\""));
}

TEST(CliTable, CsvRowCount) {
    const auto r = run("table --families totals --n 1..3 --format csv");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(count_lines(r.out), 10u);
    EXPECT_TRUE(contains(r.out, "rep_agl2_total,1,q^3(q+1)(q-1)^2(q^2+q-1),"));
}

TEST(CliTable, CharacterVarietyRow) {
    const auto r = run("table --families char_gl2_total --n 2 --format csv");
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(contains(r.out, "char_gl2_total,2,(q-1)^2(2q^2-q+1),2*q^4 - 5*q^3 + 5*q^2 - 3*q + 1\n"));
}

TEST(CliTable, FormatsAreDeterministic) {
    for (const char* fmt : {"text", "csv", "json", "md"}) {
        const std::string args = std::string("table --families all --n 1..6 --eval 3,7 --format ") + fmt;
        const auto a = run(args), b = run(args);
        EXPECT_EQ(a.status, 0);
        EXPECT_EQ(a.out, b.out) << fmt;
        EXPECT_FALSE(a.out.empty());
    }
}

TEST(CliTable, BadRange) {
    EXPECT_EQ(run("table --n 4..1").status, 2);
    EXPECT_EQ(run("table --n x").status, 2);
    EXPECT_EQ(run("table --n 0..2").status, 2);
}

TEST(CliStrata, RankThree) {
    const auto r = run("strata --rank 3");
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(contains(r.out, "rank 3: 6 Jordan types"));
    EXPECT_TRUE(contains(r.out, "stratum pairs: 10"));
    EXPECT_EQ(run("strata --rank 7").status, 2);
    EXPECT_EQ(run("strata --rank 3 --n 2").status, 2);
}

TEST(CliStrata, RankTwoWithMotives) {
    const auto r = run("strata --rank 2 --n 2 --format json");
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(contains(r.out, "\"token\":\"xi2_xi0\""));
    EXPECT_TRUE(contains(r.out, "\"rep_gl2\""));
}

}  // namespace
