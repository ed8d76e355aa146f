#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct Run
{
    int status = -1;
    std::string out;
    Json json() const { return Json::parse(out); }
};

Run run(const std::string & args)
{
    const std::string cmd = std::string(T1RIGID_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE * pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

struct Scratch
{
    fs::path dir;

    Scratch() : dir(fs::temp_directory_path() / ("t1rigid_cli_" + std::to_string(::getpid()))) { fs::create_directories(dir); }
    ~Scratch() { fs::remove_all(dir); }

    std::string file(const std::string & name, const std::string & text) const
    {
        const auto p = dir / name;
        std::ofstream(p) << text;
        return p.string();
    }
};

} // namespace

TEST_CASE("t1 on the boundary of a triangle")
{
    Scratch s;
    const auto r = run("t1 " + s.file("b.facets", "1 2\n2 3\n1 3\n"));
    CHECK(r.status == 0);
    const Json j = r.json();
    CHECK(j["schema"] == "1");
    CHECK(j["command"] == "t1");
    CHECK(j["rigid"] == false);
    bool found = false;
    for (const auto & e : j["t1"])
        found = found || e == Json::parse(R"({"A":[],"B":[1,2,3],"dim":1})");
    CHECK(found);
}

TEST_CASE("rigid, inseparable and graph verdicts")
{
    Scratch s;
    const auto p4 = s.file("p4.edges", "1 2\n2 3\n3 4\n");
    const auto rigid = run("rigid --format edges " + p4);
    CHECK(rigid.status == 0);
    CHECK(rigid.json()["rigid"] == false);

    const auto insep = run("inseparable --format edges " + p4);
    CHECK(insep.status == 0);
    CHECK(insep.json()["inseparable"] == true);

    const auto g = run("graph " + p4 + " --format edges").json();
    CHECK(g["inseparable"] == true);
    CHECK(g["rigid"] == false);
    CHECK(g["structural_verdict"] == "not_rigid");
    CHECK(g["witnesses"]["alpha"].is_null());
    CHECK(g["witnesses"]["beta"].is_object());

    const auto c4 = run("graph --format edges " + s.file("c4.edges", "1 2\n2 3\n3 4\n4 1\n")).json();
    CHECK(c4["rigid"] == true);
    CHECK(c4["structural_verdict"] == "criterion_inapplicable");

    const auto tri = run("inseparable " + s.file("tri.facets", "1\n2\n3\n"));
    CHECK(tri.status == 0);
    CHECK(tri.json()["inseparable"] == false);
}

TEST_CASE("separate")
{
    Scratch s;
    const auto tri = s.file("tri.facets", "1\n2\n3\n");
    const Json j = run("separate " + tri + " --vertex 3").json();
    CHECK(j["k"] == 1);
    CHECK(j["verified"] == true);
    CHECK(j["new_vertices"] == Json::parse(R"(["3.0","3.1"])"));
    CHECK(j["facets"] == "1 3.1\n2 3.0\n3.0 3.1\n");

    const auto out = (s.dir / "sep.facets").string();
    CHECK(run("separate " + tri + " --vertex 3 -o " + out).status == 0);
    const Json again = run("inseparable " + out).json();
    CHECK(again["inseparable"] == true);

    const auto slow = s.file("slow.facets", "1\n2\n3 4\n3 5\n4 5\n");
    const auto done = run("separate --fixpoint " + slow);
    CHECK(done.status == 0);
    CHECK(done.json()["converged"] == true);
    CHECK(done.json()["rounds"] == 3);
    const auto cut = run("separate --fixpoint --max-rounds 1 " + slow);
    CHECK(cut.status == 3);
    CHECK(cut.json()["converged"] == false);
}

TEST_CASE("letterplace and oracle-check")
{
    Scratch s;
    const auto chain = s.file("chain.poset", "a < b\n");
    const auto anti = s.file("anti.poset", "a\nb\n");
    const Json lp = run("letterplace " + chain + " " + chain + " --verify").json();
    CHECK(lp["generators"] == 3);
    CHECK(lp["rigid"] == false);
    CHECK(lp["rigid_direct"] == false);
    const Json la = run("letterplace " + anti + " " + chain + " --verify").json();
    CHECK(la["rigid"] == true);
    CHECK(la["rigid_direct"] == true);

    const Json oc = run("oracle-check " + s.file("p.facets", "1\n2\n3\n4\n")).json();
    CHECK(oc["agree"] == true);
    CHECK(oc["mismatches"].empty());
}

TEST_CASE("exit codes")
{
    Scratch s;
    CHECK(run("t1 " + s.file("bad.facets", "1 2\n3 {\n")).status == 2);
    CHECK(run("t1 " + (s.dir / "missing.facets").string()).status == 2);
    CHECK(run("t1 --format ideal " + s.file("noheader", "1 2\n")).status == 2);
    CHECK(run("letterplace " + s.file("cyc.poset", "a < b\nb < a\n") + " " + s.file("q.poset", "x\n")).status == 2);
    CHECK(run("frobnicate").status == 2);
    CHECK(run("separate --vertex 9 " + s.file("g.facets", "1 2\n@ghost 9\n")).status == 2);
    CHECK(run("t1 --max-vertices 2 " + s.file("b.facets", "1 2\n2 3\n1 3\n")).status == 3);
    // A "false" verdict is not an error.
    CHECK(run("rigid " + s.file("pts.facets", "1\n2\n")).status == 0);
}
