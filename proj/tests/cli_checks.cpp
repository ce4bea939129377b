// End-to-end checks of the command-line tool: spawned as a real process so
// exit codes, stdout bytes and the JSON round-trip are all exercised.
// Usage: cli_checks <path-to-cli>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "rsums/exact.hpp"

namespace {

int g_failures = 0;

#define EXPECT(cond, msg)                                                    \
    do {                                                                     \
        if (!(cond)) {                                                       \
            std::cerr << "[FAIL] " << __LINE__ << ": " << msg << "\n";       \
            ++g_failures;                                                    \
        }                                                                    \
    } while (0)

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& cmd) {
    RunResult r;
    FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    const int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_checks <path-to-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];

    // known exact values, byte-for-byte
    RunResult r = run(cli + " sum --family binomial --identity diagonal --n 5");
    EXPECT(r.exit_code == 0 && r.out == "21/32\n", "binomial diagonal n=5 prints 21/32");

    r = run(cli + " closed --family bernstein --identity column --t 1/4 --k 0");
    EXPECT(r.exit_code == 0 && r.out == "4\n", "bernstein column closed form prints 4");

    r = run(cli + " closed --family binomial --identity diagonal --n 3");
    EXPECT(r.exit_code == 0 && r.out == "5/8\n", "A2* closed form at n=3 prints 5/8");

    // byte-identical reruns
    const std::string sum_cmd =
        cli + " sum --family eulerian --identity column --k 2 --eps 1e-16 --format json";
    RunResult a = run(sum_cmd), b = run(sum_cmd);
    EXPECT(a.exit_code == 0 && a.out == b.out, "identical flags give identical bytes");

    // JSON round-trip: value_exact re-parses to a rational that re-renders
    // to the same decimal value field
    {
        auto rec = nlohmann::json::parse(a.out);
        rsums::ExactRational v = rsums::ExactRational::parse(
            rec["value_exact"].get<std::string>());
        EXPECT(v.to_decimal_string(15) == rec["value"].get<std::string>(),
               "json value_exact reparses to the printed decimal");
        EXPECT(rec["family"] == "eulerian" && rec["identity"] == "column",
               "json record carries family/identity");
        EXPECT(rec["params"]["k"] == 2, "json record carries params");
    }

    // triangle output
    r = run(cli + " triangle --kind eulerian --levels 4");
    EXPECT(r.exit_code == 0 && r.out == "1\n1,0\n1,1,0\n1,4,1,0\n",
           "eulerian triangle csv");
    r = run(cli + " triangle --kind pascal --levels 3 --normalized --format json");
    {
        auto rec = nlohmann::json::parse(r.out);
        EXPECT(rec["rows"][2][1] == "1/2", "normalized pascal row in json");
    }

    // parity PBM
    r = run(cli + " parity --kind pascal --levels 5 --out /tmp/cli_checks_parity.pbm");
    EXPECT(r.exit_code == 0, "parity command succeeds");
    {
        std::ifstream in("/tmp/cli_checks_parity.pbm");
        std::string magic, w, h;
        in >> magic >> w >> h;
        EXPECT(magic == "P1" && w == "5" && h == "5", "pbm header");
    }

    // simulate: determinism and env-var seed override
    const std::string sim_cmd =
        cli + " simulate --law uniform:0,1 --x 10 --delta 1 --paths 20000 --seed 7";
    a = run(sim_cmd);
    b = run(sim_cmd);
    EXPECT(a.exit_code == 0 && a.out == b.out, "simulate reruns are byte-identical");
    RunResult env = run("RENEWAL_SUMS_SEED=7 " + cli +
                        " simulate --law uniform:0,1 --x 10 --delta 1 --paths 20000");
    EXPECT(env.out == a.out, "RENEWAL_SUMS_SEED matches --seed");
    r = run(cli + " simulate --law shift1:bernoulli:0.5 --x 9 --delta 1 --paths 1000 --seed 1 "
                  "--format json");
    {
        auto rec = nlohmann::json::parse(r.out);
        EXPECT(rec["law"] == "shift1:bernoulli:0.5", "law name echoed in json");
        EXPECT(rec["seed"] == 1, "seed echoed in json");
    }

    // contrast command
    r = run(cli + " contrast --c 1,-1 --family eulerian --k 0 --eps 1e-12 --digits 10");
    EXPECT(r.exit_code == 0 && r.out.substr(0, 12) == "0.3678794412",
           "contrast (1,-1) at k=0 prints 1/e");

    // converge table
    r = run(cli + " converge --kmax 2 --digits 6 --format csv");
    EXPECT(r.exit_code == 0 && r.out.find("k,gap,") == 0, "converge csv header");
    EXPECT(r.out.find("-4.75076e-02") != std::string::npos, "converge csv k=1 row");

    // help text enumerates the family/identity pairs with their domains
    r = run(cli + " sum --help");
    for (const char* needle :
         {"binomial", "eulerian", "bernstein", "hbernstein", "bspline",
          "column|alternating", "diagonal", "0 < --h < --t < 1", "--t >= 0"})
        EXPECT(r.out.find(needle) != std::string::npos,
               std::string("sum --help mentions ") + needle);

    // bspline entry points take the real argument through --t
    r = run(cli + " sum --family bspline --identity column --t 3 --eps 1e-18 --digits 12");
    EXPECT(r.exit_code == 0 && r.out.size() > 10, "bspline column runs");
    r = run(cli + " sum --family eulerian --identity diagonal --n 6");
    EXPECT(r.exit_code == 0 && r.out == "487/720\n", "eulerian diagonal n=6 prints 487/720");

    // exit code 2 on usage errors
    EXPECT(run(cli + " sum --family nosuch --identity column --k 0").exit_code == 2,
           "unknown family exits 2");
    EXPECT(run(cli + " sum --family bernstein --identity column --k 0 --t 2").exit_code == 2,
           "t out of domain exits 2");
    EXPECT(run(cli + " closed --family eulerian --identity column --k 0").exit_code == 2,
           "closed form for eulerian exits 2");
    EXPECT(run(cli + " contrast --c 1,-2 --family eulerian --k 0").exit_code == 2,
           "non-contrast vector exits 2");
    EXPECT(run(cli + " nosuchcmd").exit_code == 2, "unknown subcommand exits 2");
    EXPECT(run(cli + " simulate --law uniform:1,0 --x 1 --paths 10").exit_code == 2,
           "invalid uniform bounds exit 2");

    // exit code 1 on tolerance failure: t/h = 1.5 decays like n^-1.5
    EXPECT(run(cli + " sum --family hbernstein --identity column --k 0 --t 1/2 --h 1/3 "
                     "--eps 1e-12")
                   .exit_code == 1,
           "unreachable tolerance exits 1");

    if (g_failures == 0) {
        std::cout << "cli_checks: all ok\n";
        return 0;
    }
    std::cerr << "cli_checks: " << g_failures << " failure(s)\n";
    return 1;
}
