// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qshelf/verify.hpp"

using namespace qshelf;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;
};

bool starts(const std::string& s, const std::string& p)
{
    return s.rfind(p, 0) == 0;
}

// run a suite and demand PASS from every check whose id has one of the prefixes
Outcome expect_pass(const std::string& suite, const Config& cfg, const std::vector<std::string>& prefixes,
                    int min_checks = 1)
{
    Report r = run_suite(suite, cfg);
    Outcome o;
    int n = 0;
    for (const auto& c : r.checks) {
        bool wanted = false;
        for (const auto& p : prefixes)
            wanted = wanted || starts(c.id, p);
        if (!wanted)
            continue;
        ++n;
        if (c.status != Status::pass) {
            if (o.pass)
                o.note = c.id + ": " + status_name(c.status) + " " + c.detail;
            o.pass = false;
        }
    }
    if (n < min_checks) {
        o.pass = false;
        o.note = "only " + std::to_string(n) + " checks selected, expected " + std::to_string(min_checks);
    }
    if (o.pass)
        o.note = std::to_string(n) + " checks";
    return o;
}

Outcome both(const Outcome& a, const Outcome& b)
{
    if (!a.pass)
        return a;
    if (!b.pass)
        return b;
    return {true, a.note + " + " + b.note};
}

Config base()
{
    Config c;
    c.start_shelf = {0, 0};
    return c;
}

int failures = 0;

void criterion(int n, const char* what, double limit_s, const std::function<Outcome()>& body)
{
    auto t0 = std::chrono::steady_clock::now();
    Outcome o = body();
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0 && s >= limit_s) {
        o.pass = false;
        o.note += "; took " + std::to_string(s) + " s, limit " + std::to_string(limit_s) + " s";
    }
    if (!o.pass)
        ++failures;
    std::printf("criterion %d %-58s %s  %.2f s  %s\n", n, what, o.pass ? "PASS" : "FAIL", s, o.note.c_str());
    std::fflush(stdout);
}

} // namespace

int main()
{
    criterion(1, "(triple product, k <= 5, through q^60)", 1.0, [] {
        Config c = base();
        c.k = {2, 5};
        c.degree = 61;
        return expect_pass("identities", c, {"identities.jtp."}, 14);
    });

    criterion(2, "(product side = partition count, k 2..4, n <= 25)", 30.0, [] {
        Config c = base();
        c.k = {2, 4};
        c.nmax = 25;
        return expect_pass("identities", c, {"identities.bgg."}, 6);
    });

    criterion(3, "(product = sum form = closed form at j = 0, through q^60)", 0, [] {
        Config c = base();
        c.k = {2, 5};
        c.degree = 61;
        return expect_pass("identities", c, {"identities.shelf0."}, 14);
    });

    criterion(4, "(shelf recursion vs closed forms, k <= 4, j <= 3, N = 80)", 0, [] {
        Config c = base();
        c.k = {2, 4};
        c.degree = 80;
        c.shelves = {0, 3};
        return expect_pass("shelves", c, {"shelves.recursion.", "shelves.edge."}, 9 + 12);
    });

    criterion(5, "(valuation bounds, k <= 5, j <= 4)", 0, [] {
        Config c = base();
        c.k = {2, 5};
        c.shelves = {0, 4};
        // officials 14 positions, ghosts 10, per shelf
        return expect_pass("empirical", c, {"empirical."}, 5 * (14 + 10));
    });

    criterion(6, "(A B = I, C G = B G, G = A' G, h routes; k <= 5, J <= 2, j <= J+5)", 0, [] {
        Config c = base();
        c.k = {2, 5};
        c.start_shelf = {0, 2};
        c.depth = 5;
        c.shelves = {0, 7};
        c.degree = 40;
        return expect_pass("matrices", c, {"matrices."}, 4 * 7 * 4 + 4 * 3 * 5);
    });

    criterion(7, "(partition counts for h, h12, G, ghost; h12 limit; ghost 1 = G 2)", 0, [] {
        Config a = base();
        a.k = {2, 4};
        a.start_shelf = {0, 1};
        a.depth = 3;
        a.nmax = 20;
        a.degree = 41;
        Outcome h = expect_pass("combinatorics", a,
                                {"combinatorics.h.", "combinatorics.h12.", "combinatorics.h12-limit.",
                                 "combinatorics.ghost-one."},
                                3 * 2 * 3 * 2 + 9 * 2 + 3);
        Config b = a;
        b.start_shelf = {0, 2};
        b.nmax = 25;
        Outcome g = expect_pass("combinatorics", b, {"combinatorics.G.", "combinatorics.ghost."}, 9 * 3 + 6 * 3 + 3);
        return both(h, g);
    });

    criterion(8, "((a;x;q) identities, dictionary through q^30, overpartitions n <= 14)", 120.0, [] {
        Config c = base();
        c.k = {2, 4};
        c.shelves = {0, 2};
        c.axq_degree = 31;
        c.nmax_over = 14;
        return expect_pass("axq", c, {"axq."}, 3 * 3 + 12);
    });

    criterion(9, "(one corrupted coefficient in any check is reported)", 0, [] {
        Config c = base();
        c.k = {2, 3};
        c.degree = 30;
        c.shelves = {0, 2};
        c.start_shelf = {0, 1};
        c.depth = 2;
        c.nmax = 12;
        c.nmax_over = 8;
        c.axq_degree = 14;
        // clean run first: it tells where each check's compared window ends
        Report clean = run_suite("all", c);
        if (!clean.ok())
            return Outcome{false, "clean run already fails"};
        Outcome o{true, std::to_string(clean.checks.size()) + " checks x 6 faults"};
        for (bool rhs : {false, true})
            for (int pick = 0; pick < 3; ++pick) {
                Config f = c;
                std::map<std::string, int> at;
                for (const auto& rec : clean.checks) {
                    int top = rec.through >= 0 ? rec.through : 6; // matrix checks take any exponent
                    int e = pick == 0 ? 0 : pick == 1 ? top / 2 : top;
                    at[rec.id] = e;
                    f.faults.push_back({rec.id, rhs, e});
                }
                Report r = run_suite("all", f);
                for (const auto& rec : r.checks) {
                    int e = at[rec.id];
                    bool named = rec.status == Status::fail && rec.mismatch && rec.mismatch->exponent == e
                                 && rec.detail.find("q^" + std::to_string(e)) != std::string::npos;
                    if (!named && o.pass) {
                        o.pass = false;
                        o.note = rec.id + (rhs ? " rhs" : " lhs") + " q^" + std::to_string(e) + ": "
                                 + status_name(rec.status) + " " + rec.detail;
                    }
                }
            }
        return o;
    });

    std::printf("%s\n", failures ? "ACCEPTANCE FAILED" : "ACCEPTANCE PASSED");
    return failures ? 1 : 0;
}
