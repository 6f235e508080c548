#ifndef QSHELF_VERIFY_HPP
#define QSHELF_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "qshelf/series.hpp"

namespace qshelf {

enum class Status { pass, fail, skipped };
const char* status_name(Status s);

// c -> -c - 1 at q^exponent on one side of every comparison in the check
struct Fault {
    std::string check;
    bool rhs = false;
    int exponent = 0;
};
Fault parse_fault(const std::string& text); // CHECK:lhs|rhs:EXP

struct Range {
    int lo = 0, hi = 0;
    friend bool operator==(const Range&, const Range&) = default;
};
// "3", "2..4"
Range parse_range(const std::string& s);
std::string to_string(const Range& r);

struct Config {
    Range k{3, 3};
    int degree = 40;
    Range shelves{0, 3};
    Range start_shelf{0, 1};
    int depth = 3;       // matrix and combinatorics checks run j = J+1 .. J+depth
    int nmax = 20;
    int nmax_over = 14;
    int axq_degree = 30; // q-precision of the trivariate series
    bool witness = false;
    std::vector<Fault> faults;

    // ConfigError with the offending value or the computed minimum
    void validate(const std::string& suite) const;
};

struct CheckRecord {
    std::string id;
    std::string anchor; // which identity the check exercises
    Status status = Status::pass;
    std::string detail;
    std::optional<Mismatch> mismatch;
    int through = -1;   // last exponent every series comparison covered; -1 if none
    double seconds = 0; // not serialized
};

struct Report {
    std::string suite;
    Config config;
    std::vector<CheckRecord> checks;

    bool ok() const;
    int count(Status s) const;
};

const std::vector<std::string>& suite_names();
Report run_suite(const std::string& name, const Config& cfg);

// check ids of a suite without running anything
std::vector<std::string> list_checks(const std::string& name, const Config& cfg);

std::string emit_text(const Report& r);
std::string emit_json(const Report& r);
Report parse_json(const std::string& text);

// worker count: QSHELF_THREADS if set and positive, else hardware concurrency
int worker_count();

} // namespace qshelf

#endif
