#pragma once

#include <string>
#include <vector>

namespace g2abv {

enum class Status { Pass, Fail, Warn };
std::string status_name(Status s);

struct CheckItem {
    std::string name;
    Status status = Status::Pass;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckItem> items;

    void add(const std::string& name, bool ok, const std::string& detail = "");
    void warn(const std::string& name, const std::string& detail);
    bool passed() const;
    int count(Status s) const;
};

// tables | fpf | inversion | aubert | lifting
const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name);
std::vector<SuiteReport> run_all();

SuiteReport verify_tables();
SuiteReport verify_fpf();
SuiteReport verify_inversion();
SuiteReport verify_aubert();
SuiteReport verify_lifting();

struct FuzzResult {
    int samples = 0;
    int failures = 0;
    std::string first_failure;
};
// Random torus elements with unit orders <= 12 and exponent denominators <= 6.
FuzzResult classify_fuzz(int samples, unsigned seed);

}  // namespace g2abv
