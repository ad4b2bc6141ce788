#pragma once

#include <chrono>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symchern {

enum class Status { pass, fail, precondition_violated };

inline std::string status_name(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::precondition_violated: return "precondition-violated";
    }
    return "fail";
}

struct Counterexample {
    std::string params;
    std::string values;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

// Outcome of a scan or identity check. Findings are observations that do not
// affect the status, such as violations inside ranges where a statement is
// only conjectured.
struct VerificationReport {
    std::string target;
    std::string range;
    Status status = Status::pass;
    std::vector<Counterexample> counterexamples;
    std::vector<Counterexample> findings;
    std::vector<std::string> notes;
    double elapsed_ms = 0;

    bool passed() const { return status == Status::pass; }

    void fail(std::string params, std::string values)
    {
        status = Status::fail;
        counterexamples.push_back({std::move(params), std::move(values)});
    }

    void precondition(std::string params, std::string values)
    {
        if (status == Status::pass)
            status = Status::precondition_violated;
        counterexamples.push_back({std::move(params), std::move(values)});
    }

    void find(std::string params, std::string values) { findings.push_back({std::move(params), std::move(values)}); }

    // Folds another report in; the worse status wins.
    void merge(const VerificationReport& o)
    {
        if (o.status == Status::fail)
            status = Status::fail;
        else if (o.status == Status::precondition_violated && status == Status::pass)
            status = o.status;
        counterexamples.insert(counterexamples.end(), o.counterexamples.begin(), o.counterexamples.end());
        findings.insert(findings.end(), o.findings.begin(), o.findings.end());
        notes.insert(notes.end(), o.notes.begin(), o.notes.end());
    }
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// Raised when a brute-force product would exceed its configured size.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace symchern
