#pragma once

#include <optional>
#include <string>
#include <vector>

namespace pha {

/// Concrete failure evidence: which basis inputs broke the identity and
/// the two sides' canonical values, so failures can be re-evaluated.
struct Witness {
    std::vector<std::string> inputs;
    std::string lhs, rhs;
    std::string note;
};

/// Outcome of one verification check. A check over an enumerable family
/// can only ever pass on a window, and the window is always recorded.
struct CheckReport {
    enum class Status { Pass, Fail, PassOnWindow };

    std::string name;
    Status status = Status::Pass;
    std::string window;  // non-empty iff status == PassOnWindow
    std::optional<Witness> witness;
    long cases = 0;      // number of identities evaluated

    bool ok() const { return status != Status::Fail; }

    static CheckReport pass(std::string name, long cases) {
        CheckReport r;
        r.name = std::move(name);
        r.status = Status::Pass;
        r.cases = cases;
        return r;
    }
    static CheckReport pass_on_window(std::string name, long cases, std::string window) {
        CheckReport r;
        r.name = std::move(name);
        r.status = Status::PassOnWindow;
        r.window = std::move(window);
        r.cases = cases;
        return r;
    }
    static CheckReport fail(std::string name, Witness w, long cases = 0) {
        CheckReport r;
        r.name = std::move(name);
        r.status = Status::Fail;
        r.witness = std::move(w);
        r.cases = cases;
        return r;
    }
};

inline bool all_ok(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports)
        if (!r.ok()) return false;
    return true;
}

inline std::string status_str(CheckReport::Status s) {
    switch (s) {
    case CheckReport::Status::Pass: return "pass";
    case CheckReport::Status::Fail: return "fail";
    case CheckReport::Status::PassOnWindow: return "pass-on-window";
    }
    return "?";
}

} // namespace pha
