#pragma once

#include <string>
#include <vector>

namespace proofloop {

struct SourcePos {
    std::string file;
    int line = 0;
    int col = 0;

    bool operator==(const SourcePos&) const = default;
};

struct SourceSpan {
    SourcePos begin;
    SourcePos end;

    bool operator==(const SourceSpan&) const = default;
};

enum class Severity { Error, Warning };

struct Diagnostic {
    SourcePos pos;
    Severity severity = Severity::Error;
    std::string message;
};

inline const char* severity_name(Severity s) {
    return s == Severity::Error ? "error" : "warning";
}

/// Renders one diagnostic as `file:line:col: severity: message`.
std::string format_diagnostic(const Diagnostic& d);

/// Renders all diagnostics, one per line.
std::string format_diagnostics(const std::vector<Diagnostic>& ds);

inline bool has_errors(const std::vector<Diagnostic>& ds) {
    for (const auto& d : ds)
        if (d.severity == Severity::Error) return true;
    return false;
}

} // namespace proofloop
