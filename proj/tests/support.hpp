#pragma once

// Shared helpers for the test and acceptance suites. Everything here is
// deliberately independent of the library's multiplication path so it
// can serve as an oracle for it.

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "linemul/digits.hpp"

namespace testsupport {

// Positional evaluation, written out longhand (powers, not Horner).
inline linemul::BigInt positional_value(const std::vector<int>& digits, int base) {
    linemul::BigInt total = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        linemul::BigInt place = 1;
        for (std::size_t p = 0; p < digits.size() - 1 - i; ++p) place *= base;
        total += digits[i] * place;
    }
    return total;
}

inline linemul::BigInt ref_product(const linemul::DigitString& a,
                                   const linemul::DigitString& b) {
    return positional_value(a.digits, a.base.value()) *
           positional_value(b.digits, b.base.value());
}

// Random normalized factor; ~1 in 16 is exactly zero when len is 1.
inline linemul::DigitString random_factor(std::mt19937& rng, int len, linemul::Base base) {
    std::uniform_int_distribution<int> any(0, base.value() - 1);
    std::uniform_int_distribution<int> lead(1, base.value() - 1);
    std::vector<int> digits(static_cast<std::size_t>(len));
    digits[0] = len == 1 ? any(rng) : lead(rng);
    for (std::size_t i = 1; i < digits.size(); ++i) digits[i] = any(rng);
    return {std::move(digits), base};
}

struct CliResult {
    int exit_code;
    std::string output; // stdout and stderr combined
};

inline CliResult run_cli(const std::string& args) {
#ifdef LINEMUL_CLI_PATH
    const std::string cmd = std::string(LINEMUL_CLI_PATH) + " " + args + " 2>&1";
#else
    const std::string cmd = "linemul " + args + " 2>&1";
#endif
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, "popen failed"};
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

inline std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// Minimal JSON-schema checker covering the subset the trace schema uses:
// type, properties, required, additionalProperties, items, enum,
// minimum, maximum, minItems, maxItems.
inline bool matches_schema(const nlohmann::json& value, const nlohmann::json& schema,
                           std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };

    if (schema.contains("enum")) {
        for (const auto& e : schema["enum"])
            if (value == e) return true;
        return fail("value not in enum");
    }

    if (schema.contains("type")) {
        const std::string t = schema["type"];
        if (t == "object" && !value.is_object()) return fail("expected object");
        if (t == "array" && !value.is_array()) return fail("expected array");
        if (t == "string" && !value.is_string()) return fail("expected string");
        if (t == "boolean" && !value.is_boolean()) return fail("expected boolean");
        if (t == "integer" && !value.is_number_integer()) return fail("expected integer");
    }

    if (value.is_number_integer()) {
        if (schema.contains("minimum") && value.get<std::int64_t>() < schema["minimum"].get<std::int64_t>())
            return fail("below minimum");
        if (schema.contains("maximum") && value.get<std::int64_t>() > schema["maximum"].get<std::int64_t>())
            return fail("above maximum");
    }

    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>()))
                    return fail("missing key " + key.get<std::string>());
        const bool closed = schema.value("additionalProperties", true) == false;
        for (const auto& [key, sub] : value.items()) {
            if (schema.contains("properties") && schema["properties"].contains(key)) {
                if (!matches_schema(sub, schema["properties"][key], why)) return false;
            } else if (closed) {
                return fail("unexpected key " + key);
            }
        }
    }

    if (value.is_array()) {
        if (schema.contains("minItems") && value.size() < schema["minItems"].get<std::size_t>())
            return fail("too few items");
        if (schema.contains("maxItems") && value.size() > schema["maxItems"].get<std::size_t>())
            return fail("too many items");
        if (schema.contains("items"))
            for (const auto& item : value)
                if (!matches_schema(item, schema["items"], why)) return false;
    }

    return true;
}

} // namespace testsupport
