// File-based fixture specifications: a JSON document with structure
// constants as exact rational strings and sparse index tuples.
#pragma once

#include "hopfchw/fixtures.hpp"

namespace hopfchw {

/// Input problems, with the CLI exit discipline: parse errors, dimension
/// guardrails, and axiom failures are all "input errors" (exit code 2);
/// the message carries the failing equation name for axiom failures.
struct SpecError : std::runtime_error {
    enum class Kind { parse, guardrail, axiom };
    Kind kind;
    SpecError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

/// Parses and eagerly validates a fixture document.
Fixture parse_spec(const std::string& json_text);
Fixture load_spec(const std::string& path);

/// Canonical serialization: fixed key order, index-sorted sparse entries,
/// canonical scalar strings. save(load(x)) is byte-identical for canonical
/// documents.
std::string save_spec(const Fixture& f);
void write_spec(const Fixture& f, const std::string& path);

}  // namespace hopfchw
