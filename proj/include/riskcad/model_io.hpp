#pragma once

#include "riskcad/model.hpp"

namespace riskcad {

struct ParseError {
    enum class Kind { Syntax, Schema, DuplicateId, DanglingReference, Range };
    Kind kind = Kind::Schema;
    std::string path; // document path of the offending node, e.g. /threat_allocations/3/fi
    std::string message;
};

const char* to_string(ParseError::Kind kind);

struct ParseResult {
    std::optional<Model> model; // set iff errors is empty
    std::vector<ParseError> errors;
    bool ok() const { return model.has_value(); }
};

// Parses a model document. Reports every independent error it can find, not
// just the first; the model is produced only when no error was recorded.
ParseResult parse_model(const std::string& text);

// Canonical document form: object keys sorted lexicographically, arrays in
// declaration order, two-space indent, LF line endings, trailing newline.
// Parsing a canonical document and serializing the result reproduces the
// input byte for byte.
std::string serialize_model(const Model& model);

} // namespace riskcad
