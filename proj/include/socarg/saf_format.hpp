#pragma once

#include "socarg/framework.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace socarg {

// The .saf text format: one fact per statement, any number per line.
//
//   # comment to end of line
//   arg(a).
//   votes(a, 3, 1).
//   att(a, b).
//
// Whitespace is ignored between tokens. Arguments must be declared with
// arg/1 somewhere in the file; forward references are fine.

struct ArgumentDecl {
    ArgumentId name;
    friend bool operator==(const ArgumentDecl&, const ArgumentDecl&) = default;
};

struct VotesDecl {
    ArgumentId name;
    std::uint64_t pro = 0;
    std::uint64_t con = 0;
    friend bool operator==(const VotesDecl&, const VotesDecl&) = default;
};

struct AttackDecl {
    ArgumentId attacker;
    ArgumentId target;
    friend bool operator==(const AttackDecl&, const AttackDecl&) = default;
};

struct SafStatement {
    std::variant<ArgumentDecl, VotesDecl, AttackDecl> fact;
    std::size_t line = 0;
    std::size_t column = 0;

    /// Source positions are not part of a statement's identity.
    friend bool operator==(const SafStatement& a, const SafStatement& b) { return a.fact == b.fact; }
};

struct SafDocument {
    std::vector<SafStatement> statements;
    friend bool operator==(const SafDocument&, const SafDocument&) = default;
};

/// Throws SyntaxError, DuplicateVotes or NegativeCount, each with the
/// 1-based line and column of the offending token.
SafDocument parse_saf(std::string_view text);

/// One statement per line, in document order.
std::string serialize_saf(const SafDocument& doc);

/// Canonical document: arguments, then attacks, then non-zero votes.
SafDocument to_document(const SocialFramework& fw);

/// Throws the build_framework errors for undeclared or repeated names.
SocialFramework framework_from_document(const SafDocument& doc);

/// Throws IoError when the file cannot be read.
SocialFramework load_saf_file(const std::filesystem::path& path);

} // namespace socarg
