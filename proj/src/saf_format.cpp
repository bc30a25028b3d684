#include "socarg/saf_format.hpp"

#include "socarg/errors.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace socarg {

namespace {

bool is_ident_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    SafDocument parse() {
        SafDocument doc;
        std::set<ArgumentId> voted;
        skip_blank();
        while (!at_end()) {
            SafStatement stmt = statement();
            if (const auto* votes = std::get_if<VotesDecl>(&stmt.fact)) {
                if (!voted.insert(votes->name).second) {
                    throw DuplicateVotes("second votes statement for '" + votes->name.str() + "'", stmt.line,
                                         stmt.column);
                }
            }
            doc.statements.push_back(std::move(stmt));
            skip_blank();
        }
        return doc;
    }

private:
    struct Position {
        std::size_t line;
        std::size_t column;
    };

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    Position here() const { return {line_, column_}; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_blank() {
        while (!at_end()) {
            const char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '#') {
                while (!at_end() && peek() != '\n') {
                    advance();
                }
            } else {
                break;
            }
        }
    }

    [[noreturn]] void fail(const std::string& what, Position at) const {
        throw SyntaxError(what, at.line, at.column);
    }

    void expect(char c) {
        skip_blank();
        if (peek() != c) {
            std::string found = at_end() ? "end of input" : std::string("'") + peek() + "'";
            fail(std::string("expected '") + c + "', found " + found, here());
        }
        advance();
    }

    std::string identifier(const char* what) {
        skip_blank();
        const Position start = here();
        const std::size_t begin = pos_;
        while (!at_end() && is_ident_char(peek())) {
            advance();
        }
        if (pos_ == begin) {
            std::string found = at_end() ? "end of input" : std::string("'") + peek() + "'";
            fail(std::string("expected ") + what + ", found " + found, start);
        }
        return std::string(text_.substr(begin, pos_ - begin));
    }

    std::uint64_t count() {
        skip_blank();
        const Position start = here();
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            advance();
        }
        const std::size_t begin = pos_;
        while (!at_end() && peek() >= '0' && peek() <= '9') {
            advance();
        }
        if (pos_ == begin) {
            fail("expected a vote count", start);
        }
        if (!at_end() && is_ident_char(peek())) {
            fail("malformed vote count", start);
        }
        if (negative) {
            throw NegativeCount("vote counts must be non-negative", start.line, start.column);
        }
        std::uint64_t value = 0;
        const char* first = text_.data() + begin;
        const char* last = text_.data() + pos_;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last) {
            fail("vote count out of range", start);
        }
        return value;
    }

    SafStatement statement() {
        const Position start = here();
        const std::string keyword = identifier("a statement");
        SafStatement stmt{ArgumentDecl{ArgumentId("_")}, start.line, start.column};
        expect('(');
        if (keyword == "arg") {
            stmt.fact = ArgumentDecl{ArgumentId(identifier("an argument name"))};
        } else if (keyword == "votes") {
            ArgumentId name(identifier("an argument name"));
            expect(',');
            const std::uint64_t pro = count();
            expect(',');
            const std::uint64_t con = count();
            stmt.fact = VotesDecl{std::move(name), pro, con};
        } else if (keyword == "att") {
            ArgumentId attacker(identifier("an argument name"));
            expect(',');
            ArgumentId target(identifier("an argument name"));
            stmt.fact = AttackDecl{std::move(attacker), std::move(target)};
        } else {
            fail("unknown statement '" + keyword + "'", start);
        }
        expect(')');
        expect('.');
        return stmt;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

} // namespace

SafDocument parse_saf(std::string_view text) {
    return Parser(text).parse();
}

std::string serialize_saf(const SafDocument& doc) {
    std::ostringstream out;
    for (const auto& stmt : doc.statements) {
        std::visit(
            [&](const auto& fact) {
                using T = std::decay_t<decltype(fact)>;
                if constexpr (std::is_same_v<T, ArgumentDecl>) {
                    out << "arg(" << fact.name.str() << ").\n";
                } else if constexpr (std::is_same_v<T, VotesDecl>) {
                    out << "votes(" << fact.name.str() << "," << fact.pro << "," << fact.con << ").\n";
                } else {
                    out << "att(" << fact.attacker.str() << "," << fact.target.str() << ").\n";
                }
            },
            stmt.fact);
    }
    return out.str();
}

SafDocument to_document(const SocialFramework& fw) {
    SafDocument doc;
    std::size_t line = 1;
    auto push = [&](auto fact) { doc.statements.push_back({std::move(fact), line++, 1}); };
    for (const auto& id : fw.arguments()) {
        push(ArgumentDecl{id});
    }
    for (const auto& attack : fw.attacks()) {
        push(AttackDecl{attack.attacker, attack.target});
    }
    for (std::size_t i = 0; i < fw.size(); ++i) {
        const VoteRecord& v = fw.votes(i);
        if (v.pro != 0 || v.con != 0) {
            push(VotesDecl{fw.argument(i), v.pro, v.con});
        }
    }
    return doc;
}

SocialFramework framework_from_document(const SafDocument& doc) {
    std::vector<ArgumentId> arguments;
    std::vector<Attack> attacks;
    std::map<ArgumentId, VoteRecord> votes;
    for (const auto& stmt : doc.statements) {
        if (const auto* a = std::get_if<ArgumentDecl>(&stmt.fact)) {
            arguments.push_back(a->name);
        } else if (const auto* v = std::get_if<VotesDecl>(&stmt.fact)) {
            votes.insert_or_assign(v->name, VoteRecord{v->pro, v->con});
        } else {
            const auto& att = std::get<AttackDecl>(stmt.fact);
            attacks.push_back({att.attacker, att.target});
        }
    }
    return build_framework(std::move(arguments), std::move(attacks), votes);
}

SocialFramework load_saf_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return framework_from_document(parse_saf(buffer.str()));
}

} // namespace socarg
