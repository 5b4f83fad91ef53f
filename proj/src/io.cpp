#include "wsm/io.hpp"

#include <cassert>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <vector>

namespace wsm {

namespace {

constexpr std::string_view kHeaderTag = "#alphabet";

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

struct Token {
    std::string_view text;
    std::size_t line;     // 1-based
    std::size_t column;   // 1-based
};

// Whitespace-separated tokens with their source locations.
std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t line = 1, column = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        if (is_space(text[i])) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
            ++i;
            continue;
        }
        const std::size_t start = i;
        const std::size_t start_col = column;
        while (i < text.size() && !is_space(text[i])) {
            ++i;
            ++column;
        }
        tokens.push_back({text.substr(start, i - start), line, start_col});
    }
    return tokens;
}

[[noreturn]] void fail(ParseErrorKind kind, const Token& tok,
                       const std::string& message) {
    throw ParseError(kind, tok.line, tok.column, message);
}

Alphabet parse_header(const std::vector<Token>& tokens) {
    if (tokens.empty())
        throw ParseError(ParseErrorKind::EmptyFile, 1, 1, "empty file");
    if (tokens[0].text != kHeaderTag)
        fail(ParseErrorKind::MalformedHeader, tokens[0],
             "expected '#alphabet' header");
    if (tokens.size() < 2 || tokens[1].line != tokens[0].line)
        fail(ParseErrorKind::MalformedHeader, tokens[0],
             "header is missing the alphabet letters");
    try {
        return Alphabet(tokens[1].text);
    } catch (const Error& e) {
        fail(ParseErrorKind::MalformedHeader, tokens[1], e.what());
    }
}

Symbol parse_letter(const Alphabet& alphabet, const Token& tok, char c,
                    std::size_t col_offset) {
    if (!alphabet.contains(c))
        throw ParseError(ParseErrorKind::UnknownLetter, tok.line,
                         tok.column + col_offset,
                         std::string("letter '") + c + "' not in alphabet");
    return alphabet.index_of(c);
}

// [A:0.6,C:0.4] with no interior whitespace.
std::vector<WeightedEntry> parse_bracket_token(const Alphabet& alphabet,
                                               const Token& tok) {
    const std::string_view body = tok.text;
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        fail(ParseErrorKind::MalformedToken, tok, "malformed position token");

    std::vector<WeightedEntry> entries;
    bool seen[256] = {};
    std::size_t i = 1;
    const std::size_t end = body.size() - 1;
    while (true) {
        if (i >= end)
            fail(ParseErrorKind::MalformedToken, tok, "empty entry in position token");
        const char letter = body[i];
        const Symbol sym = parse_letter(alphabet, tok, letter, i);
        if (seen[static_cast<unsigned char>(letter)])
            throw ParseError(ParseErrorKind::DuplicateLetter, tok.line,
                             tok.column + i,
                             std::string("letter '") + letter +
                                 "' repeated within a position");
        seen[static_cast<unsigned char>(letter)] = true;
        ++i;
        if (i >= end || body[i] != ':')
            fail(ParseErrorKind::MalformedToken, tok, "expected ':' after letter");
        ++i;
        double prob = 0.0;
        const auto [next, ec] =
            std::from_chars(body.data() + i, body.data() + end, prob);
        if (ec != std::errc{} || next == body.data() + i)
            fail(ParseErrorKind::MalformedToken, tok, "malformed probability literal");
        if (!(prob > 0.0) || !std::isfinite(prob))
            fail(ParseErrorKind::MalformedToken, tok,
                 "probability must be a positive number");
        entries.push_back({sym, prob});
        i = static_cast<std::size_t>(next - body.data());
        if (i == end) break;
        if (body[i] != ',')
            fail(ParseErrorKind::MalformedToken, tok, "expected ',' between entries");
        ++i;
    }
    return entries;
}

void append_probability(std::string& out, double p) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", p);
    out += buf;
}

} // namespace

WeightedString parse_weighted(std::string_view text) {
    const auto tokens = tokenize(text);
    Alphabet alphabet = parse_header(tokens);

    if (tokens.size() <= 2)
        throw ParseError(ParseErrorKind::EmptyFile, tokens[1].line,
                         tokens[1].column, "file declares no positions");

    WeightedString::Builder builder(alphabet, tokens.size() - 2);
    for (std::size_t k = 2; k < tokens.size(); ++k) {
        const Token& tok = tokens[k];
        if (tok.text.size() == 1) {
            builder.add_solid(parse_letter(alphabet, tok, tok.text[0], 0));
            continue;
        }
        if (tok.text.front() != '[')
            fail(ParseErrorKind::MalformedToken, tok, "malformed position token");
        const auto entries = parse_bracket_token(alphabet, tok);
        double sum = 0.0;
        for (const auto& e : entries) sum += e.prob;
        if (std::abs(sum - 1.0) > WeightedString::kSumTolerance)
            fail(ParseErrorKind::SumOutOfTolerance, tok,
                 "position probabilities sum to " + std::to_string(sum));
        builder.add_position(entries);
    }
    return builder.build();
}

std::string serialize_weighted(const WeightedString& ws) {
    std::string out = std::string(kHeaderTag) + " " + ws.alphabet().letters() + "\n";
    constexpr std::size_t kTokensPerLine = 8;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        const auto pos = ws.position(i);
        if (pos.size() == 1 && pos[0].prob == 1.0) {
            out += ws.alphabet().letter(pos[0].letter);
        } else {
            out += '[';
            for (std::size_t k = 0; k < pos.size(); ++k) {
                if (k) out += ',';
                out += ws.alphabet().letter(pos[k].letter);
                out += ':';
                append_probability(out, pos[k].prob);
            }
            out += ']';
        }
        out += (i % kTokensPerLine == kTokensPerLine - 1 || i + 1 == ws.size())
                   ? '\n'
                   : ' ';
    }
    return out;
}

PlainSequence parse_plain(std::string_view text) {
    const auto tokens = tokenize(text);
    Alphabet alphabet = parse_header(tokens);

    Symbols symbols;
    for (std::size_t k = 2; k < tokens.size(); ++k) {
        const Token& tok = tokens[k];
        for (std::size_t i = 0; i < tok.text.size(); ++i)
            symbols.push_back(parse_letter(alphabet, tok, tok.text[i], i));
    }
    if (symbols.empty())
        throw ParseError(ParseErrorKind::EmptyFile, tokens[1].line,
                         tokens[1].column, "file declares no letters");
    return {std::move(alphabet), std::move(symbols)};
}

std::string serialize_plain(const Alphabet& alphabet,
                            std::span<const Symbol> symbols) {
    std::string out = std::string(kHeaderTag) + " " + alphabet.letters() + "\n";
    constexpr std::size_t kWidth = 80;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        out += alphabet.letter(symbols[i]);
        if (i % kWidth == kWidth - 1 || i + 1 == symbols.size()) out += '\n';
    }
    return out;
}

} // namespace wsm
