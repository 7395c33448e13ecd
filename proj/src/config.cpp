#include "ltower/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace ltower {

namespace {

struct Cursor {
    std::string_view text;
    int line;
    std::size_t pos = 0;

    int column() const { return static_cast<int>(pos) + 1; }
    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    void skip_space() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, column()); }
};

std::string parse_quoted(Cursor& c) {
    if (c.done() || c.peek() != '"')
        c.fail("expected a quoted string");
    ++c.pos;
    std::string out;
    while (!c.done() && c.peek() != '"')
        out += c.text[c.pos++];
    if (c.done())
        c.fail("unterminated string");
    ++c.pos;
    return out;
}

std::vector<std::string> parse_string_list(Cursor& c) {
    c.skip_space();
    if (c.done() || c.peek() != '[')
        c.fail("expected a [ ... ] list");
    ++c.pos;
    std::vector<std::string> items;
    while (true) {
        c.skip_space();
        if (c.done())
            c.fail("unterminated list");
        if (c.peek() == ']') {
            ++c.pos;
            break;
        }
        if (!items.empty()) {
            if (c.peek() != ',')
                c.fail("expected , between list items");
            ++c.pos;
            c.skip_space();
        }
        items.push_back(parse_quoted(c));
    }
    c.skip_space();
    if (!c.done())
        c.fail("trailing characters after list");
    return items;
}

std::uint64_t parse_unsigned(Cursor& c, std::uint64_t max) {
    c.skip_space();
    std::size_t start = c.pos;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek())))
        ++c.pos;
    if (c.pos == start)
        c.fail("expected an unsigned integer");
    if (c.pos - start > 19)
        c.fail("value out of range");
    std::uint64_t value = 0;
    for (std::size_t i = start; i < c.pos; ++i) {
        value = value * 10 + static_cast<std::uint64_t>(c.text[i] - '0');
        if (value > max)
            c.fail("value out of range");
    }
    c.skip_space();
    if (!c.done())
        c.fail("trailing characters after value");
    return value;
}

// Strips a # comment that is not inside a quoted string.
std::string_view strip_comment(std::string_view line) {
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"')
            quoted = !quoted;
        else if (line[i] == '#' && !quoted)
            return line.substr(0, i);
    }
    return line;
}

} // namespace

void validate_spec(const SeedSpec& spec) {
    try {
        require_prime(spec.prime);
    } catch (const NotPrime& e) {
        throw SemanticError(e.what());
    }
    if (spec.seeds.empty())
        throw SemanticError("at least one seed is required");
    for (const Seed& s : spec.seeds) {
        try {
            resolve_seed(s, spec.prime, 1);
        } catch (const Error& e) {
            throw SemanticError("seed " + to_string(s) + ": " + e.what());
        }
    }
    try {
        require_unit_seed(spec);
    } catch (const NoUnitSeed& e) {
        throw SemanticError(e.what());
    }
}

ParsedConfig parse_config_text(std::string_view text) {
    ParsedConfig cfg;
    bool saw_prime = false, saw_seeds = false;
    std::vector<std::string> seen_keys;

    int line_no = 0;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t end = text.find('\n', begin);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view raw = text.substr(begin, end - begin);
        ++line_no;
        begin = end + 1;

        std::string_view line = strip_comment(raw);
        Cursor c{line, line_no};
        c.skip_space();
        if (c.done())
            continue;

        std::size_t key_start = c.pos;
        while (!c.done() && (std::isalnum(static_cast<unsigned char>(c.peek())) || c.peek() == '_'))
            ++c.pos;
        std::string key(line.substr(key_start, c.pos - key_start));
        if (key.empty())
            c.fail("expected a key");
        c.skip_space();
        if (c.done() || c.peek() != '=')
            c.fail("expected = after key \"" + key + "\"");
        ++c.pos;

        if (std::find(seen_keys.begin(), seen_keys.end(), key) != seen_keys.end())
            c.fail("duplicate key \"" + key + "\"");
        seen_keys.push_back(key);

        Cursor value{line, line_no, c.pos};
        if (key == "prime") {
            cfg.spec.prime = static_cast<unsigned long>(parse_unsigned(value, std::uint64_t(-1)));
            saw_prime = true;
        } else if (key == "seeds") {
            for (const std::string& item : parse_string_list(value)) {
                try {
                    cfg.spec.seeds.push_back(parse_seed(item));
                } catch (const ParseError& e) {
                    value.fail(e.what());
                }
            }
            saw_seeds = true;
        } else if (key == "levels") {
            cfg.max_level = static_cast<unsigned>(parse_unsigned(value, 64));
        } else if (key == "terms") {
            cfg.terms = static_cast<unsigned>(parse_unsigned(value, 4096));
        } else if (key == "precision") {
            cfg.precision = static_cast<unsigned>(parse_unsigned(value, 1u << 20));
        } else if (key == "cap") {
            cfg.vertex_cap = parse_unsigned(value, std::uint64_t(-1));
        } else {
            c.fail("unknown key \"" + key + "\"");
        }
    }

    if (!saw_prime)
        throw ParseError("config never sets prime", line_no, 1);
    if (!saw_seeds)
        throw ParseError("config never sets seeds", line_no, 1);

    validate_spec(cfg.spec);
    return cfg;
}

ParsedConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

} // namespace ltower
