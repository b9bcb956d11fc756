#include "gat/base.hpp"

#include <cctype>
#include <sstream>

namespace gat {

std::string format_diagnostics(const std::vector<Diagnostic>& diags) {
    std::ostringstream out;
    for (const auto& d : diags) {
        out << d.subject << ": " << d.message << '\n';
    }
    return out.str();
}

namespace {

bool valid_generator_name(std::string_view name) {
    if (name.empty()) return false;
    for (char c : name) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == '^') return false;
    }
    return true;
}

}  // namespace

std::optional<GeneratorSymbol> parse_generator_token(std::string_view token) {
    int exponent = 1;
    std::string_view name = token;
    if (token.size() > 3 && token.substr(token.size() - 3) == "^-1") {
        exponent = -1;
        name = token.substr(0, token.size() - 3);
    }
    if (!valid_generator_name(name)) return std::nullopt;
    return GeneratorSymbol{std::string(name), exponent};
}

std::string inverse_token(const std::string& token) {
    auto sym = parse_generator_token(token);
    if (!sym) throw Error("not a generator token: '" + token + "'");
    return sym->inverse().token();
}

std::vector<std::string> split_tokens(std::string_view line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.emplace_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) out += ' ';
        out += tokens[i];
    }
    return out;
}

}  // namespace gat
