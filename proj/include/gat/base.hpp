#ifndef GAT_BASE_HPP
#define GAT_BASE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gat {

/// Error thrown on contract violations: family mismatches, malformed
/// documents, unknown tokens. Validators report Diagnostics instead.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One validation finding. `subject` names the offending state/edge/field.
struct Diagnostic {
    std::string subject;
    std::string message;

    bool operator==(const Diagnostic&) const = default;
};

std::string format_diagnostics(const std::vector<Diagnostic>& diags);

/// A formal generator symbol: a name plus an exponent of +1 or -1.
/// Rendered as `name` or `name^-1`; the caret form is the wire format.
struct GeneratorSymbol {
    std::string name;
    int exponent = 1;

    GeneratorSymbol inverse() const { return {name, -exponent}; }
    std::string token() const { return exponent >= 0 ? name : name + "^-1"; }

    bool operator==(const GeneratorSymbol&) const = default;
    bool operator<(const GeneratorSymbol& o) const {
        return name != o.name ? name < o.name : exponent < o.exponent;
    }
};

/// Parses `a` or `a^-1` into a GeneratorSymbol. Returns nullopt when the
/// name part is empty, contains whitespace or a caret, or the exponent
/// suffix is malformed.
std::optional<GeneratorSymbol> parse_generator_token(std::string_view token);

/// Token of the formal inverse: `a` <-> `a^-1`.
std::string inverse_token(const std::string& token);

/// Splits a space-separated token line, as used for CLI --word input.
std::vector<std::string> split_tokens(std::string_view line);

std::string join_tokens(const std::vector<std::string>& tokens);

}  // namespace gat

#endif
