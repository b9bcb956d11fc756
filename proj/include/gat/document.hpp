#ifndef GAT_DOCUMENT_HPP
#define GAT_DOCUMENT_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "gat/gautomaton.hpp"
#include "gat/group.hpp"
#include "gat/machine.hpp"
#include "gat/transfer.hpp"

namespace gat {

/// A machine document: the machine itself plus the optional sections a
/// word-problem builder or the product construction attach to it.
struct MachineDocument {
    Machine machine;
    std::optional<GroupSpec> wp_group;
    std::optional<MachineClass> wp_certificate;
    std::optional<ProductProvenance> provenance;

    bool operator==(const MachineDocument&) const = default;
};

MachineDocument to_document(const WordProblemMachine& wp);
MachineDocument to_document(const ProductMachine& pm);
WordProblemMachine wp_from_document(const MachineDocument& doc);

/// One frozen language slice of a fixture, with the oracle that
/// reproduces it. Words are space-joined token strings; the empty word
/// is the empty string.
struct LanguageSlice {
    int max_length = 0;
    std::vector<std::string> words;
    std::string oracle;

    bool operator==(const LanguageSlice&) const = default;
};

struct Fixture {
    std::string name;
    std::string notes;
    std::optional<GAutomaton> gautomaton;
    std::optional<Machine> machine;
    std::vector<LanguageSlice> slices;

    bool operator==(const Fixture&) const = default;
};

using DocumentPayload = std::variant<GroupSpec, GAutomaton, MachineDocument, Fixture>;

struct Document {
    DocumentPayload payload;

    std::string kind() const;
};

nlohmann::json group_to_json(const GroupSpec& spec);
nlohmann::json gautomaton_to_json(const GAutomaton& a);
nlohmann::json machine_doc_to_json(const MachineDocument& doc);
nlohmann::json fixture_to_json(const Fixture& fixture);
nlohmann::json document_to_json(const Document& doc);

GroupSpec group_from_json(const nlohmann::json& j, const std::string& ctx);
GAutomaton gautomaton_from_json(const nlohmann::json& j, const std::string& ctx,
                                const std::filesystem::path& base_dir);
MachineDocument machine_doc_from_json(const nlohmann::json& j, const std::string& ctx);
Fixture fixture_from_json(const nlohmann::json& j, const std::string& ctx,
                          const std::filesystem::path& base_dir);

/// Dispatches on the top-level "kind" field. `name` tags error messages;
/// group references by relative path resolve against `base_dir`.
Document document_from_string(const std::string& text, const std::string& name,
                              const std::filesystem::path& base_dir = {});
std::string document_to_string(const Document& doc);

Document load_document(const std::filesystem::path& path);
void save_document(const std::filesystem::path& path, const Document& doc);

}  // namespace gat

#endif
