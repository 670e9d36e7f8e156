#pragma once

#include "gss/crypto.hpp"

#include <iosfwd>
#include <memory>

namespace gss {

// A parsed file plus the tower that owns the field references inside it.
struct Document {
    enum class Kind { Code, Block, Grs, Family };
    Kind kind = Kind::Code;
    std::shared_ptr<Tower> tower;
    LinearCode code;
    BlockCode block;
    GrsSpec grs;
    SubspaceFamily family;
};

void write_tower(std::ostream& os, const Tower& tw);
std::shared_ptr<Tower> read_tower(std::istream& is);

void save_code(std::ostream& os, const Tower& tw, const LinearCode& C);
void save_block(std::ostream& os, const Tower& tw, const BlockCode& C);
void save_grs(std::ostream& os, const GrsSpec& spec);
void save_family(std::ostream& os, const SubspaceFamily& W);

Document load_document(std::istream& is);
Document load_document_file(const std::string& path);

void save_code_file(const std::string& path, const Tower& tw, const LinearCode& C);
void save_block_file(const std::string& path, const Tower& tw, const BlockCode& C);
void save_grs_file(const std::string& path, const GrsSpec& spec);
void save_family_file(const std::string& path, const SubspaceFamily& W);

struct LoadedPublicKey {
    std::shared_ptr<Tower> tower;
    PublicKey key;
};

struct LoadedSecretKey {
    std::shared_ptr<Tower> tower;
    SecretKey key;
};

void save_public_key(const std::string& path, const PublicKey& key);
void save_secret_key(const std::string& path, const SecretKey& key);
LoadedPublicKey load_public_key(const std::string& path);
LoadedSecretKey load_secret_key(const std::string& path);

// Whitespace-separated field elements, one codeword per line style helpers
// used by the decode CLI.
std::vector<fe> parse_word(const std::string& text);
std::string format_word(const std::vector<fe>& word);

} // namespace gss
