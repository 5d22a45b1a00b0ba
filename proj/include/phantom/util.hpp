#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace phantom::util {

namespace fs = std::filesystem;

// --- strings ---------------------------------------------------------------

std::vector<std::string> split_lines(std::string_view text);
std::string join_lines(const std::vector<std::string>& lines,
                       bool trailing_newline);
std::string trim(std::string_view s);
bool starts_with(std::string_view s, std::string_view prefix);
bool ends_with(std::string_view s, std::string_view suffix);
std::string to_lower(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

// Loose shell-ish tokenization: whitespace split with common punctuation
// stripped. Good enough for marker scanning, not a shell parser.
std::vector<std::string> shell_tokens(std::string_view command);

bool is_hex40(std::string_view s);

// --- files -----------------------------------------------------------------

std::string read_file(const fs::path& path);           // throws Errc::io
void write_file(const fs::path& path, std::string_view content);
// Write to a temp sibling then rename, so readers never see partial content.
void write_file_atomic(const fs::path& path, std::string_view content);
void copy_tree(const fs::path& from, const fs::path& to);
// Content hash of every regular file under root, for isolation checks.
std::uint64_t tree_hash(const fs::path& root);

// Creates a unique directory under `parent` with the given prefix.
fs::path make_unique_dir(const fs::path& parent, const std::string& prefix);

// --- encodings -------------------------------------------------------------

std::string base64_encode(std::string_view bytes);
std::string base64_decode(std::string_view text);      // throws Errc::parse

std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

// --- time ------------------------------------------------------------------

// "YYYY-MM-DDTHH:MM:SSZ" <-> seconds since epoch (UTC).
std::string iso8601_utc(std::int64_t epoch_seconds);
std::int64_t parse_iso8601(std::string_view text);     // throws Errc::parse
std::int64_t now_epoch_seconds();

// --- environment -----------------------------------------------------------

std::optional<std::string> get_env(const std::string& name);

}  // namespace phantom::util
