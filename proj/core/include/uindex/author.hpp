#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace uindex {

/// One author identity as it appears on a paper byline.
///
/// `persistent_id` is an opaque identifier (ORCID or similar). When present
/// it dominates identity comparison; otherwise identity falls back to a
/// normalized family-name + first-initial key.
struct AuthorRef {
    std::string display_name;
    std::optional<std::string> persistent_id;

    bool has_persistent_id() const { return persistent_id && !persistent_id->empty(); }
};

/// Derives the identity key for an author.
///
/// With a persistent id the key is "id:<pid>" verbatim. Without one it is
/// "name:<family>/<initial>" where the family name is the last
/// whitespace-separated token (or the segment before a comma, for
/// "Family, Given" bylines), lowercased with diacritics folded to ASCII,
/// and the initial is the first letter of the given name.
///
/// Deterministic and idempotent. Throws ValidationError when display_name
/// trims to empty.
std::string normalize_author(const AuthorRef& a);

/// Name-based key ignoring any persistent id; same rules as above.
std::string author_name_key(const AuthorRef& a);

/// True iff the two refs denote the same identity. Persistent ids are
/// compared when both sides carry one; otherwise both sides compare by
/// their name keys.
bool same_author(const AuthorRef& a, const AuthorRef& b);

/// Lowercases ASCII and folds common Latin diacritics (e.g. "José" -> "jose").
/// Codepoints without a fold pass through unchanged.
std::string fold_latin(std::string_view utf8);

/// Strips leading/trailing ASCII whitespace.
std::string_view trim(std::string_view s);

} // namespace uindex
