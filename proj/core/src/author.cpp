#include "uindex/author.hpp"

#include "uindex/errors.hpp"

#include <algorithm>
#include <iterator>
#include <cctype>
#include <cstdint>

namespace uindex {

namespace {

struct Fold {
    std::uint32_t cp;
    const char* ascii;
};

// Latin-1 Supplement and Latin Extended-A, plus a few Extended-B letters
// that show up in author names. Sorted by codepoint.
constexpr Fold kFolds[]{
    {0x00C0, "a"}, {0x00C1, "a"}, {0x00C2, "a"}, {0x00C3, "a"}, {0x00C4, "a"},
    {0x00C5, "a"}, {0x00C6, "ae"}, {0x00C7, "c"}, {0x00C8, "e"}, {0x00C9, "e"},
    {0x00CA, "e"}, {0x00CB, "e"}, {0x00CC, "i"}, {0x00CD, "i"}, {0x00CE, "i"},
    {0x00CF, "i"}, {0x00D0, "d"}, {0x00D1, "n"}, {0x00D2, "o"}, {0x00D3, "o"},
    {0x00D4, "o"}, {0x00D5, "o"}, {0x00D6, "o"}, {0x00D8, "o"}, {0x00D9, "u"},
    {0x00DA, "u"}, {0x00DB, "u"}, {0x00DC, "u"}, {0x00DD, "y"}, {0x00DE, "th"},
    {0x00DF, "ss"},
    {0x00E0, "a"}, {0x00E1, "a"}, {0x00E2, "a"}, {0x00E3, "a"}, {0x00E4, "a"},
    {0x00E5, "a"}, {0x00E6, "ae"}, {0x00E7, "c"}, {0x00E8, "e"}, {0x00E9, "e"},
    {0x00EA, "e"}, {0x00EB, "e"}, {0x00EC, "i"}, {0x00ED, "i"}, {0x00EE, "i"},
    {0x00EF, "i"}, {0x00F0, "d"}, {0x00F1, "n"}, {0x00F2, "o"}, {0x00F3, "o"},
    {0x00F4, "o"}, {0x00F5, "o"}, {0x00F6, "o"}, {0x00F8, "o"}, {0x00F9, "u"},
    {0x00FA, "u"}, {0x00FB, "u"}, {0x00FC, "u"}, {0x00FD, "y"}, {0x00FE, "th"},
    {0x00FF, "y"},
    {0x0100, "a"}, {0x0101, "a"}, {0x0102, "a"}, {0x0103, "a"}, {0x0104, "a"},
    {0x0105, "a"}, {0x0106, "c"}, {0x0107, "c"}, {0x0108, "c"}, {0x0109, "c"},
    {0x010A, "c"}, {0x010B, "c"}, {0x010C, "c"}, {0x010D, "c"}, {0x010E, "d"},
    {0x010F, "d"}, {0x0110, "d"}, {0x0111, "d"}, {0x0112, "e"}, {0x0113, "e"},
    {0x0114, "e"}, {0x0115, "e"}, {0x0116, "e"}, {0x0117, "e"}, {0x0118, "e"},
    {0x0119, "e"}, {0x011A, "e"}, {0x011B, "e"}, {0x011C, "g"}, {0x011D, "g"},
    {0x011E, "g"}, {0x011F, "g"}, {0x0120, "g"}, {0x0121, "g"}, {0x0122, "g"},
    {0x0123, "g"}, {0x0124, "h"}, {0x0125, "h"}, {0x0126, "h"}, {0x0127, "h"},
    {0x0128, "i"}, {0x0129, "i"}, {0x012A, "i"}, {0x012B, "i"}, {0x012E, "i"},
    {0x012F, "i"}, {0x0130, "i"}, {0x0131, "i"}, {0x0134, "j"}, {0x0135, "j"},
    {0x0136, "k"}, {0x0137, "k"}, {0x0139, "l"}, {0x013A, "l"}, {0x013B, "l"},
    {0x013C, "l"}, {0x013D, "l"}, {0x013E, "l"}, {0x0141, "l"}, {0x0142, "l"},
    {0x0143, "n"}, {0x0144, "n"}, {0x0145, "n"}, {0x0146, "n"}, {0x0147, "n"},
    {0x0148, "n"}, {0x014C, "o"}, {0x014D, "o"}, {0x0150, "o"}, {0x0151, "o"},
    {0x0152, "oe"}, {0x0153, "oe"}, {0x0154, "r"}, {0x0155, "r"}, {0x0158, "r"},
    {0x0159, "r"}, {0x015A, "s"}, {0x015B, "s"}, {0x015E, "s"}, {0x015F, "s"},
    {0x0160, "s"}, {0x0161, "s"}, {0x0162, "t"}, {0x0163, "t"}, {0x0164, "t"},
    {0x0165, "t"}, {0x0168, "u"}, {0x0169, "u"}, {0x016A, "u"}, {0x016B, "u"},
    {0x016E, "u"}, {0x016F, "u"}, {0x0170, "u"}, {0x0171, "u"}, {0x0172, "u"},
    {0x0173, "u"}, {0x0179, "z"}, {0x017A, "z"}, {0x017B, "z"}, {0x017C, "z"},
    {0x017D, "z"}, {0x017E, "z"},
};

const char* find_fold(std::uint32_t cp) {
    const auto* end = kFolds + std::size(kFolds);
    const auto* it = std::lower_bound(kFolds, end,
                                      cp, [](const Fold& f, std::uint32_t c) { return f.cp < c; });
    if (it != end && it->cp == cp) return it->ascii;
    return nullptr;
}

// Decodes one UTF-8 codepoint at s[i], advancing i. Invalid sequences are
// consumed one byte at a time and returned as-is.
std::uint32_t next_codepoint(std::string_view s, std::size_t& i) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    std::size_t len = 1;
    std::uint32_t cp = b0;
    if ((b0 & 0x80u) == 0x00u) {
        len = 1;
    } else if ((b0 & 0xE0u) == 0xC0u) {
        len = 2;
        cp = b0 & 0x1Fu;
    } else if ((b0 & 0xF0u) == 0xE0u) {
        len = 3;
        cp = b0 & 0x0Fu;
    } else if ((b0 & 0xF8u) == 0xF0u) {
        len = 4;
        cp = b0 & 0x07u;
    }
    if (i + len > s.size()) {
        ++i;
        return b0;
    }
    for (std::size_t k = 1; k < len; ++k) {
        const auto bk = static_cast<unsigned char>(s[i + k]);
        if ((bk & 0xC0u) != 0x80u) {
            ++i;
            return b0;
        }
        cp = (cp << 6) | (bk & 0x3Fu);
    }
    i += len;
    return cp;
}

void append_codepoint_utf8(std::string& out, std::uint32_t cp) {
    if (cp < 0x80u) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800u) {
        out.push_back(static_cast<char>(0xC0u | (cp >> 6)));
        out.push_back(static_cast<char>(0x80u | (cp & 0x3Fu)));
    } else if (cp < 0x10000u) {
        out.push_back(static_cast<char>(0xE0u | (cp >> 12)));
        out.push_back(static_cast<char>(0x80u | ((cp >> 6) & 0x3Fu)));
        out.push_back(static_cast<char>(0x80u | (cp & 0x3Fu)));
    } else {
        out.push_back(static_cast<char>(0xF0u | (cp >> 18)));
        out.push_back(static_cast<char>(0x80u | ((cp >> 12) & 0x3Fu)));
        out.push_back(static_cast<char>(0x80u | ((cp >> 6) & 0x3Fu)));
        out.push_back(static_cast<char>(0x80u | (cp & 0x3Fu)));
    }
}

// Splits a display name into (family, given) per the key rule: the segment
// before a comma is the family name; otherwise the last whitespace token.
std::pair<std::string_view, std::string_view> split_name(std::string_view name) {
    if (const auto comma = name.find(','); comma != std::string_view::npos) {
        return {trim(name.substr(0, comma)), trim(name.substr(comma + 1))};
    }
    const auto last_space = name.find_last_of(" \t");
    if (last_space == std::string_view::npos) {
        return {name, std::string_view{}};
    }
    return {trim(name.substr(last_space + 1)), trim(name.substr(0, last_space))};
}

// First letter or digit of the given name, folded.
std::string given_initial(std::string_view given) {
    const std::string folded = fold_latin(given);
    for (const char ch : folded) {
        if (std::isalnum(static_cast<unsigned char>(ch))) return std::string(1, ch);
    }
    return {};
}

} // namespace

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n\f\v");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n\f\v");
    return s.substr(first, last - first + 1);
}

std::string fold_latin(std::string_view utf8) {
    std::string out;
    out.reserve(utf8.size());
    std::size_t i = 0;
    while (i < utf8.size()) {
        const std::uint32_t cp = next_codepoint(utf8, i);
        if (cp < 0x80u) {
            out.push_back(static_cast<char>(std::tolower(static_cast<int>(cp))));
        } else if (const char* ascii = find_fold(cp)) {
            out += ascii;
        } else {
            append_codepoint_utf8(out, cp);
        }
    }
    return out;
}

std::string author_name_key(const AuthorRef& a) {
    const std::string_view name = trim(a.display_name);
    if (name.empty()) {
        throw ValidationError("author has empty display name (persistent_id: " +
                              a.persistent_id.value_or("<none>") + ")");
    }
    const auto [family, given] = split_name(name);
    return "name:" + fold_latin(family) + "/" + given_initial(given);
}

std::string normalize_author(const AuthorRef& a) {
    if (trim(a.display_name).empty()) {
        throw ValidationError("author has empty display name (persistent_id: " +
                              a.persistent_id.value_or("<none>") + ")");
    }
    if (a.has_persistent_id()) {
        return "id:" + *a.persistent_id;
    }
    return author_name_key(a);
}

bool same_author(const AuthorRef& a, const AuthorRef& b) {
    if (a.has_persistent_id() && b.has_persistent_id()) {
        return *a.persistent_id == *b.persistent_id;
    }
    // With at most one persistent id the ids cannot decide; compare names.
    return author_name_key(a) == author_name_key(b);
}

} // namespace uindex
