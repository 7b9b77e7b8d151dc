#include "freqinfl/unicode.hpp"

#include <unicode/errorcode.h>
#include <unicode/normalizer2.h>
#include <unicode/locid.h>
#include <unicode/unistr.h>

#include <stdexcept>

namespace freqinfl::unicode {

bool is_valid_utf8(std::string_view bytes) {
    std::size_t i = 0;
    const std::size_t n = bytes.size();
    while (i < n) {
        unsigned char c = static_cast<unsigned char>(bytes[i]);
        std::size_t len;
        unsigned cp;
        if (c < 0x80) {
            ++i;
            continue;
        } else if ((c & 0xe0) == 0xc0) {
            len = 2;
            cp = c & 0x1f;
        } else if ((c & 0xf0) == 0xe0) {
            len = 3;
            cp = c & 0x0f;
        } else if ((c & 0xf8) == 0xf0) {
            len = 4;
            cp = c & 0x07;
        } else {
            return false;
        }
        if (i + len > n) return false;
        for (std::size_t k = 1; k < len; ++k) {
            unsigned char cc = static_cast<unsigned char>(bytes[i + k]);
            if ((cc & 0xc0) != 0x80) return false;
            cp = (cp << 6) | (cc & 0x3f);
        }
        // Reject overlong encodings, surrogates and out-of-range values.
        if (len == 2 && cp < 0x80) return false;
        if (len == 3 && cp < 0x800) return false;
        if (len == 4 && cp < 0x10000) return false;
        if (cp >= 0xd800 && cp <= 0xdfff) return false;
        if (cp > 0x10ffff) return false;
        i += len;
    }
    return true;
}

std::vector<std::size_t> codepoint_offsets(std::string_view bytes) {
    std::vector<std::size_t> offsets;
    offsets.reserve(bytes.size() + 1);
    for (std::size_t i = 0; i < bytes.size(); ++i) {
        if ((static_cast<unsigned char>(bytes[i]) & 0xc0) != 0x80)
            offsets.push_back(i);
    }
    offsets.push_back(bytes.size());
    return offsets;
}

std::size_t codepoint_count(std::string_view bytes) {
    std::size_t n = 0;
    for (char b : bytes)
        if ((static_cast<unsigned char>(b) & 0xc0) != 0x80) ++n;
    return n;
}

std::size_t common_prefix_bytes(std::string_view a, std::string_view b) {
    std::size_t i = 0;
    const std::size_t limit = std::min(a.size(), b.size());
    while (i < limit && a[i] == b[i]) ++i;
    // Back up to a code point boundary so multibyte characters are never
    // split between prefix and suffix. If one string is exhausted, its end
    // is a boundary in the other as well (identical prefix bytes).
    if (i < a.size()) {
        while (i > 0 && (static_cast<unsigned char>(a[i]) & 0xc0) == 0x80) --i;
    }
    return i;
}

namespace {

const icu::Normalizer2& nfc_instance() {
    icu::ErrorCode status;
    const icu::Normalizer2* norm = icu::Normalizer2::getNFCInstance(status);
    if (status.isFailure() || norm == nullptr)
        throw std::runtime_error("ICU NFC normalizer unavailable");
    return *norm;
}

} // namespace

std::string nfc(std::string_view utf8) {
    const icu::Normalizer2& norm = nfc_instance();
    icu::UnicodeString input = icu::UnicodeString::fromUTF8(
        icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
    icu::ErrorCode status;
    if (norm.isNormalized(input, status) && status.isSuccess()) {
        return std::string(utf8);
    }
    status.reset();
    icu::UnicodeString out = norm.normalize(input, status);
    if (status.isFailure())
        throw std::runtime_error("NFC normalization failed");
    std::string result;
    out.toUTF8String(result);
    return result;
}

std::string to_lower(std::string_view utf8) {
    icu::UnicodeString s = icu::UnicodeString::fromUTF8(
        icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
    s.toLower(icu::Locale::getRoot());
    std::string result;
    s.toUTF8String(result);
    return result;
}

} // namespace freqinfl::unicode
