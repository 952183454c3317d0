#include "noc/word.hpp"

#include <algorithm>
#include <charconv>

namespace noc {

Word prefix(const Word& w, std::size_t k) {
    if (k > w.size())
        throw RangeError("prefix length " + std::to_string(k) + " exceeds word length " +
                         std::to_string(w.size()));
    return Word(std::vector<Symbol>(w.symbols().begin(), w.symbols().begin() + k));
}

Word suffix(const Word& w, std::size_t k) {
    if (k > w.size())
        throw RangeError("suffix length " + std::to_string(k) + " exceeds word length " +
                         std::to_string(w.size()));
    return Word(std::vector<Symbol>(w.symbols().end() - k, w.symbols().end()));
}

std::vector<Word> proper_prefixes(const Word& w) {
    std::vector<Word> out;
    if (w.empty()) return out;
    out.reserve(w.size() - 1);
    for (std::size_t k = 1; k + 1 <= w.size(); ++k) out.push_back(prefix(w, k));
    return out;
}

std::vector<Word> proper_suffixes(const Word& w) {
    std::vector<Word> out;
    if (w.empty()) return out;
    out.reserve(w.size() - 1);
    for (std::size_t k = 1; k + 1 <= w.size(); ++k) out.push_back(suffix(w, k));
    return out;
}

std::optional<std::size_t> subword_offset(const Word& u, const Word& v) {
    if (u.empty() || v.empty())
        throw DomainError("subword test requires non-empty words");
    if (u.size() > v.size()) return std::nullopt;
    for (std::size_t j = 0; j + u.size() <= v.size(); ++j) {
        bool match = true;
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (u[i] != v[j + i]) {
                match = false;
                break;
            }
        }
        if (match) return j;
    }
    return std::nullopt;
}

bool is_subword(const Word& u, const Word& v) { return subword_offset(u, v).has_value(); }

std::optional<std::size_t> shared_border_length(const Word& u, const Word& v) {
    if (u.empty() || v.empty()) return std::nullopt;
    const std::size_t kmax = std::min(u.size(), v.size()) - 1;
    for (std::size_t k = 1; k <= kmax; ++k) {
        bool match = true;
        for (std::size_t i = 0; i < k; ++i) {
            if (u[i] != v[v.size() - k + i]) {
                match = false;
                break;
            }
        }
        if (match) return k;
    }
    return std::nullopt;
}

bool is_self_non_overlapping(const Word& w) {
    if (w.size() < 2)
        throw DomainError("self-overlap is defined for words of length >= 2, got length " +
                          std::to_string(w.size()));
    return !shared_border_length(w, w).has_value();
}

Word concat(const Word& a, const Word& b) {
    std::vector<Symbol> s;
    s.reserve(a.size() + b.size());
    s.insert(s.end(), a.symbols().begin(), a.symbols().end());
    s.insert(s.end(), b.symbols().begin(), b.symbols().end());
    return Word(std::move(s));
}

std::string to_string(const Word& w, int q) {
    std::string out;
    if (q <= 10) {
        out.reserve(w.size());
        for (Symbol s : w.symbols()) out.push_back(static_cast<char>('0' + s));
        return out;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(w[i]);
    }
    return out;
}

namespace {

Symbol parse_symbol(std::string_view text, int q) {
    Symbol value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw ParseError("invalid symbol '" + std::string(text) + "'");
    if (value < 0 || value >= q)
        throw ParseError("symbol " + std::to_string(value) + " outside alphabet of size " +
                         std::to_string(q));
    return value;
}

} // namespace

Word parse_word(std::string_view text, int q) {
    if (text.empty()) throw ParseError("empty word text");
    std::vector<Symbol> symbols;
    if (text.find(',') != std::string_view::npos) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t next = text.find(',', pos);
            if (next == std::string_view::npos) next = text.size();
            symbols.push_back(parse_symbol(text.substr(pos, next - pos), q));
            pos = next + 1;
            if (next == text.size()) break;
        }
    } else if (q > 10) {
        // Comma form with a single element carries no separator, so a lone
        // token is one symbol; digit strings are rejected by the range check.
        symbols.push_back(parse_symbol(text, q));
    } else {
        symbols.reserve(text.size());
        for (char c : text) {
            if (c < '0' || c > '9') throw ParseError(std::string("invalid digit '") + c + "'");
            Symbol s = c - '0';
            if (s >= q)
                throw ParseError("symbol " + std::to_string(s) + " outside alphabet of size " +
                                 std::to_string(q));
            symbols.push_back(s);
        }
    }
    return Word(std::move(symbols));
}

bool next_word(std::vector<Symbol>& symbols, int q) {
    for (std::size_t i = symbols.size(); i-- > 0;) {
        if (symbols[i] + 1 < q) {
            ++symbols[i];
            std::fill(symbols.begin() + i + 1, symbols.end(), 0);
            return true;
        }
    }
    std::fill(symbols.begin(), symbols.end(), 0);
    return false;
}

std::vector<Word> all_words(int q, int length) {
    if (q < 2) throw DomainError("alphabet size must be at least 2");
    if (length < 1) throw DomainError("word length must be at least 1");
    std::vector<Word> out;
    std::vector<Symbol> current(length, 0);
    do {
        out.emplace_back(current);
    } while (next_word(current, q));
    return out;
}

} // namespace noc
