#include "ramsey/colouring.hpp"

#include <algorithm>
#include <cmath>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

std::uint64_t checked_pow(int m, int n, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (int i = 0; i < n; ++i) {
        if (v > cap / static_cast<std::uint64_t>(m)) return cap + 1;
        v *= static_cast<std::uint64_t>(m);
    }
    return v;
}

int require_param(const std::map<std::string, int>& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) throw ConfigError("formula colouring: missing parameter '" + key + "'");
    return it->second;
}

} // namespace

Colouring Colouring::table(int m, int n, int k, std::vector<int> entries) {
    if (m < 1 || n < 0 || k < 1) throw DomainError("Colouring: bad dimensions");
    const std::uint64_t size = checked_pow(m, n, kDefaultTableCap);
    if (size > kDefaultTableCap)
        throw EnumerationLimitError("Colouring: table would exceed the size cap");
    if (entries.size() != size) throw DomainError("Colouring: table size must be m^n");
    for (int c : entries)
        if (c < 1 || c > k) throw DomainError("Colouring: table colour out of [k]");
    Colouring out;
    out.kind_ = Kind::Table;
    out.m_ = m;
    out.n_ = n;
    out.k_ = k;
    out.table_ = std::make_shared<const std::vector<int>>(std::move(entries));
    return out;
}

Colouring Colouring::constant(int m, int n, int k, int colour) {
    return formula("constant", {{"colour", colour}, {"k", k}}, m, n);
}

Colouring Colouring::formula(const std::string& name, const std::map<std::string, int>& params,
                             int m, int n) {
    if (m < 1 || n < 0) throw DomainError("Colouring: bad dimensions");
    Colouring out;
    out.kind_ = Kind::Formula;
    out.m_ = m;
    out.n_ = n;
    out.name_ = name;
    out.params_ = params;

    if (name == "constant") {
        const int colour = require_param(params, "colour");
        const int k = params.count("k") ? params.at("k") : colour;
        if (colour < 1 || colour > k) throw DomainError("constant colouring: colour out of [k]");
        out.k_ = k;
        out.eval_ = [colour](const Word&) { return colour; };
    } else if (name == "first_letter") {
        if (n < 1) throw DomainError("first_letter colouring needs n >= 1");
        out.k_ = m;
        out.eval_ = [](const Word& w) { return w.letters.front(); };
    } else if (name == "count") {
        // 1 + number of occurrences of a letter
        const int letter = require_param(params, "letter");
        out.k_ = n + 1;
        out.eval_ = [letter](const Word& w) {
            return 1 + static_cast<int>(std::count(w.letters.begin(), w.letters.end(), letter));
        };
    } else if (name == "count_mod") {
        const int letter = require_param(params, "letter");
        const int mod = require_param(params, "mod");
        if (mod < 1) throw DomainError("count_mod: modulus must be positive");
        out.k_ = mod;
        out.eval_ = [letter, mod](const Word& w) {
            int c = static_cast<int>(std::count(w.letters.begin(), w.letters.end(), letter));
            return 1 + (c % mod);
        };
    } else if (name == "count_window") {
        // Colour 1 when the count of `letter`, taken mod 2d, lies in [1, d].
        const int letter = require_param(params, "letter");
        const int d = require_param(params, "d");
        if (d < 1) throw DomainError("count_window: d must be positive");
        out.k_ = 2;
        out.eval_ = [letter, d](const Word& w) {
            int c = static_cast<int>(std::count(w.letters.begin(), w.letters.end(), letter));
            int rem = c % (2 * d);
            return (rem >= 1 && rem <= d) ? 1 : 2;
        };
    } else if (name == "first_position") {
        // 1 + position of the first occurrence of a letter (1 if absent).
        const int letter = require_param(params, "letter");
        out.k_ = n + 1;
        out.eval_ = [letter](const Word& w) {
            for (int i = 0; i < w.n(); ++i)
                if (w.letters[i] == letter) return i + 2;
            return 1;
        };
    } else if (name == "identity") {
        const std::uint64_t size = checked_pow(m, n, kDefaultTableCap);
        if (size > kDefaultTableCap)
            throw EnumerationLimitError("identity colouring: m^n exceeds the cap");
        out.k_ = static_cast<int>(size);
        out.eval_ = [](const Word& w) { return static_cast<int>(word_index(w)) + 1; };
    } else {
        throw ConfigError("unknown formula colouring '" + name + "'");
    }
    return out;
}

Colouring Colouring::derived(int m, int n, int k, std::string description,
                             std::function<int(const Word&)> eval) {
    if (m < 1 || n < 0 || k < 1) throw DomainError("Colouring: bad dimensions");
    Colouring out;
    out.kind_ = Kind::Derived;
    out.m_ = m;
    out.n_ = n;
    out.k_ = k;
    out.name_ = std::move(description);
    out.eval_ = std::move(eval);
    return out;
}

void Colouring::check_word(const Word& w) const {
    if (w.n() != n_) throw DomainError("Colouring: word length differs from domain length");
    for (int letter : w.letters)
        if (letter < 1 || letter > m_) throw DomainError("Colouring: word letter out of [m]");
}

int Colouring::colour(const Word& w) const {
    check_word(w);
    if (kind_ == Kind::Table) return (*table_)[static_cast<std::size_t>(word_index(w))];
    return eval_(w);
}

int Colouring::colour(const std::vector<int>& letters) const {
    Word w;
    w.m = m_;
    w.letters = letters;
    return colour(w);
}

const std::vector<int>& Colouring::entries() const {
    if (kind_ != Kind::Table) throw ConfigError("Colouring: not a table colouring");
    return *table_;
}

std::uint64_t Colouring::word_index(const Word& w) {
    std::uint64_t idx = 0;
    for (int letter : w.letters) idx = idx * static_cast<std::uint64_t>(w.m) + static_cast<std::uint64_t>(letter - 1);
    return idx;
}

Colouring Colouring::materialize(std::uint64_t table_cap) const {
    const std::uint64_t size = checked_pow(m_, n_, table_cap);
    if (size > table_cap)
        throw EnumerationLimitError("materialize: m^n exceeds the table cap");
    std::vector<int> entries;
    entries.reserve(size);
    Word w;
    w.m = m_;
    w.letters.assign(n_, 1);
    if (n_ == 0) {
        entries.push_back(colour(w));
    } else {
        while (true) {
            entries.push_back(colour(w));
            int i = n_ - 1;
            while (i >= 0 && w.letters[i] == m_) {
                w.letters[i] = 1;
                --i;
            }
            if (i < 0) break;
            ++w.letters[i];
        }
    }
    return table(m_, n_, k_, std::move(entries));
}

bool is_monochromatic(const Colouring& c, const std::vector<Word>& words) {
    if (words.empty()) return true;
    const int first = c.colour(words.front());
    for (std::size_t i = 1; i < words.size(); ++i)
        if (c.colour(words[i]) != first) return false;
    return true;
}

} // namespace ramsey
