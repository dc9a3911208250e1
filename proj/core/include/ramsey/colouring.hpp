#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/blocks.hpp"

namespace ramsey {

// Total map [m]^n -> [k].  Either an explicit table (lexicographic word
// order, leftmost letter most significant), a named formula, or a derived
// composition of other colourings.  Value type; cheap to copy.
class Colouring {
public:
    static constexpr std::uint64_t kDefaultTableCap = 1u << 20;

    static Colouring table(int m, int n, int k, std::vector<int> entries);
    static Colouring formula(const std::string& name, const std::map<std::string, int>& params,
                             int m, int n);
    static Colouring constant(int m, int n, int k, int colour);
    static Colouring derived(int m, int n, int k, std::string description,
                             std::function<int(const Word&)> eval);

    int m() const { return m_; }
    int n() const { return n_; }
    int k() const { return k_; }

    // Colour of a word; validates the word lies in [m]^n.
    int colour(const Word& w) const;
    int colour(const std::vector<int>& letters) const;

    bool is_table() const { return kind_ == Kind::Table; }
    bool is_formula() const { return kind_ == Kind::Formula; }
    const std::vector<int>& entries() const;
    const std::string& formula_name() const { return name_; }
    const std::map<std::string, int>& formula_params() const { return params_; }
    const std::string& description() const { return name_; }

    // Explicit-table copy of this colouring; throws EnumerationLimitError
    // when m^n exceeds the cap.
    Colouring materialize(std::uint64_t table_cap = kDefaultTableCap) const;

    // Lexicographic index of a word (0-based), leftmost letter significant.
    static std::uint64_t word_index(const Word& w);

private:
    enum class Kind { Table, Formula, Derived };

    Colouring() = default;
    void check_word(const Word& w) const;

    Kind kind_ = Kind::Table;
    int m_ = 1, n_ = 1, k_ = 1;
    std::string name_;                       // formula name or derived description
    std::map<std::string, int> params_;      // formula parameters
    std::shared_ptr<const std::vector<int>> table_;
    std::function<int(const Word&)> eval_;
};

// True iff the colouring assigns a single colour to every word of the set.
bool is_monochromatic(const Colouring& c, const std::vector<Word>& words);

} // namespace ramsey
