#pragma once

/**
 * @file variable_table.hpp
 * @brief Ordered, graded variable tables shared by polynomials.
 *
 * A table lists variables in three consecutive blocks: ring generators
 * (cohomology classes), instanton variables q and symbolic parameters.
 * Every polynomial refers to its table through a shared pointer; tables are
 * immutable once built.
 */

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qsc/error.hpp"

namespace qsc {

enum class Block { generator = 0, instanton = 1, parameter = 2 };

inline std::string_view to_string(Block b) {
    switch (b) {
        case Block::generator: return "generator";
        case Block::instanton: return "instanton";
        case Block::parameter: return "parameter";
    }
    return "?";
}

struct Variable {
    std::string name;
    int degree = 1;
    Block block = Block::generator;

    friend bool operator==(const Variable&, const Variable&) = default;
};

inline bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    auto head = static_cast<unsigned char>(s[0]);
    if (!(std::isalpha(head) || s[0] == '_')) return false;
    return std::all_of(s.begin() + 1, s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

class VariableTable {
public:
    explicit VariableTable(std::vector<Variable> vars) : vars_(std::move(vars)) {
        Block last = Block::generator;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            const Variable& v = vars_[i];
            if (!is_identifier(v.name)) throw invalid_input("bad variable name '" + v.name + "'");
            if (!index_.emplace(v.name, i).second)
                throw invalid_input("duplicate variable name '" + v.name + "'");
            if (v.block < last)
                throw invalid_input("variable '" + v.name + "' is out of block order");
            last = v.block;
            bool ok = v.block == Block::parameter ? v.degree == 0 : v.degree >= 1;
            if (!ok) throw invalid_input("variable '" + v.name + "' has an invalid degree");
        }
    }

    std::size_t size() const { return vars_.size(); }
    const Variable& operator[](std::size_t i) const { return vars_[i]; }
    const std::vector<Variable>& variables() const { return vars_; }

    std::optional<std::size_t> index_of(std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// Half-open index range [first, last) of a block.
    std::pair<std::size_t, std::size_t> block_range(Block b) const {
        std::size_t first = 0;
        while (first < vars_.size() && vars_[first].block < b) ++first;
        std::size_t last = first;
        while (last < vars_.size() && vars_[last].block == b) ++last;
        return {first, last};
    }

    std::size_t block_size(Block b) const {
        auto [f, l] = block_range(b);
        return l - f;
    }

    friend bool operator==(const VariableTable& a, const VariableTable& b) { return a.vars_ == b.vars_; }

private:
    std::vector<Variable> vars_;
    std::unordered_map<std::string, std::size_t> index_;
};

using TablePtr = std::shared_ptr<const VariableTable>;

inline TablePtr make_table(std::vector<Variable> vars) {
    return std::make_shared<const VariableTable>(std::move(vars));
}

inline bool same_table(const TablePtr& a, const TablePtr& b) {
    return a == b || (a && b && *a == *b);
}

}  // namespace qsc
