#pragma once

#include "ainf/graded.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace ainf {

// Sparse table  basis word -> homogeneous combination in the output module.
class MultilinearOp {
public:
    MultilinearOp() = default;
    MultilinearOp(std::vector<ModulePtr> signature, ModulePtr output, int degree);

    int arity() const { return static_cast<int>(signature_.size()); }
    const std::vector<ModulePtr>& signature() const { return signature_; }
    const ModulePtr& output() const { return output_; }
    int degree() const { return degree_; }

    int input_degree(const Word& w) const;
    // Validates the degree of the value; zero values erase the entry.
    void set(const Word& inputs, Vec value, const Ring& ring);
    void add(const Word& inputs, int out, const Scalar& c, const Ring& ring);

    const Vec* lookup(const Word& w) const {
        auto it = table_.find(w);
        return it == table_.end() ? nullptr : &it->second;
    }
    const std::map<Word, Vec>& table() const { return table_; }
    bool is_zero() const { return table_.empty(); }
    bool operator==(const MultilinearOp& o) const { return table_ == o.table_ && degree_ == o.degree_; }

private:
    std::vector<ModulePtr> signature_;
    ModulePtr output_;
    int degree_ = 0;
    std::map<Word, Vec> table_;
};

Element apply(const MultilinearOp& op, std::span<const Element> inputs, const Ring& ring);

std::string format_word(std::span<const ModulePtr> slots, const Word& w);

// All words with slot i ranging over [0, sizes[i]), in lexicographic order.
class WordSpace {
public:
    explicit WordSpace(std::vector<int> sizes);
    std::uint64_t count() const { return count_; }
    Word at(std::uint64_t idx) const;

private:
    std::vector<int> sizes_;
    std::uint64_t count_ = 1;
};

}  // namespace ainf
