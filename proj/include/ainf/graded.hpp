#pragma once

#include "ainf/errors.hpp"
#include "ainf/ring.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace ainf {

struct BasisElement {
    std::string name;
    int degree = 0;
};

class GradedModule {
public:
    GradedModule() = default;
    explicit GradedModule(std::vector<BasisElement> basis);

    int size() const { return static_cast<int>(basis_.size()); }
    const std::string& name(int i) const { return basis_.at(i).name; }
    int degree(int i) const { return basis_[i].degree; }
    const std::vector<BasisElement>& basis() const { return basis_; }

    std::optional<int> find(const std::string& name) const;
    int index(const std::string& name) const;  // throws UnknownName

    GradedModule shifted(int delta) const;
    bool operator==(const GradedModule& o) const;

private:
    std::vector<BasisElement> basis_;
    std::unordered_map<std::string, int> index_;
};

using ModulePtr = std::shared_ptr<const GradedModule>;

inline ModulePtr make_module(std::vector<BasisElement> basis) {
    return std::make_shared<const GradedModule>(std::move(basis));
}

using Word = std::vector<int>;

// Canonical sparse linear combination: no zero coefficients, keys ordered.
template <class Key>
class LinearCombination {
public:
    using Map = std::map<Key, Scalar>;

    void add(const Key& k, const Scalar& c, const Ring& ring) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) it->second += c;
        ring.reduce(it->second);
        if (it->second == 0) terms_.erase(it);
    }
    void add(const LinearCombination& o, const Scalar& c, const Ring& ring) {
        if (c == 0) return;
        for (const auto& [k, v] : o.terms_) add(k, v * c, ring);
    }
    void scale(const Scalar& c, const Ring& ring) {
        if (c == 0) {
            terms_.clear();
            return;
        }
        for (auto it = terms_.begin(); it != terms_.end();) {
            it->second *= c;
            ring.reduce(it->second);
            it = it->second == 0 ? terms_.erase(it) : std::next(it);
        }
    }

    Scalar coefficient(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Scalar(0) : it->second;
    }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Map& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    bool operator==(const LinearCombination& o) const { return terms_ == o.terms_; }

private:
    Map terms_;
};

using Vec = LinearCombination<int>;
using WordComb = LinearCombination<Word>;

// Element of a graded module: the public face of Vec.
class Element {
public:
    Element() = default;
    explicit Element(ModulePtr module) : module_(std::move(module)) {}
    Element(ModulePtr module, Vec terms) : module_(std::move(module)), terms_(std::move(terms)) {}

    static Element basis(ModulePtr module, int i, const Scalar& c, const Ring& ring);

    const ModulePtr& module() const { return module_; }
    const Vec& terms() const { return terms_; }
    Vec& terms() { return terms_; }

    bool is_zero() const { return terms_.is_zero(); }
    bool homogeneous() const;
    void add(const Element& o, const Scalar& c, const Ring& ring);

    bool operator==(const Element& o) const { return terms_ == o.terms_; }

private:
    ModulePtr module_;
    Vec terms_;
};

int degree(const Element& e);
int reduced_index(const Element& e);

std::string format_vec(const GradedModule& m, const Vec& v);
std::string format_element(const Element& e);

}  // namespace ainf
