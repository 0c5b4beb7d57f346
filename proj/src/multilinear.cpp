#include "ainf/multilinear.hpp"

namespace ainf {

MultilinearOp::MultilinearOp(std::vector<ModulePtr> signature, ModulePtr output, int degree)
    : signature_(std::move(signature)), output_(std::move(output)), degree_(degree) {}

int MultilinearOp::input_degree(const Word& w) const {
    int d = 0;
    for (int i = 0; i < arity(); ++i) d += signature_[i]->degree(w[i]);
    return d;
}

void MultilinearOp::set(const Word& inputs, Vec value, const Ring& ring) {
    if (static_cast<int>(inputs.size()) != arity())
        throw Error(ErrorCode::ArityMismatch, "table key of length " + std::to_string(inputs.size()) +
                                                  " for an operation of arity " + std::to_string(arity()));
    for (int i = 0; i < arity(); ++i)
        if (inputs[i] < 0 || inputs[i] >= signature_[i]->size())
            throw Error(ErrorCode::UnknownName, "table key slot " + std::to_string(i) + " out of range");
    Vec v;
    v.add(value, 1, ring);
    if (v.is_zero()) {
        table_.erase(inputs);
        return;
    }
    const int expected = input_degree(inputs) + degree_;
    for (const auto& [o, c] : v) {
        if (output_->degree(o) != expected)
            throw Error(ErrorCode::DegreeMismatch,
                        "entry " + format_word(signature_, inputs) + " -> " + format_vec(*output_, v) +
                            ": expected output degree " + std::to_string(expected) + ", '" + output_->name(o) +
                            "' has degree " + std::to_string(output_->degree(o)));
    }
    table_[inputs] = std::move(v);
}

void MultilinearOp::add(const Word& inputs, int out, const Scalar& c, const Ring& ring) {
    Vec v;
    if (auto* cur = lookup(inputs)) v = *cur;
    v.add(out, c, ring);
    set(inputs, std::move(v), ring);
}

Element apply(const MultilinearOp& op, std::span<const Element> inputs, const Ring& ring) {
    if (static_cast<int>(inputs.size()) != op.arity())
        throw Error(ErrorCode::ArityMismatch, "expected " + std::to_string(op.arity()) + " inputs, got " +
                                                  std::to_string(inputs.size()));
    for (int i = 0; i < op.arity(); ++i) {
        const auto& m = inputs[i].module();
        if (m && !(m == op.signature()[i] || *m == *op.signature()[i]))
            throw Error(ErrorCode::ModuleMismatch, "input " + std::to_string(i) + " lives in the wrong module");
    }
    Element out(op.output());
    for (const auto& in : inputs)
        if (in.is_zero()) return out;

    // Expand the product of the input supports.
    std::vector<std::vector<std::pair<int, Scalar>>> supp(op.arity());
    std::vector<int> sizes;
    for (int i = 0; i < op.arity(); ++i) {
        for (const auto& t : inputs[i].terms()) supp[i].push_back(t);
        sizes.push_back(static_cast<int>(supp[i].size()));
    }
    WordSpace space(sizes);
    Word w(op.arity());
    for (std::uint64_t k = 0; k < space.count(); ++k) {
        Word pick = space.at(k);
        Scalar c = 1;
        for (int i = 0; i < op.arity(); ++i) {
            w[i] = supp[i][pick[i]].first;
            c *= supp[i][pick[i]].second;
        }
        if (const Vec* v = op.lookup(w)) out.terms().add(*v, c, ring);
    }
    return out;
}

std::string format_word(std::span<const ModulePtr> slots, const Word& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ", ";
        s += slots[i]->name(w[i]);
    }
    return s + ")";
}

WordSpace::WordSpace(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    for (int s : sizes_) count_ *= static_cast<std::uint64_t>(s);
}

Word WordSpace::at(std::uint64_t idx) const {
    Word w(sizes_.size());
    for (std::size_t i = sizes_.size(); i-- > 0;) {
        w[i] = static_cast<int>(idx % sizes_[i]);
        idx /= sizes_[i];
    }
    return w;
}

}  // namespace ainf
