#include "ainf/graded.hpp"

namespace ainf {

GradedModule::GradedModule(std::vector<BasisElement> basis) : basis_(std::move(basis)) {
    for (int i = 0; i < size(); ++i) {
        if (!index_.emplace(basis_[i].name, i).second)
            throw Error(ErrorCode::SyntaxError, "duplicate basis name '" + basis_[i].name + "'");
    }
}

std::optional<int> GradedModule::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int GradedModule::index(const std::string& name) const {
    auto i = find(name);
    if (!i) throw Error(ErrorCode::UnknownName, "no basis element '" + name + "'");
    return *i;
}

GradedModule GradedModule::shifted(int delta) const {
    auto b = basis_;
    for (auto& e : b) e.degree += delta;
    return GradedModule(std::move(b));
}

bool GradedModule::operator==(const GradedModule& o) const {
    if (size() != o.size()) return false;
    for (int i = 0; i < size(); ++i)
        if (basis_[i].name != o.basis_[i].name || basis_[i].degree != o.basis_[i].degree) return false;
    return true;
}

Element Element::basis(ModulePtr module, int i, const Scalar& c, const Ring& ring) {
    Element e(std::move(module));
    e.terms_.add(i, c, ring);
    return e;
}

bool Element::homogeneous() const {
    if (terms_.is_zero()) return true;
    int d = module_->degree(terms_.begin()->first);
    for (const auto& [i, c] : terms_)
        if (module_->degree(i) != d) return false;
    return true;
}

void Element::add(const Element& o, const Scalar& c, const Ring& ring) {
    if (module_ && o.module_ && !(module_ == o.module_ || *module_ == *o.module_))
        throw Error(ErrorCode::ModuleMismatch, "adding elements of different modules");
    if (!module_) module_ = o.module_;
    terms_.add(o.terms_, c, ring);
}

int degree(const Element& e) {
    if (e.is_zero()) throw Error(ErrorCode::ZeroElement, "degree of zero is undefined");
    if (!e.homogeneous()) throw Error(ErrorCode::Inhomogeneous, format_element(e));
    return e.module()->degree(e.terms().begin()->first);
}

int reduced_index(const Element& e) { return degree(e) - 1; }

std::string format_vec(const GradedModule& m, const Vec& v) {
    if (v.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [i, c] : v) {
        if (!first) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        first = false;
        Scalar a = abs(c);
        if (a != 1) s += a.get_str() + "*";
        s += m.name(i);
    }
    return s;
}

std::string format_element(const Element& e) { return format_vec(*e.module(), e.terms()); }

}  // namespace ainf
