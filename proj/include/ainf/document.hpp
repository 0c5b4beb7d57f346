#pragma once

#include "ainf/cochain.hpp"

#include <map>
#include <string>

namespace ainf {

struct Options {
    int length = 4;
    int max_r = 6;
    int max_rs = 4;
    bool operator==(const Options&) const = default;
};

// In-memory form of a structure document.  "diagonal", "tensor" and "dual"
// are reserved bimodule names for the constructions on the algebra; they are
// rebuilt on load and never serialized.
struct Structure {
    Ring ring;
    AlgebraPtr algebra;
    std::map<std::string, BimodulePtr> bimodules;  // user-defined only
    std::map<std::string, MorphismPtr> morphisms;
    std::map<std::string, HochschildCochain> cochains;
    Options options;

    BimodulePtr diagonal, tensor, dual;

    void build_constructions();
    BimodulePtr bimodule(const std::string& name) const;  // UnknownName
    std::string bimodule_name(const BimodulePtr& M) const;
};

bool is_reserved_bimodule(const std::string& name);

Structure parse_document(const std::string& text);
std::string serialize_document(const Structure& s);

}  // namespace ainf
