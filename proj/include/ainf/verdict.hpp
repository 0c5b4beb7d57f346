#pragma once

#include <string>

namespace ainf {

struct Verdict {
    bool holds = true;
    std::string identity;  // which equation was checked
    std::string witness;   // first basis word with nonzero residual
    std::string residual;

    std::string describe() const {
        if (holds) return identity + ": holds";
        return identity + ": FAILS at " + witness + " residual " + residual;
    }
};

}  // namespace ainf
