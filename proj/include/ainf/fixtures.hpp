#pragma once

#include "ainf/document.hpp"

#include <string>
#include <vector>

namespace ainf {

// Built-in fixture names accepted by emit_fixture.
const std::vector<std::string>& fixture_names();
// Also includes koszul_dga, a DGA with nonzero differential.
const std::vector<std::string>& all_fixture_names();

Structure build_fixture(const std::string& name, const Ring& ring = Ring::integers());
std::string emit_fixture(const std::string& name, const Ring& ring = Ring::integers());

}  // namespace ainf
