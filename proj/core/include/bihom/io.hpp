#pragma once

#include <bihom/algebra.hpp>
#include <bihom/cohomology.hpp>
#include <bihom/constructions.hpp>
#include <bihom/modules.hpp>

#include <string>
#include <variant>

namespace bihom {

// JSON file formats. Rationals are strings "p/q" (or "p"); plain JSON integers are
// accepted too, floating point never is. Tensors come dense as triple-nested arrays
// t[i][j][k] or sparse as lists of [i, j, k, "p/q"] entries with 0-based indices;
// emitters write dense below dimension 16 and sparse from there on.

BiHomPoissonAlgebra algebra_from_json_text(const std::string& text);
BiHomPoissonAlgebra load_algebra(const std::string& path);
std::string algebra_to_json_text(const BiHomPoissonAlgebra& a);

using ModuleFile = std::variant<LeftModuleRep, RightModuleRep>;
ModuleFile module_from_json_text(const std::string& text, const BiHomPoissonAlgebra& alg);
ModuleFile load_module(const std::string& path, const BiHomPoissonAlgebra& alg);
std::string module_to_json_text(const LeftModuleRep& m);
std::string module_to_json_text(const RightModuleRep& m);

LieStructure lie_from_json_text(const std::string& text);
LieStructure load_lie(const std::string& path);

RatMatrix matrix_from_json_text(const std::string& text);
RatMatrix load_matrix(const std::string& path);
std::string matrix_to_json_text(const RatMatrix& m);

std::string report_to_json_text(const CheckReport& rep);
std::string report_to_text(const CheckReport& rep,
                           const std::vector<std::string>* witness_names = nullptr);
std::string cohomology_report_to_json_text(const CohomologyReport& rep);
std::string cohomology_report_to_text(const CohomologyReport& rep);
std::string subspace_to_json_text(const SubspaceBasis& b);

std::string load_text(const std::string& path);
void save_text(const std::string& path, const std::string& text);

} // namespace bihom
