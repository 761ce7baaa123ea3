#include <bihom/errors.hpp>
#include <bihom/io.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace bihom {

using nlohmann::json;

namespace {

Rat rat_from_json(const json& j) {
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_number_float())
        throw ParseError("floating point numbers are not accepted; write rationals as \"p/q\"");
    throw ParseError("expected a rational (string \"p/q\" or integer)");
}

json rat_to_json(const Rat& r) {
    return rat_to_string(r);
}

RatMatrix matrix_from_json(const json& j, const std::string& what) {
    if (!j.is_array()) throw ParseError(what + ": matrix must be an array of rows");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    if (rows > 0) {
        if (!j[0].is_array()) throw ParseError(what + ": matrix rows must be arrays");
        cols = j[0].size();
    }
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw ParseError(what + ": ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = rat_from_json(j[i][c]);
    }
    return m;
}

json matrix_to_json(const RatMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

bool looks_sparse(const json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array()) return false;
    const json& e = j[0];
    return e.size() == 4 && e[0].is_number_integer() && e[1].is_number_integer() &&
           e[2].is_number_integer() && (e[3].is_string() || e[3].is_number_integer());
}

RatTensor3 tensor_from_json(const json& j, std::size_t d1, std::size_t d2, std::size_t d3,
                            const std::string& what) {
    RatTensor3 t(d1, d2, d3);
    if (!j.is_array()) throw ParseError(what + ": tensor must be an array");
    if (j.empty()) return t; // zero tensor
    if (looks_sparse(j)) {
        for (const json& e : j) {
            if (!e.is_array() || e.size() != 4)
                throw ParseError(what + ": sparse entries must be [i, j, k, value]");
            const long long i = e[0].get<long long>();
            const long long jj = e[1].get<long long>();
            const long long k = e[2].get<long long>();
            if (i < 0 || jj < 0 || k < 0 || static_cast<std::size_t>(i) >= d1 ||
                static_cast<std::size_t>(jj) >= d2 || static_cast<std::size_t>(k) >= d3)
                throw ParseError(what + ": sparse entry index out of range");
            t(static_cast<std::size_t>(i), static_cast<std::size_t>(jj),
              static_cast<std::size_t>(k)) = rat_from_json(e[3]);
        }
        return t;
    }
    if (j.size() != d1) throw ParseError(what + ": tensor first dimension mismatch");
    for (std::size_t i = 0; i < d1; ++i) {
        if (!j[i].is_array() || j[i].size() != d2)
            throw ParseError(what + ": ragged tensor (second dimension)");
        for (std::size_t q = 0; q < d2; ++q) {
            if (!j[i][q].is_array() || j[i][q].size() != d3)
                throw ParseError(what + ": ragged tensor (third dimension)");
            for (std::size_t k = 0; k < d3; ++k) t(i, q, k) = rat_from_json(j[i][q][k]);
        }
    }
    return t;
}

json tensor_to_json(const RatTensor3& t, bool sparse) {
    if (sparse) {
        json entries = json::array();
        for (std::size_t i = 0; i < t.d1(); ++i)
            for (std::size_t j = 0; j < t.d2(); ++j)
                for (std::size_t k = 0; k < t.d3(); ++k)
                    if (t(i, j, k) != 0)
                        entries.push_back(json::array({i, j, k, rat_to_json(t(i, j, k))}));
        return entries;
    }
    json out = json::array();
    for (std::size_t i = 0; i < t.d1(); ++i) {
        json plane = json::array();
        for (std::size_t j = 0; j < t.d2(); ++j) {
            json fiber = json::array();
            for (std::size_t k = 0; k < t.d3(); ++k) fiber.push_back(rat_to_json(t(i, j, k)));
            plane.push_back(std::move(fiber));
        }
        out.push_back(std::move(plane));
    }
    return out;
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::size_t dim_from_json(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 0)
        throw ParseError(std::string("missing or invalid \"") + key + "\"");
    return static_cast<std::size_t>(j[key].get<long long>());
}

std::vector<std::string> names_from_json(const json& j, std::size_t n, const char* key,
                                         const char* prefix) {
    std::vector<std::string> names;
    if (j.contains(key)) {
        if (!j[key].is_array() || j[key].size() != n)
            throw ParseError(std::string("\"") + key + "\" must list one name per basis element");
        for (const json& e : j[key]) {
            if (!e.is_string()) throw ParseError(std::string("\"") + key + "\" entries must be strings");
            names.push_back(e.get<std::string>());
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i + 1));
    }
    return names;
}

} // namespace

BiHomPoissonAlgebra algebra_from_json_text(const std::string& text) {
    const json j = parse_text(text);
    if (!j.is_object()) throw ParseError("algebra file: top level must be an object");
    const std::size_t n = dim_from_json(j, "dim");

    BiHomPoissonAlgebra a;
    a.dim = n;
    a.basis_names = names_from_json(j, n, "basis", "e");
    if (!j.contains("alpha") || !j.contains("beta") || !j.contains("product") ||
        !j.contains("bracket"))
        throw ParseError("algebra file: fields dim, alpha, beta, product, bracket are required");
    a.alpha = matrix_from_json(j["alpha"], "alpha");
    a.beta = matrix_from_json(j["beta"], "beta");
    if (a.alpha.rows() != n || a.alpha.cols() != n)
        throw DimensionMismatch("algebra file: alpha must be dim x dim");
    if (a.beta.rows() != n || a.beta.cols() != n)
        throw DimensionMismatch("algebra file: beta must be dim x dim");
    a.product = tensor_from_json(j["product"], n, n, n, "product");
    a.bracket = tensor_from_json(j["bracket"], n, n, n, "bracket");

    if (!(a.alpha * a.beta == a.beta * a.alpha))
        throw NonCommutingTwistMaps("algebra file: alpha*beta != beta*alpha");
    return a;
}

BiHomPoissonAlgebra load_algebra(const std::string& path) {
    return algebra_from_json_text(load_text(path));
}

std::string algebra_to_json_text(const BiHomPoissonAlgebra& a) {
    const bool sparse = a.dim >= 16;
    json j;
    j["dim"] = a.dim;
    j["basis"] = a.basis_names;
    j["alpha"] = matrix_to_json(a.alpha);
    j["beta"] = matrix_to_json(a.beta);
    j["product"] = tensor_to_json(a.product, sparse);
    j["bracket"] = tensor_to_json(a.bracket, sparse);
    return j.dump(2) + "\n";
}

ModuleFile module_from_json_text(const std::string& text, const BiHomPoissonAlgebra& alg) {
    const json j = parse_text(text);
    if (!j.is_object()) throw ParseError("module file: top level must be an object");
    const std::size_t vd = dim_from_json(j, "vdim");
    if (!j.contains("side") || !j["side"].is_string())
        throw ParseError("module file: \"side\" must be \"left\" or \"right\"");
    const std::string side = j["side"].get<std::string>();
    if (!j.contains("phi") || !j.contains("psi"))
        throw ParseError("module file: fields phi and psi are required");

    RatMatrix phi = matrix_from_json(j["phi"], "phi");
    RatMatrix psi = matrix_from_json(j["psi"], "psi");
    if (phi.rows() != vd || phi.cols() != vd || psi.rows() != vd || psi.cols() != vd)
        throw DimensionMismatch("module file: phi and psi must be vdim x vdim");

    if (side == "left") {
        if (!j.contains("lambda") || !j.contains("rho"))
            throw ParseError("module file: left modules need \"lambda\" and \"rho\"");
        LeftModuleRep m;
        m.alg = alg;
        m.vdim = vd;
        m.phi = std::move(phi);
        m.psi = std::move(psi);
        m.lambda_t = tensor_from_json(j["lambda"], alg.dim, vd, vd, "lambda");
        m.rho_t = tensor_from_json(j["rho"], alg.dim, vd, vd, "rho");
        return m;
    }
    if (side == "right") {
        if (!j.contains("wedge") || !j.contains("delta"))
            throw ParseError("module file: right modules need \"wedge\" and \"delta\"");
        RightModuleRep m;
        m.alg = alg;
        m.vdim = vd;
        m.phi = std::move(phi);
        m.psi = std::move(psi);
        m.wedge_t = tensor_from_json(j["wedge"], vd, alg.dim, vd, "wedge");
        m.delta_t = tensor_from_json(j["delta"], vd, alg.dim, vd, "delta");
        return m;
    }
    throw ParseError("module file: \"side\" must be \"left\" or \"right\"");
}

ModuleFile load_module(const std::string& path, const BiHomPoissonAlgebra& alg) {
    return module_from_json_text(load_text(path), alg);
}

std::string module_to_json_text(const LeftModuleRep& m) {
    const bool sparse = m.vdim >= 16 || m.alg.dim >= 16;
    json j;
    j["vdim"] = m.vdim;
    j["side"] = "left";
    j["phi"] = matrix_to_json(m.phi);
    j["psi"] = matrix_to_json(m.psi);
    j["lambda"] = tensor_to_json(m.lambda_t, sparse);
    j["rho"] = tensor_to_json(m.rho_t, sparse);
    return j.dump(2) + "\n";
}

std::string module_to_json_text(const RightModuleRep& m) {
    const bool sparse = m.vdim >= 16 || m.alg.dim >= 16;
    json j;
    j["vdim"] = m.vdim;
    j["side"] = "right";
    j["phi"] = matrix_to_json(m.phi);
    j["psi"] = matrix_to_json(m.psi);
    j["wedge"] = tensor_to_json(m.wedge_t, sparse);
    j["delta"] = tensor_to_json(m.delta_t, sparse);
    return j.dump(2) + "\n";
}

LieStructure lie_from_json_text(const std::string& text) {
    const json j = parse_text(text);
    if (!j.is_object()) throw ParseError("lie file: top level must be an object");
    LieStructure l;
    l.dim = dim_from_json(j, "dim");
    l.basis_names = names_from_json(j, l.dim, "basis", "x");
    if (!j.contains("bracket")) throw ParseError("lie file: field \"bracket\" is required");
    l.bracket = tensor_from_json(j["bracket"], l.dim, l.dim, l.dim, "bracket");
    return l;
}

LieStructure load_lie(const std::string& path) {
    return lie_from_json_text(load_text(path));
}

RatMatrix matrix_from_json_text(const std::string& text) {
    const json j = parse_text(text);
    if (j.is_object()) {
        if (!j.contains("matrix")) throw ParseError("matrix file: field \"matrix\" is required");
        return matrix_from_json(j["matrix"], "matrix");
    }
    return matrix_from_json(j, "matrix");
}

RatMatrix load_matrix(const std::string& path) {
    return matrix_from_json_text(load_text(path));
}

std::string matrix_to_json_text(const RatMatrix& m) {
    json j;
    j["matrix"] = matrix_to_json(m);
    return j.dump(2) + "\n";
}

namespace {

json violation_to_json(const IdentityViolation& v) {
    json j;
    j["identity"] = identity_label(v.id);
    j["witness"] = v.witness;
    json res = json::array();
    for (const Rat& r : v.residual) res.push_back(rat_to_json(r));
    j["residual"] = std::move(res);
    return j;
}

} // namespace

std::string report_to_json_text(const CheckReport& rep) {
    json j;
    j["passed"] = rep.passed;
    json checked = json::array();
    for (IdentityId id : rep.checked) checked.push_back(identity_label(id));
    j["checked"] = std::move(checked);
    json viol = json::array();
    for (const IdentityViolation& v : rep.violations) viol.push_back(violation_to_json(v));
    j["violations"] = std::move(viol);
    j["violations_total"] = rep.violations_total;
    j["truncated"] = rep.truncated;
    return j.dump(2) + "\n";
}

std::string report_to_text(const CheckReport& rep, const std::vector<std::string>* witness_names) {
    std::ostringstream os;
    os << (rep.passed ? "PASS" : "FAIL") << "\n";
    for (IdentityId id : rep.checked) {
        std::size_t count = 0;
        for (const IdentityViolation& v : rep.violations)
            if (v.id == id) ++count;
        os << "  [" << (count == 0 ? "ok" : "FAIL") << "] " << identity_label(id) << "\n";
    }
    for (const IdentityViolation& v : rep.violations) {
        os << "    " << identity_label(v.id) << " at (";
        for (std::size_t t = 0; t < v.witness.size(); ++t) {
            if (t) os << ", ";
            if (witness_names && v.witness[t] < witness_names->size())
                os << (*witness_names)[v.witness[t]];
            else
                os << v.witness[t];
        }
        os << "): residual [";
        for (std::size_t t = 0; t < v.residual.size(); ++t) {
            if (t) os << ", ";
            os << rat_to_string(v.residual[t]);
        }
        os << "]\n";
    }
    if (rep.truncated)
        os << "    ... " << (rep.violations_total - rep.violations.size())
           << " further violations suppressed\n";
    return os.str();
}

std::string cohomology_report_to_json_text(const CohomologyReport& rep) {
    json j;
    j["C1"] = rep.dim_C1;
    j["C2"] = rep.dim_C2;
    j["Z1"] = rep.dim_Z1;
    j["Z2"] = rep.dim_Z2;
    j["B2"] = rep.dim_B2;
    j["H2"] = rep.dim_H2;
    j["strict"] = rep.strict;
    j["strict_uses_product"] = rep.strict_uses_product;
    j["delta1_outputs_skew"] = rep.delta1_outputs_skew;
    j["delta1_outputs_in_C2"] = rep.delta1_outputs_in_C2;
    j["b2_subset_z2"] = rep.b2_subset_z2;
    return j.dump(2) + "\n";
}

std::string cohomology_report_to_text(const CohomologyReport& rep) {
    std::ostringstream os;
    os << "C1=" << rep.dim_C1 << " C2=" << rep.dim_C2 << " Z1=" << rep.dim_Z1
       << " Z2=" << rep.dim_Z2 << " B2=" << rep.dim_B2 << " H2=" << rep.dim_H2 << "\n";
    os << "H1 (= Z1, no degree-0 coboundary): " << rep.dim_Z1 << "\n";
    if (rep.strict) os << "strict cochains: Leibniz rule taken w.r.t. the product\n";
    if (!rep.delta1_outputs_skew) os << "note: delta1 images are not plain-skew (alpha != beta)\n";
    if (!rep.delta1_outputs_in_C2) os << "note: delta1 images leave the degree-2 cochain space\n";
    if (!rep.b2_subset_z2) os << "note: B2 is not contained in Z2; H2 not defined\n";
    return os.str();
}

std::string subspace_to_json_text(const SubspaceBasis& b) {
    json j;
    j["ambient_dim"] = b.ambient_dim;
    j["dim"] = b.dim();
    json vs = json::array();
    for (const RatVec& v : b.vectors) {
        json row = json::array();
        for (const Rat& r : v) row.push_back(rat_to_json(r));
        vs.push_back(std::move(row));
    }
    j["vectors"] = std::move(vs);
    return j.dump(2) + "\n";
}

std::string load_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << text;
}

} // namespace bihom
