#include "leibrack/io.hpp"

#include <fstream>

namespace leibrack {

namespace {

using nlohmann::json;

Rational rational_from_json(const json& j) {
    try {
        if (j.is_string()) return Rational(j.get<std::string>());
        if (j.is_number_integer()) return Rational(j.get<long>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    throw ParseError("expected a rational string");
}

Vec rational_vec_from_json(const json& j, std::size_t expected) {
    if (!j.is_array() || j.size() != expected) throw ParseError("rational vector length mismatch");
    Vec v;
    for (const json& x : j) v.push_back(rational_from_json(x));
    return v;
}

json rational_vec_to_json(const Vec& v) {
    json a = json::array();
    for (const Rational& x : v) a.push_back(x.str());
    return a;
}

Matrix rational_matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
    std::vector<Vec> rows;
    const std::size_t cols = j.front().size();
    for (const json& row : j) rows.push_back(rational_vec_from_json(row, cols));
    return Matrix::from_rows(rows);
}

json rational_matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(rational_vec_to_json(m.row(r)));
    return rows;
}

DMatrix float_matrix_from_json(const json& j, std::size_t n) {
    if (!j.is_array() || j.size() != n) throw ParseError("float matrix row count mismatch");
    DMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        if (!j[r].is_array() || j[r].size() != n) throw ParseError("float matrix column count mismatch");
        for (std::size_t c = 0; c < n; ++c) m.at(r, c) = j[r][c].get<double>();
    }
    return m;
}

json float_matrix_to_json(const DMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows; ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::vector<std::size_t>> table_from_json(const json& j, std::size_t n,
                                                      const char* what) {
    if (!j.is_array() || j.size() != n) throw ParseError(std::string(what) + ": row count mismatch");
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t r = 0; r < n; ++r) {
        if (!j[r].is_array() || j[r].size() != n) {
            throw ParseError(std::string(what) + ": column count mismatch");
        }
        for (std::size_t c = 0; c < n; ++c) {
            const std::size_t v = j[r][c].get<std::size_t>();
            if (v >= n) throw ParseError(std::string(what) + ": entry out of range");
            table[r][c] = v;
        }
    }
    return table;
}

json table_to_json(const std::vector<std::vector<std::size_t>>& table) {
    json rows = json::array();
    for (const auto& row : table) rows.push_back(row);
    return rows;
}

std::vector<std::size_t> index_vec_from_json(const json& j, std::size_t n, const char* what) {
    if (!j.is_array() || j.size() != n) throw ParseError(std::string(what) + ": length mismatch");
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = j[i].get<std::size_t>();
        if (v[i] >= n) throw ParseError(std::string(what) + ": entry out of range");
    }
    return v;
}

std::size_t index_from_json(const json& j, std::size_t n, const char* what) {
    const std::size_t v = j.get<std::size_t>();
    if (v >= n) throw ParseError(std::string(what) + ": index out of range");
    return v;
}

}  // namespace

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return j;
}

LeibnizAlgebra algebra_from_json(const json& j) {
    try {
        const std::size_t n = j.at("dim").get<std::size_t>();
        std::vector<std::string> names;
        if (j.contains("basis")) names = j.at("basis").get<std::vector<std::string>>();
        LeibnizAlgebra g(n, names);
        if (j.contains("brackets")) {
            for (const json& entry : j.at("brackets")) {
                const std::size_t i = index_from_json(entry.at("i"), n, "bracket i");
                const std::size_t jj = index_from_json(entry.at("j"), n, "bracket j");
                g.set_basis_bracket(i, jj, rational_vec_from_json(entry.at("val"), n));
            }
        }
        return g;
    } catch (const json::exception& e) {
        throw ParseError(std::string("algebra file: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("algebra file: ") + e.what());
    }
}

json algebra_to_json(const LeibnizAlgebra& g) {
    json brackets = json::array();
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t jj = 0; jj < g.dim(); ++jj) {
            Vec val = g.basis_bracket(i, jj);
            if (is_zero_vec(val)) continue;
            brackets.push_back(json{{"i", i}, {"j", jj}, {"val", rational_vec_to_json(val)}});
        }
    return json{{"dim", g.dim()}, {"basis", g.basis_names()}, {"brackets", brackets}};
}

Representation representation_from_json(const json& j) {
    try {
        Representation rep;
        rep.module_dim = j.at("module_dim").get<std::size_t>();
        for (const json& m : j.at("rho")) {
            Matrix mat = rational_matrix_from_json(m);
            if (mat.rows() != rep.module_dim || mat.cols() != rep.module_dim) {
                throw ParseError("representation matrix size mismatch");
            }
            rep.rho.push_back(std::move(mat));
        }
        return rep;
    } catch (const json::exception& e) {
        throw ParseError(std::string("representation file: ") + e.what());
    }
}

json representation_to_json(const Representation& rep) {
    json rho = json::array();
    for (const Matrix& m : rep.rho) rho.push_back(rational_matrix_to_json(m));
    return json{{"module_dim", rep.module_dim}, {"rho", rho}};
}

Dialgebra dialgebra_from_json(const json& j) {
    try {
        const std::size_t n = j.at("dim").get<std::size_t>();
        Dialgebra d(n);
        if (j.contains("basis")) d.basis_names = j.at("basis").get<std::vector<std::string>>();
        auto fill = [&](const char* key, bool vdash) {
            if (!j.contains(key)) return;
            for (const json& entry : j.at(key)) {
                const std::size_t i = index_from_json(entry.at("i"), n, key);
                const std::size_t jj = index_from_json(entry.at("j"), n, key);
                Vec val = rational_vec_from_json(entry.at("val"), n);
                for (std::size_t k = 0; k < n; ++k) {
                    if (vdash) {
                        d.set_vd(i, jj, k, val[k]);
                    } else {
                        d.set_dv(i, jj, k, val[k]);
                    }
                }
            }
        };
        fill("vdash", true);
        fill("dashv", false);
        return d;
    } catch (const json::exception& e) {
        throw ParseError(std::string("dialgebra file: ") + e.what());
    }
}

json dialgebra_to_json(const Dialgebra& d) {
    auto dump = [&](bool vdash) {
        json entries = json::array();
        for (std::size_t i = 0; i < d.dim; ++i)
            for (std::size_t jj = 0; jj < d.dim; ++jj) {
                Vec val(d.dim);
                for (std::size_t k = 0; k < d.dim; ++k) val[k] = vdash ? d.vd(i, jj, k) : d.dv(i, jj, k);
                if (is_zero_vec(val)) continue;
                entries.push_back(json{{"i", i}, {"j", jj}, {"val", rational_vec_to_json(val)}});
            }
        return entries;
    };
    json out{{"dim", d.dim}, {"vdash", dump(true)}, {"dashv", dump(false)}};
    if (!d.basis_names.empty()) out["basis"] = d.basis_names;
    return out;
}

FiniteRack rack_from_json(const json& j) {
    try {
        FiniteRack q;
        q.size = j.at("size").get<std::size_t>();
        q.point = index_from_json(j.at("point"), q.size, "point");
        q.table = table_from_json(j.at("table"), q.size, "rack table");
        return q;
    } catch (const json::exception& e) {
        throw ParseError(std::string("rack file: ") + e.what());
    }
}

json rack_to_json(const FiniteRack& q) {
    return json{{"size", q.size}, {"point", q.point}, {"table", table_to_json(q.table)}};
}

FiniteGroup group_from_json(const json& j) {
    try {
        FiniteGroup g;
        g.size = j.at("size").get<std::size_t>();
        g.unit = index_from_json(j.at("point"), g.size, "point");
        g.table = table_from_json(j.at("table"), g.size, "group table");
        g.inv = index_vec_from_json(j.at("inv"), g.size, "inv");
        return g;
    } catch (const json::exception& e) {
        throw ParseError(std::string("group file: ") + e.what());
    }
}

json group_to_json(const FiniteGroup& g) {
    return json{{"size", g.size}, {"point", g.unit}, {"table", table_to_json(g.table)}, {"inv", g.inv}};
}

FiniteDigroup digroup_from_json(const json& j) {
    try {
        FiniteDigroup g;
        g.size = j.at("size").get<std::size_t>();
        g.unit = index_from_json(j.at("unit"), g.size, "unit");
        g.vdash = table_from_json(j.at("vdash"), g.size, "vdash table");
        g.dashv = table_from_json(j.at("dashv"), g.size, "dashv table");
        g.inv = index_vec_from_json(j.at("inv"), g.size, "inv");
        return g;
    } catch (const json::exception& e) {
        throw ParseError(std::string("digroup file: ") + e.what());
    }
}

json digroup_to_json(const FiniteDigroup& g) {
    return json{{"size", g.size},
                {"unit", g.unit},
                {"vdash", table_to_json(g.vdash)},
                {"dashv", table_to_json(g.dashv)},
                {"inv", g.inv}};
}

LinearLieGroupModel model_from_json(const json& j) {
    try {
        LinearLieGroupModel m;
        m.ambient_dim = j.at("ambient").get<std::size_t>();
        m.module_dim = j.at("module_dim").get<std::size_t>();
        for (const json& x : j.at("lie_basis")) m.lie_basis.push_back(float_matrix_from_json(x, m.ambient_dim));
        for (const json& x : j.at("rho")) m.rho_basis.push_back(float_matrix_from_json(x, m.module_dim));
        if (m.rho_basis.size() != m.lie_basis.size()) {
            throw ParseError("model file: lie_basis and rho must have the same length");
        }
        return m;
    } catch (const json::exception& e) {
        throw ParseError(std::string("model file: ") + e.what());
    }
}

json model_to_json(const LinearLieGroupModel& m) {
    json lie = json::array(), rho = json::array();
    for (const DMatrix& x : m.lie_basis) lie.push_back(float_matrix_to_json(x));
    for (const DMatrix& x : m.rho_basis) rho.push_back(float_matrix_to_json(x));
    return json{{"ambient", m.ambient_dim},
                {"lie_basis", lie},
                {"module_dim", m.module_dim},
                {"rho", rho}};
}

Subspace subspace_from_json(const json& j) {
    try {
        const std::size_t n = j.at("ambient_dim").get<std::size_t>();
        std::vector<Vec> gens;
        for (const json& row : j.at("basis")) gens.push_back(rational_vec_from_json(row, n));
        return Subspace::span(n, gens);
    } catch (const json::exception& e) {
        throw ParseError(std::string("subspace file: ") + e.what());
    }
}

json subspace_to_json(const Subspace& s) {
    json basis = json::array();
    for (const Vec& b : s.basis()) basis.push_back(rational_vec_to_json(b));
    return json{{"ambient_dim", s.ambient_dim()}, {"basis", basis}};
}

}  // namespace leibrack
