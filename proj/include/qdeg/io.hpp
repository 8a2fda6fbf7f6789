#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "qdeg/orbits.hpp"
#include "qdeg/quiver.hpp"
#include "qdeg/rep.hpp"
#include "qdeg/zigzag.hpp"

namespace qdeg {

using nlohmann::json;

struct FieldSpec {
    enum Kind { Rationals, Prime } kind = Rationals;
    std::uint64_t p = 0;
};

FieldSpec parse_field_spec(const json& j); // "Q" or {"GF": p}
json field_spec_to_json(const FieldSpec& fs);

// Quiver file: {vertices, arrows: [{id, tail, head}], dim: {vertex: nat},
// field: "Q" | {"GF": p}}.
struct QuiverSpec {
    Quiver quiver;
    DimVector dim;
    FieldSpec field;
};

QuiverSpec parse_quiver_spec(const json& j);
json quiver_spec_to_json(const QuiverSpec& qs);

// Representation file: {quiver: <inline spec or path string>, mats:
// {arrow: [[entries]]}} with entries as integers or "p/q" strings.
// `resolve` maps a path reference to its parsed JSON document.
QuiverSpec parse_rep_quiver(const json& j,
                            const std::function<json(const std::string&)>& resolve);

template <class F>
Matrix<F> parse_matrix(const json& j, F f) {
    if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
    std::size_t rows = j.size();
    std::size_t cols = rows == 0 ? 0 : j[0].size();
    Matrix<F> m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw std::invalid_argument("matrix rows have inconsistent lengths");
        for (std::size_t c = 0; c < cols; ++c) {
            const json& e = j[i][c];
            if (e.is_number_integer())
                m.at(i, c) = f.from_long(e.get<long>());
            else if (e.is_string())
                m.at(i, c) = f.parse(e.get<std::string>());
            else
                throw std::invalid_argument("matrix entries must be integers or \"p/q\" strings");
        }
    }
    return m;
}

template <class F>
json matrix_to_json(const Matrix<F>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.field().str(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

template <class F>
Rep<F> parse_rep_mats(const json& j, F f, std::shared_ptr<const Quiver> q, const DimVector& d) {
    Rep<F> v = zero_rep(f, q, d);
    if (!j.is_object()) throw std::invalid_argument("mats must map arrow ids to matrices");
    for (const auto& [name, mj] : j.items()) {
        int ai = q->arrow_index(name);
        if (ai < 0) throw std::invalid_argument("mats references unknown arrow: " + name);
        Matrix<F> m = parse_matrix(mj, f);
        const auto& a = q->arrows[static_cast<std::size_t>(ai)];
        if (m.rows() != static_cast<std::size_t>(d[static_cast<std::size_t>(a.tail)]) ||
            m.cols() != static_cast<std::size_t>(d[static_cast<std::size_t>(a.head)]))
            throw std::invalid_argument("matrix over arrow " + name +
                                        " does not match the dimension vector");
        v.mats[static_cast<std::size_t>(ai)] = std::move(m);
    }
    return v;
}

json signature_to_json(int n, const RankSignature& sig);

json poset_to_json(const DegenerationPoset& p, const std::vector<Root>& roots,
                   const QuiverSpec& qs, int star_n);
std::string poset_to_dot(const DegenerationPoset& p, const std::vector<Root>& roots);

json read_json_file(const std::string& path);

} // namespace qdeg
