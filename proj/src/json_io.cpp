#include "cmds/json_io.hpp"

#include <algorithm>
#include <fstream>

#include "cmds/error.hpp"

namespace cmds {

json set_system_to_json(const SetSystem& s) {
    json j;
    j["n"] = s.n;
    j["k"] = s.k();
    j["sets"] = json::array();
    for (const auto& set : s.sets) j["sets"].push_back(set);
    return j;
}

SetSystem set_system_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("sets"))
        throw Error("ShapeInvalid", "set system document needs \"n\" and \"sets\"");
    SetSystem s;
    s.n = j.at("n").get<int>();
    if (s.n < 0) throw Error("ShapeInvalid", "negative ground set size");
    for (const auto& arr : j.at("sets")) {
        std::vector<int> set = arr.get<std::vector<int>>();
        std::sort(set.begin(), set.end());
        for (int v : set)
            if (v < 1 || v > s.n)
                throw Error("ShapeInvalid", "set element " + std::to_string(v) + " outside 1.." + std::to_string(s.n));
        s.sets.push_back(std::move(set));
    }
    if (j.contains("k") && j.at("k").get<int>() != s.k())
        throw Error("ShapeInvalid", "\"k\" disagrees with the number of sets");
    return s;
}

json vec_set_to_json(const VecSet& v) {
    json j;
    j["n"] = v.n;
    j["k"] = v.k;
    j["vectors"] = json::array();
    for (const auto& vec : v.vectors) j["vectors"].push_back(vec);
    return j;
}

VecSet vec_set_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("vectors"))
        throw Error("ShapeInvalid", "vector set document needs \"n\" and \"vectors\"");
    VecSet v;
    v.n = j.at("n").get<int>();
    v.k = j.value("k", 0);
    if (v.n < 1) throw Error("ShapeInvalid", "dimension must be positive");
    for (const auto& arr : j.at("vectors")) {
        std::vector<int> vec = arr.get<std::vector<int>>();
        if (static_cast<int>(vec.size()) != v.n)
            throw Error("ShapeInvalid", "vector length differs from n");
        for (int x : vec)
            if (x < 0) throw Error("ShapeInvalid", "vector entries must be nonnegative");
        v.vectors.push_back(std::move(vec));
    }
    return v;
}

json field_elem_to_json(const FieldCtx& ctx, const FieldElem& a) {
    if (ctx.e() == 1) return a.coords[0];
    return json(a.coords);
}

FieldElem field_elem_from_json(const FieldCtx& ctx, const json& j) {
    FieldElem a;
    if (j.is_number_integer()) {
        long long v = j.get<long long>();
        if (v < 0 || static_cast<std::uint64_t>(v) >= ctx.q())
            throw Error("ShapeInvalid", "element index " + std::to_string(v) + " outside the field");
        return ctx.element(static_cast<std::uint64_t>(v));
    }
    if (j.is_array()) {
        a.coords = j.get<std::vector<std::uint32_t>>();
        if (!ctx.valid(a)) throw Error("ShapeInvalid", "coordinate list is not a valid field element");
        return a;
    }
    throw Error("ShapeInvalid", "field element must be an integer or a coordinate list");
}

json matrix_to_json(const FieldMatrix& A) {
    json j;
    j["q"] = A.ctx.q();
    j["k"] = A.k;
    j["n"] = A.n;
    j["rows"] = json::array();
    for (int i = 0; i < A.k; ++i) {
        json row = json::array();
        for (int c = 0; c < A.n; ++c) row.push_back(field_elem_to_json(A.ctx, A.at(i, c)));
        j["rows"].push_back(std::move(row));
    }
    return j;
}

FieldMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("q") || !j.contains("rows"))
        throw Error("ShapeInvalid", "matrix document needs \"q\" and \"rows\"");
    FieldMatrix A;
    A.ctx = FieldCtx::make(j.at("q").get<std::uint64_t>());
    const auto& rows = j.at("rows");
    A.k = static_cast<int>(rows.size());
    A.n = A.k > 0 ? static_cast<int>(rows.at(0).size()) : j.value("n", 0);
    if (j.contains("k") && j.at("k").get<int>() != A.k)
        throw Error("ShapeInvalid", "\"k\" disagrees with the number of rows");
    if (j.contains("n") && j.at("n").get<int>() != A.n)
        throw Error("ShapeInvalid", "\"n\" disagrees with the row length");
    A.entries.reserve(static_cast<std::size_t>(A.k) * A.n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != A.n) throw Error("ShapeInvalid", "ragged matrix rows");
        for (const auto& cell : row) A.entries.push_back(field_elem_from_json(A.ctx, cell));
    }
    return A;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("UsageError", "cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error("UsageError", "malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

} // namespace cmds
