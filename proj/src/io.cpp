#include "kiss/io.hpp"

#include <exception>
#include <fstream>
#include <optional>

#include "kiss/errors.hpp"

namespace kiss {
namespace {

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        throw ParseError(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

long get_integer(const Json& j, const char* what) {
    if (!j.is_number_integer())
        throw ParseError(std::string(what) + " must be an integer");
    return j.get<long>();
}

Rational get_rational(const Json& j, const char* what) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw ParseError(std::string(what) + " must be a \"p/q\" string");
}

std::vector<long> get_coordinates(const Json& j) {
    if (!j.is_array()) throw ParseError("coordinate list must be an array");
    std::vector<long> z;
    z.reserve(j.size());
    for (const auto& c : j) z.push_back(get_integer(c, "coordinate"));
    return z;
}

} // namespace

Json vector_to_json(const ExplicitVector& v) {
    return Json{{"z", v.z}, {"N", v.norm_square}};
}

ExplicitVector vector_from_json(const Json& j) {
    ExplicitVector v;
    v.z = get_coordinates(field(j, "z"));
    v.norm_square = get_integer(field(j, "N"), "norm-square N");
    if (v.norm_square <= 0) throw ParseError("norm-square N must be positive");
    return v;
}

Json arrangement_to_json(const Arrangement& arr) {
    Json vectors = Json::array();
    for (const auto& v : arr.vectors()) vectors.push_back(vector_to_json(v));
    return Json{{"dim", arr.dim()}, {"vectors", std::move(vectors)}};
}

Arrangement arrangement_from_json(const Json& j) {
    const long dim = get_integer(field(j, "dim"), "dim");
    if (dim <= 0) throw ParseError("dim must be positive");
    const Json& rows = field(j, "vectors");
    if (!rows.is_array()) throw ParseError("\"vectors\" must be an array");

    std::vector<ExplicitVector> vectors;
    vectors.reserve(rows.size());
    if (j.contains("N")) {
        const long n = get_integer(j.at("N"), "norm-square N");
        if (n <= 0) throw ParseError("norm-square N must be positive");
        for (const auto& row : rows)
            vectors.push_back(ExplicitVector{get_coordinates(row), n});
    } else {
        for (const auto& row : rows) vectors.push_back(vector_from_json(row));
    }
    return Arrangement(std::size_t(dim), std::move(vectors));
}

Json basis_to_json(const Basis& basis) {
    Json rows = Json::array();
    for (const auto& v : basis.rows()) rows.push_back(vector_to_json(v));
    Json out{{"dim", basis.span_dim()}, {"vectors", std::move(rows)}};
    if (basis.has_perp()) out["perp"] = vector_to_json(basis.perp());
    return out;
}

Basis basis_from_json(const Json& j) {
    const long dim = get_integer(field(j, "dim"), "dim");
    const Json& rows = field(j, "vectors");
    if (!rows.is_array()) throw ParseError("\"vectors\" must be an array");
    std::vector<ExplicitVector> vectors;
    vectors.reserve(rows.size());
    for (const auto& row : rows) vectors.push_back(vector_from_json(row));
    if (dim < 0 || std::size_t(dim) != vectors.size())
        throw ParseError("basis \"dim\" must equal the number of rows");
    std::optional<ExplicitVector> perp;
    if (j.contains("perp")) perp = vector_from_json(j.at("perp"));
    return Basis(std::move(vectors), std::move(perp));
}

Json cloud_to_json(const Cloud& cloud, int method) {
    Json members = Json::array();
    for (const auto& m : cloud.members()) {
        Json t = Json::array();
        for (const auto& ti : m.t) t.push_back(ti.str());
        members.push_back(Json{{"t", std::move(t)}, {"r", m.residual.str()}, {"s", m.s}});
    }
    return Json{{"method", method},
                {"basis", basis_to_json(cloud.basis())},
                {"members", std::move(members)}};
}

LoadedCloud cloud_from_json(const Json& j) {
    const long method = get_integer(field(j, "method"), "method");
    if (method != 1 && method != 2) throw ParseError("method must be 1 or 2");
    Basis basis = basis_from_json(field(j, "basis"));
    const Json& rows = field(j, "members");
    if (!rows.is_array()) throw ParseError("\"members\" must be an array");

    const Rational one(1);
    std::vector<SpanVector> members;
    members.reserve(rows.size());
    for (const auto& row : rows) {
        SpanVector m;
        const Json& tuple = field(row, "t");
        if (!tuple.is_array() || tuple.size() != basis.span_dim())
            throw ParseError("member tuple length must equal the basis dimension");
        for (const auto& ti : tuple) m.t.push_back(get_rational(ti, "tuple entry"));
        m.residual = get_rational(field(row, "r"), "residual r");
        const long s = get_integer(field(row, "s"), "sign s");
        if (s < -1 || s > 1) throw ParseError("sign s must be -1, 0 or 1");
        m.s = int(s);
        if (m.residual.sign() < 0) throw ParseError("residual r must be nonnegative");
        if (m.residual.is_zero() != (m.s == 0))
            throw ParseError("sign s must be 0 exactly when residual r is 0");
        m.q = bilinear_form(m.t, basis.gram_inverse(), m.t);
        if (!(one - m.q == m.residual))
            throw ParseError("member residual does not match its tuple");
        members.push_back(std::move(m));
    }
    return LoadedCloud{Cloud(std::move(basis), std::move(members)), int(method)};
}

Json surd_to_json(const Surd& s) {
    return Json{{"a", s.rational_part().str()},
                {"b", s.radicand().str()},
                {"s", s.radical_sign()}};
}

Surd surd_from_json(const Json& j) {
    const Rational a = get_rational(field(j, "a"), "rational part a");
    const Rational b = get_rational(field(j, "b"), "radicand b");
    const long s = get_integer(field(j, "s"), "sign s");
    if (s < -1 || s > 1) throw ParseError("sign s must be -1, 0 or 1");
    return Surd(a, b, int(s));
}

Json profile_to_json(const Profile& p) {
    Json out = Json::array();
    for (const auto& [value, count] : p.entries())
        out.push_back(Json{{"value", surd_to_json(value)}, {"count", count}});
    return out;
}

Json report_to_json(const CliqueReport& rep) {
    Json witnesses = Json::array();
    for (const auto& w : rep.witnesses) witnesses.push_back(w);
    return Json{{"omega", rep.omega},
                {"witness_count", rep.witnesses.size()},
                {"node_count", rep.node_count},
                {"witnesses", std::move(witnesses)}};
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << dump_json(j);
    if (!out) throw ParseError("write failed: " + path);
}

std::string dump_json(const Json& j) {
    return j.dump(2) + "\n";
}

} // namespace kiss
