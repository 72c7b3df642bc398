#include "bimtoep/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace bimtoep {

using nlohmann::json;

static json complex_to_json(const Complex& c) { return json::array({c.real(), c.imag()}); }

static Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("complex numbers must be [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

static json vector_to_json(const Vector& v) {
    json out = json::array();
    for (int i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
    return out;
}

static Vector vector_from_json(const json& j, int expected = -1) {
    if (!j.is_array()) throw ParseError("expected an array of complex numbers");
    if (expected >= 0 && static_cast<int>(j.size()) != expected)
        throw ParseError("coefficient vector has wrong length");
    Vector v(j.size());
    for (size_t i = 0; i < j.size(); ++i) v(i) = complex_from_json(j[i]);
    return v;
}

static json matrix_to_json(const Matrix& m) {
    json out = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

static Matrix matrix_from_json(const json& j, int rows = -1, int cols = -1) {
    if (!j.is_array() || j.empty() || !j[0].is_array()) throw ParseError("expected a matrix");
    Matrix m(j.size(), j[0].size());
    for (size_t r = 0; r < j.size(); ++r) {
        if (static_cast<int>(j[r].size()) != m.cols()) throw ParseError("ragged matrix rows");
        for (size_t c = 0; c < j[r].size(); ++c) m(r, c) = complex_from_json(j[r][c]);
    }
    if ((rows >= 0 && m.rows() != rows) || (cols >= 0 && m.cols() != cols))
        throw ParseError("matrix has unexpected shape");
    return m;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << text;
}

Model model_from_json(const std::string& text, const std::string& name) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("model parse error: ") + e.what());
    }
    Model m;
    m.name = j.value("name", name);
    if (!j.contains("blocks")) throw ParseError("model is missing \"blocks\"");
    std::vector<int> blocks = j["blocks"].get<std::vector<int>>();
    m.algebra = std::make_shared<CStarAlgebra>(blocks);
    m.window = j.value("window", 3);
    if (m.window < 1) throw ParseError("window must be >= 1");
    if (j.contains("tolerances"))
        for (auto& [k, v] : j["tolerances"].items()) m.tolerances[k] = v.get<double>();

    if (!j.contains("bimodule")) throw ParseError("model is missing \"bimodule\"");
    const json& bj = j["bimodule"];
    if (bj.contains("generator")) {
        std::string gen = bj["generator"].get<std::string>();
        if (gen == "scalar" || gen == "identity") {
            m.bimodule = twisted_bimodule(m.algebra, Matrix::Identity(m.algebra->dim(),
                                                                      m.algebra->dim()));
        } else if (gen == "flip") {
            if (blocks != std::vector<int>{1, 1})
                throw ParseError("flip generator requires blocks [1,1]");
            m.bimodule = twisted_bimodule(
                m.algebra, block_permutation_automorphism(*m.algebra, {1, 0}));
        } else if (gen == "permutation") {
            auto perm = bj.at("perm").get<std::vector<int>>();
            m.bimodule =
                twisted_bimodule(m.algebra, block_permutation_automorphism(*m.algebra, perm));
        } else if (gen == "inner-automorphism") {
            std::vector<Matrix> us;
            for (const auto& uj : bj.at("unitaries")) us.push_back(matrix_from_json(uj));
            m.bimodule = twisted_bimodule(m.algebra, inner_automorphism(*m.algebra, us));
        } else {
            throw ParseError("unknown bimodule generator: " + gen);
        }
    } else if (bj.contains("tensors")) {
        const json& tj = bj["tensors"];
        int d = tj.at("dim").get<int>();
        int dA = m.algebra->dim();
        std::vector<Matrix> al, ar;
        for (const auto& mj : tj.at("left_action")) al.push_back(matrix_from_json(mj, d, d));
        for (const auto& mj : tj.at("right_action")) ar.push_back(matrix_from_json(mj, d, d));
        Matrix IL = matrix_from_json(tj.at("inner_L"), dA, d * d);
        Matrix IR = matrix_from_json(tj.at("inner_R"), dA, d * d);
        m.bimodule = std::make_shared<Bimodule>(m.algebra, m.algebra, d, std::move(al),
                                                std::move(ar), std::move(IL), std::move(IR));
    } else {
        throw ParseError("bimodule needs either a \"generator\" or explicit \"tensors\"");
    }

    ValidationReport rep = validate_bimodule(*m.bimodule, m.tol("axiom", 1e-9));
    if (!rep.passed()) {
        std::string bad;
        for (const auto& c : rep.checks)
            if (!c.pass) {
                bad = c.name;
                break;
            }
        throw ValidationError("model violates bimodule axioms: " + bad);
    }
    m.ladder = build_ladder(m.bimodule, m.window);
    return m;
}

Model load_model(const std::string& path_or_builtin) {
    for (const auto& n : builtin_model_names())
        if (path_or_builtin == n) return builtin_model(n);
    return model_from_json(read_file(path_or_builtin), path_or_builtin);
}

std::string model_to_json(const Model& m) {
    json j;
    j["name"] = m.name;
    j["blocks"] = m.algebra->block_dims();
    j["window"] = m.window;
    if (!m.tolerances.empty()) j["tolerances"] = m.tolerances;
    const auto& X = *m.bimodule;
    json tj;
    tj["dim"] = X.dim();
    json al = json::array(), ar = json::array();
    for (const auto& mm : X.act_left_tensors()) al.push_back(matrix_to_json(mm));
    for (const auto& mm : X.act_right_tensors()) ar.push_back(matrix_to_json(mm));
    tj["left_action"] = std::move(al);
    tj["right_action"] = std::move(ar);
    tj["inner_L"] = matrix_to_json(X.inner_L_tensor());
    tj["inner_R"] = matrix_to_json(X.inner_R_tensor());
    j["bimodule"] = json{{"tensors", std::move(tj)}};
    return j.dump(2) + "\n";
}

std::string operator_to_json(const OperatorMatrix& M) {
    json j;
    j["window"] = M.N;
    json blocks = json::array();
    for (int i = -M.N; i <= M.N; ++i)
        for (int jj = -M.N; jj <= M.N; ++jj)
            if (M.has_block(i, jj))
                blocks.push_back(
                    json{{"i", i}, {"j", jj}, {"matrix", matrix_to_json(M.block(i, jj))}});
    j["blocks"] = std::move(blocks);
    return j.dump(2) + "\n";
}

OperatorMatrix operator_from_json(const std::string& text, const LadderPtr& ladder) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("operator parse error: ") + e.what());
    }
    OperatorMatrix M(ladder, j.at("window").get<int>());
    for (const auto& bj : j.at("blocks")) {
        int i = bj.at("i").get<int>(), jj = bj.at("j").get<int>();
        M.set_block(i, jj,
                    matrix_from_json(bj.at("matrix"), ladder->level_dim(i), ladder->level_dim(jj)));
    }
    return M;
}

std::string section_to_json(const CrossSection& f) {
    json j;
    json vals = json::array();
    for (const auto& [k, v] : f.values)
        vals.push_back(json{{"k", k}, {"coeffs", vector_to_json(v)}});
    j["values"] = std::move(vals);
    return j.dump(2) + "\n";
}

CrossSection section_from_json(const std::string& text, const LadderPtr& ladder) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("section parse error: ") + e.what());
    }
    CrossSection f(ladder);
    for (const auto& vj : j.at("values")) {
        int k = vj.at("k").get<int>();
        f.set(k, vector_from_json(vj.at("coeffs"), ladder->level_dim(k)));
    }
    return f;
}

std::string report_to_json(const std::string& model_name, std::uint64_t seed,
                           const ValidationReport& rep) {
    // no timing fields here: the file must be byte-identical across runs
    json j;
    j["model"] = model_name;
    j["seed"] = seed;
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back(json{{"name", c.name}, {"residual", c.residual}, {"pass", c.pass}});
    j["checks"] = std::move(checks);
    j["passed"] = rep.passed();
    return j.dump(2) + "\n";
}

}  // namespace bimtoep
