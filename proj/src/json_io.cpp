#include "lietk/json_io.hpp"

#include "lietk/error.hpp"

#include <json.hpp>

namespace lietk {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string &what) { fail(ErrorKind::InvalidArgument, what); }

json parse_text(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        std::size_t line = 1, col = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string msg = e.what();
        if (auto p = msg.find(": "); p != std::string::npos && msg.rfind("[json.exception", 0) == 0)
            msg = msg.substr(p + 2);
        fail(ErrorKind::Parse, "malformed JSON at line " + std::to_string(line) + ", column " +
                                   std::to_string(col) + ": " + msg);
    }
}

Rational scalar(const json &j, const std::string &where) {
    if (j.is_string())
        return Rational::parse(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    bad(where + ": expected a rational string or an integer");
}

std::size_t index(const json &j, const std::string &where) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        bad(where + ": expected a non-negative integer");
    return j.get<std::size_t>();
}

json matrix_json(const Matrix &m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from(const json &j, const std::string &where) {
    if (!j.is_array())
        bad(where + ": expected an array of rows");
    std::vector<Vector> rows;
    for (const auto &row : j) {
        if (!row.is_array())
            bad(where + ": expected an array of rows");
        Vector v;
        for (const auto &x : row)
            v.push_back(scalar(x, where));
        rows.push_back(std::move(v));
    }
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (const auto &r : rows)
        if (r.size() != cols)
            bad(where + ": rows of different lengths");
    return Matrix::from_rows(rows, cols);
}

} // namespace

AlgebraDocument parse_algebra_json(std::string_view text) {
    json j = parse_text(text);
    if (!j.is_object())
        bad("algebra JSON must be an object");
    std::vector<std::string> names;
    if (j.contains("basis")) {
        if (!j["basis"].is_array())
            bad("\"basis\" must be an array of names");
        for (const auto &n : j["basis"]) {
            if (!n.is_string())
                bad("\"basis\" must be an array of names");
            names.push_back(n.get<std::string>());
        }
    }
    if (j.contains("dim")) {
        std::size_t d = index(j["dim"], "\"dim\"");
        if (!j.contains("basis"))
            for (std::size_t i = 0; i < d; ++i)
                names.push_back("x" + std::to_string(i));
        else if (d != names.size())
            bad("\"dim\" is " + std::to_string(d) + " but \"basis\" has " + std::to_string(names.size()) +
                " names");
    } else if (!j.contains("basis")) {
        bad("algebra JSON needs \"dim\" or \"basis\"");
    }

    BracketTable table;
    if (j.contains("bracket")) {
        if (!j["bracket"].is_object())
            bad("\"bracket\" must be an object keyed by \"i,j\"");
        for (const auto &[key, value] : j["bracket"].items()) {
            const auto comma = key.find(',');
            std::size_t a = 0, b = 0;
            try {
                std::size_t used = 0;
                if (comma == std::string::npos)
                    throw std::invalid_argument(key);
                a = std::stoul(key.substr(0, comma), &used);
                if (used != comma)
                    throw std::invalid_argument(key);
                b = std::stoul(key.substr(comma + 1), &used);
                if (used != key.size() - comma - 1)
                    throw std::invalid_argument(key);
            } catch (const std::logic_error &) {
                bad("bracket key \"" + key + "\" is not of the form \"i,j\"");
            }
            if (!value.is_array())
                bad("bracket entry \"" + key + "\" must be an array of [index, coefficient] pairs");
            SparseVec v;
            for (const auto &term : value) {
                if (!term.is_array() || term.size() != 2)
                    bad("bracket entry \"" + key + "\" must be an array of [index, coefficient] pairs");
                v.emplace_back(index(term[0], "bracket \"" + key + "\""), scalar(term[1], "bracket \"" + key + "\""));
            }
            std::sort(v.begin(), v.end(), [](const auto &x, const auto &y) { return x.first < y.first; });
            if (!table.emplace(std::make_pair(a, b), std::move(v)).second)
                bad("duplicate bracket key \"" + key + "\"");
        }
    }
    AlgebraDocument doc{LieAlgebra(std::move(names), std::move(table)), std::nullopt, std::nullopt, {}};
    const std::size_t n = doc.algebra.dim();
    if (j.contains("cartan_indices")) {
        std::vector<std::size_t> idx;
        if (!j["cartan_indices"].is_array())
            bad("\"cartan_indices\" must be an array");
        for (const auto &x : j["cartan_indices"]) {
            idx.push_back(index(x, "\"cartan_indices\""));
            if (idx.back() >= n)
                bad("\"cartan_indices\" entry out of range");
        }
        doc.cartan_indices = std::move(idx);
    }
    if (j.contains("matrix_basis")) {
        std::vector<Matrix> mats;
        if (!j["matrix_basis"].is_array() || j["matrix_basis"].size() != n)
            bad("\"matrix_basis\" must hold one matrix per basis vector");
        for (const auto &m : j["matrix_basis"])
            mats.push_back(matrix_from(m, "\"matrix_basis\""));
        doc.matrix_basis = std::move(mats);
    }
    if (j.contains("roots")) {
        if (!j["roots"].is_array())
            bad("\"roots\" must be an array");
        for (const auto &r : j["roots"]) {
            if (!r.is_object() || !r.contains("index") || !r.contains("root") || !r["root"].is_array())
                bad("\"roots\" entries must be {\"index\": k, \"root\": [...]}");
            Root root;
            for (const auto &c : r["root"]) {
                if (!c.is_number_integer())
                    bad("root coordinates must be integers");
                root.push_back(c.get<int>());
            }
            doc.roots.emplace_back(index(r["index"], "\"roots\""), std::move(root));
        }
    }
    return doc;
}

std::string write_algebra_json(const AlgebraDocument &doc) {
    const LieAlgebra &L = doc.algebra;
    json j;
    j["dim"] = L.dim();
    j["basis"] = L.basis_names();
    json br = json::object();
    for (const auto &[key, vec] : L.constants()) {
        json terms = json::array();
        for (const auto &[k, c] : vec)
            terms.push_back(json::array({k, c.str()}));
        br[std::to_string(key.first) + "," + std::to_string(key.second)] = std::move(terms);
    }
    j["bracket"] = std::move(br);
    if (doc.cartan_indices)
        j["cartan_indices"] = *doc.cartan_indices;
    if (doc.matrix_basis) {
        json mats = json::array();
        for (const auto &m : *doc.matrix_basis)
            mats.push_back(matrix_json(m));
        j["matrix_basis"] = std::move(mats);
    }
    if (!doc.roots.empty()) {
        json roots = json::array();
        for (const auto &[k, r] : doc.roots)
            roots.push_back({{"index", k}, {"root", r}});
        j["roots"] = std::move(roots);
    }
    return j.dump() + "\n";
}

CartanMatrix parse_cartan_json(std::string_view text) {
    json j = parse_text(text);
    if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
        bad("Cartan JSON must be {\"rank\": l, \"entries\": [[...]]}");
    CartanMatrix A;
    for (const auto &row : j["entries"]) {
        if (!row.is_array())
            bad("Cartan \"entries\" must be an array of integer rows");
        std::vector<int> r;
        for (const auto &x : row) {
            if (!x.is_number_integer())
                bad("Cartan entries must be integers");
            r.push_back(x.get<int>());
        }
        A.entries.push_back(std::move(r));
    }
    if (j.contains("rank") && index(j["rank"], "\"rank\"") != A.entries.size())
        bad("Cartan \"rank\" disagrees with the number of rows");
    return A;
}

std::string write_cartan_json(const CartanMatrix &A) {
    json j;
    j["rank"] = A.rank();
    j["entries"] = A.entries;
    return j.dump() + "\n";
}

std::string write_weights_json(const std::vector<WeightSpaceResult> &weights) {
    json arr = json::array();
    for (const auto &w : weights) {
        json chi = json::array();
        for (const auto &c : w.chi)
            chi.push_back(c.str());
        arr.push_back({{"chi", std::move(chi)}, {"dim", w.space.dim()}});
    }
    json j;
    j["weights"] = std::move(arr);
    return j.dump() + "\n";
}

} // namespace lietk
