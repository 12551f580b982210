#include "qtorus/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "qtorus/error.hpp"

namespace qtorus {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw Error(ErrorKind::Config, where + ": " + what);
}

std::int64_t get_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where, "expected an integer");
    return j.get<std::int64_t>();
}

IntMatrix get_matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
    if (!j.is_array() || j.size() != rows) fail(where, "expected " + std::to_string(rows) + " rows");
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const std::string w = where + "[" + std::to_string(i) + "]";
        if (!j[i].is_array() || j[i].size() != cols) fail(w, "expected " + std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = get_int(j[i][k], w + "[" + std::to_string(k) + "]");
    }
    return m;
}

}  // namespace

ExponentSystem AlgebraConfig::split_system() const { return apply_split(sys, make_split(basis, t)); }

AlgebraConfig parse_config(const json& j, bool allow_name) {
    if (!j.is_object()) fail("config", "expected an object");
    std::set<std::string> known{"n", "r", "mode", "m", "E", "split", "seed"};
    if (allow_name) known.insert("name");
    for (const auto& [key, value] : j.items())
        if (!known.count(key)) fail("config", "unknown key '" + key + "'");
    for (const char* key : {"n", "mode", "E"})
        if (!j.contains(key)) fail("config", std::string("missing key '") + key + "'");

    AlgebraConfig c;
    c.echo = j;
    if (j.contains("name")) {
        if (!j["name"].is_string()) fail("name", "expected a string");
        c.name = j["name"].get<std::string>();
    }
    const std::int64_t n = get_int(j["n"], "n");
    if (n < 1 || n > 16) fail("n", "expected 1 <= n <= 16");
    c.sys.n = static_cast<int>(n);

    if (!j["mode"].is_string()) fail("mode", "expected \"generic\" or \"root\"");
    const std::string mode = j["mode"].get<std::string>();
    if (!j["E"].is_array() || j["E"].empty()) fail("E", "expected a nonempty list of matrices");
    const auto count = static_cast<std::int64_t>(j["E"].size());
    const std::int64_t r = j.contains("r") ? get_int(j["r"], "r") : count;
    if (r != count) fail("r", "r = " + std::to_string(r) + " but E has " + std::to_string(count) + " matrices");
    if (mode == "generic") {
        if (j.contains("m")) fail("m", "only allowed in root mode");
        c.sys.mode = FieldMode::generic(static_cast<int>(r));
    } else if (mode == "root") {
        if (!j.contains("m")) fail("m", "required in root mode");
        const std::int64_t m = get_int(j["m"], "m");
        if (m < 1) fail("m", "expected m >= 1");
        if (r != 1) fail("r", "root mode needs r = 1");
        c.sys.mode = FieldMode::root_of_unity(static_cast<int>(m));
    } else {
        fail("mode", "expected \"generic\" or \"root\", got \"" + mode + "\"");
    }
    const auto un = static_cast<std::size_t>(n);
    for (std::size_t k = 0; k < j["E"].size(); ++k)
        c.sys.E.push_back(get_matrix(j["E"][k], un, un, "E[" + std::to_string(k) + "]"));
    validate(c.sys);

    c.basis = IntMatrix::identity(un);
    c.t = c.sys.n - 1;
    if (j.contains("split")) {
        const json& s = j["split"];
        if (!s.is_object()) fail("split", "expected an object with keys basis and t");
        for (const auto& [key, value] : s.items())
            if (key != "basis" && key != "t") fail("split", "unknown key '" + key + "'");
        if (s.contains("basis")) c.basis = get_matrix(s["basis"], un, un, "split.basis");
        if (s.contains("t")) {
            const std::int64_t t = get_int(s["t"], "split.t");
            if (t < 1 || t > n) fail("split.t", "expected 1 <= t <= n");
            c.t = static_cast<int>(t - 1);
        }
        const std::int64_t det = determinant(c.basis);
        if (det != 1 && det != -1) fail("split.basis", "not unimodular (det = " + std::to_string(det) + ")");
    }
    if (j.contains("seed")) {
        const std::int64_t s = get_int(j["seed"], "seed");
        if (s < 0) fail("seed", "expected a nonnegative integer");
        c.seed = static_cast<std::uint64_t>(s);
    }
    return c;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Config, path + ": cannot open");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return json::parse(ss.str());
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Config, path + ": byte " + std::to_string(e.byte) + ": malformed JSON");
    }
}

AlgebraConfig load_config(const std::string& path) {
    try {
        return parse_config(read_json_file(path));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Config && std::string(e.what()).find(path) == std::string::npos)
            throw Error(ErrorKind::Config, path + ": " + std::string(e.what()).substr(std::string("Config: ").size()));
        throw;
    }
}

std::vector<AlgebraConfig> load_corpus(const std::string& path) {
    const json j = read_json_file(path);
    if (!j.is_object() || !j.contains("corpus") || j.size() != 1 || !j["corpus"].is_array())
        throw Error(ErrorKind::Config, path + ": expected {\"corpus\": [...]}");
    std::vector<AlgebraConfig> out;
    for (std::size_t i = 0; i < j["corpus"].size(); ++i) {
        try {
            out.push_back(parse_config(j["corpus"][i], true));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Config) throw;
            throw Error(ErrorKind::Config, path + ": corpus[" + std::to_string(i) + "]." +
                                               std::string(e.what()).substr(std::string("Config: ").size()));
        }
        if (out.back().name.empty()) out.back().name = "corpus[" + std::to_string(i) + "]";
    }
    return out;
}

}  // namespace qtorus
