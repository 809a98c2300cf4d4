#include "absnorm/cli/matrix_file.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "absnorm/error.hpp"

namespace absnorm::cli {

namespace {

[[noreturn]] void malformed(const std::string& why) { throw Error(ErrorKind::MalformedFile, why); }

Eigen::Index dimension(const nlohmann::json& doc, const char* key) {
    const auto it = doc.find(key);
    if (it == doc.end() || !it->is_number_integer()) malformed(std::string("missing integer field '") + key + "'");
    const auto v = it->get<long long>();
    if (v < 1) malformed(std::string("field '") + key + "' must be positive");
    return static_cast<Eigen::Index>(v);
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_matrix(const ComplexMatrix& a) {
    require_finite(a);
    std::string out = "{\n  \"rows\": " + std::to_string(a.rows()) + ",\n  \"cols\": " +
                      std::to_string(a.cols()) + ",\n  \"data\": [";
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        out += i == 0 ? "\n    " : ",\n    ";
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if (j > 0) out += ", ";
            out += "[" + format_double(a(i, j).real()) + ", " + format_double(a(i, j).imag()) + "]";
        }
    }
    out += "\n  ]\n}\n";
    return out;
}

ComplexMatrix parse_matrix(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        malformed(e.what());
    }
    if (!doc.is_object()) malformed("top level must be an object");
    const Eigen::Index rows = dimension(doc, "rows");
    const Eigen::Index cols = dimension(doc, "cols");
    const auto data = doc.find("data");
    if (data == doc.end() || !data->is_array()) malformed("missing array field 'data'");
    if (static_cast<Eigen::Index>(data->size()) != rows * cols)
        malformed("data holds " + std::to_string(data->size()) + " entries, expected " +
                  std::to_string(rows * cols));

    ComplexMatrix a(rows, cols);
    Eigen::Index k = 0;
    for (const auto& entry : *data) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number())
            malformed("entry " + std::to_string(k) + " is not a [re, im] pair");
        const double re = entry[0].get<double>();
        const double im = entry[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im)) throw Error(ErrorKind::NonFinite, "non-finite entry");
        a(k / cols, k % cols) = Complex(re, im);
        ++k;
    }
    return a;
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) malformed("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_matrix(buf.str());
    } catch (const Error& e) {
        throw Error(e.kind(), path.string() + ": " + e.what());
    }
}

void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& a) {
    const std::string text = format_matrix(a);
    std::ofstream out(path);
    if (!out) malformed("cannot write " + path.string());
    out << text;
    if (!out) malformed("write failed for " + path.string());
}

MatrixTuple read_tuple(const std::vector<std::filesystem::path>& paths) {
    std::vector<ComplexMatrix> members;
    members.reserve(paths.size());
    for (const auto& p : paths) members.push_back(read_matrix_file(p));
    return MatrixTuple(std::move(members));
}

std::vector<std::filesystem::path> write_tuple(const std::filesystem::path& dir, const MatrixTuple& t) {
    std::filesystem::create_directories(dir);
    std::vector<std::filesystem::path> paths;
    for (std::size_t k = 0; k < t.size(); ++k) {
        paths.push_back(dir / ("A_" + std::to_string(k + 1) + ".json"));
        write_matrix_file(paths.back(), t[k]);
    }
    return paths;
}

}  // namespace absnorm::cli
