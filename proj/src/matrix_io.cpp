#include "entropy_kit/matrix_io.hpp"

#include <fstream>
#include <string>

namespace entropy_kit {

namespace {

std::vector<std::vector<double>> part(const Matrix& m, bool imag) {
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        auto& row = rows[static_cast<std::size_t>(i)];
        row.reserve(static_cast<std::size_t>(m.cols()));
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(imag ? m(i, j).imag() : m(i, j).real());
    }
    return rows;
}

void read_part(const nlohmann::json& rows, std::size_t d, Matrix& m, bool imag, const char* key) {
    if (!rows.is_array() || rows.size() != d) {
        throw ParseError(std::string("\"") + key + "\" must be an array of " + std::to_string(d) + " rows");
    }
    for (std::size_t i = 0; i < d; ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || row.size() != d) {
            throw ParseError(std::string("\"") + key + "\" row " + std::to_string(i) + " must have " +
                             std::to_string(d) + " entries");
        }
        for (std::size_t j = 0; j < d; ++j) {
            if (!row[j].is_number()) throw ParseError(std::string("non-numeric entry in \"") + key + "\"");
            const double v = row[j].get<double>();
            auto& z = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            z = imag ? Complex(z.real(), v) : Complex(v, z.imag());
        }
    }
}

}  // namespace

nlohmann::json matrix_to_json(const Matrix& m) {
    return {{"d", m.rows()}, {"re", part(m, false)}, {"im", part(m, true)}};
}

HermitianOperator hermitian_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("re")) {
        throw ParseError("matrix JSON needs keys \"d\" and \"re\"");
    }
    if (!j["d"].is_number_integer() || j["d"].get<long long>() < 1) {
        throw ParseError("\"d\" must be a positive integer");
    }
    const auto d = j["d"].get<std::size_t>();
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    read_part(j["re"], d, m, false, "re");
    if (j.contains("im")) read_part(j["im"], d, m, true, "im");
    return HermitianOperator(std::move(m));
}

HermitianOperator read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("malformed JSON in " + path.string() + ": " + e.what());
    }
    return hermitian_from_json(j);
}

void write_matrix_file(const std::filesystem::path& path, const Matrix& m) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write matrix file " + path.string());
    out << matrix_to_json(m).dump() << '\n';
}

}  // namespace entropy_kit
