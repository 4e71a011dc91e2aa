#include "qei/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace qei {

namespace {

std::string format_double(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void dump_rec(const Json& j, std::ostringstream& out, int indent, int depth) {
    std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
    std::string pad_in(static_cast<std::size_t>(indent) * (depth + 1), ' ');
    switch (j.type()) {
        case Json::value_t::null:
            out << "null";
            break;
        case Json::value_t::boolean:
            out << (j.get<bool>() ? "true" : "false");
            break;
        case Json::value_t::number_integer:
            out << j.get<std::int64_t>();
            break;
        case Json::value_t::number_unsigned:
            out << j.get<std::uint64_t>();
            break;
        case Json::value_t::number_float:
            out << format_double(j.get<double>());
            break;
        case Json::value_t::string:
            out << Json(j.get<std::string>()).dump(); // reuse escaping
            break;
        case Json::value_t::array: {
            if (j.empty()) {
                out << "[]";
                break;
            }
            out << "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                out << pad_in;
                dump_rec(j[i], out, indent, depth + 1);
                if (i + 1 < j.size()) out << ",";
                out << "\n";
            }
            out << pad << "]";
            break;
        }
        case Json::value_t::object: {
            if (j.empty()) {
                out << "{}";
                break;
            }
            out << "{\n";
            std::size_t i = 0;
            for (auto it = j.begin(); it != j.end(); ++it, ++i) {
                out << pad_in << Json(it.key()).dump() << ": ";
                dump_rec(it.value(), out, indent, depth + 1);
                if (i + 1 < j.size()) out << ",";
                out << "\n";
            }
            out << pad << "}";
            break;
        }
        default:
            out << "null";
            break;
    }
}

Json entries_to_json(const Matrix& m) {
    Json entries = Json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            entries.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    return entries;
}

Matrix entries_from_json(const Json& entries, int rows, int cols) {
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows * cols)
        throw ParseError("entries length does not match dims (" + std::to_string(rows) + "x" +
                         std::to_string(cols) + ")");
    Matrix m(rows, cols);
    int idx = 0;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j, ++idx) {
            const Json& cell = entries[idx];
            if (!cell.is_array() || cell.size() != 2)
                throw ParseError("each entry must be a [re, im] pair");
            m(i, j) = Complex(cell[0].get<double>(), cell[1].get<double>());
        }
    if (!m.allFinite()) throw ParseError("matrix has non-finite entries");
    return m;
}

template <typename Fn>
auto guarded(const Fn& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const Json::exception& ex) {
        throw ParseError(std::string("malformed JSON value: ") + ex.what());
    }
}

Json named_map_to_json(const std::map<std::string, double>& m) {
    Json j = Json::object();
    for (const auto& [k, v] : m) j[k] = v;
    return j;
}

} // namespace

Json matrix_to_json(const Matrix& m) {
    Json j;
    if (m.rows() == m.cols())
        j["dims"] = Json::array({m.rows()});
    else
        j["dims"] = Json::array({m.rows(), m.cols()});
    j["entries"] = entries_to_json(m);
    return j;
}

Matrix matrix_from_json(const Json& j) {
    return guarded([&] {
        const Json& dims = j.at("dims");
        int rows, cols;
        if (dims.size() == 1) {
            rows = cols = dims[0].get<int>();
        } else if (dims.size() == 2) {
            rows = dims[0].get<int>();
            cols = dims[1].get<int>();
        } else {
            throw ParseError("matrix dims must have one or two entries");
        }
        if (rows < 1 || cols < 1) throw ParseError("matrix dims must be positive");
        return entries_from_json(j.at("entries"), rows, cols);
    });
}

HermitianOperator hermitian_from_json(const Json& j) {
    return HermitianOperator(matrix_from_json(j));
}

Json state_to_json(const MultipartiteState& s) {
    Json j;
    j["dims"] = s.shape().dims();
    j["entries"] = entries_to_json(s.mat());
    return j;
}

MultipartiteState state_from_json(const Json& j) {
    return guarded([&] {
        std::vector<int> dims = j.at("dims").get<std::vector<int>>();
        SystemShape shape(dims);
        Matrix m = entries_from_json(j.at("entries"), shape.total_dim(), shape.total_dim());
        return MultipartiteState(DensityOperator(std::move(m)), shape);
    });
}

Json channel_to_json(const KrausChannel& c) {
    Json j;
    j["in_dim"] = c.in_dim();
    j["out_dim"] = c.out_dim();
    Json kraus = Json::array();
    for (const Matrix& f : c.kraus()) kraus.push_back(matrix_to_json(f));
    j["kraus"] = kraus;
    return j;
}

KrausChannel channel_from_json(const Json& j) {
    return guarded([&] {
        int in = j.at("in_dim").get<int>();
        int out = j.at("out_dim").get<int>();
        std::vector<Matrix> ops;
        for (const Json& f : j.at("kraus")) ops.push_back(matrix_from_json(f));
        return KrausChannel(std::move(ops), in, out);
    });
}

Json povm_to_json(const Povm& p) {
    Json j;
    Json elems = Json::array();
    for (const auto& e : p.elements()) elems.push_back(matrix_to_json(e.mat()));
    j["elements"] = elems;
    return j;
}

Povm povm_from_json(const Json& j) {
    return guarded([&] {
        std::vector<HermitianOperator> elems;
        for (const Json& e : j.at("elements")) elems.push_back(hermitian_from_json(e));
        return Povm(std::move(elems));
    });
}

Json ensemble_to_json(const Ensemble& e) {
    Json j;
    j["probs"] = e.weights().probs();
    Json states = Json::array();
    for (const auto& s : e.states()) states.push_back(matrix_to_json(s.mat()));
    j["states"] = states;
    return j;
}

Ensemble ensemble_from_json(const Json& j) {
    return guarded([&] {
        ProbabilityVector probs(j.at("probs").get<std::vector<double>>());
        std::vector<DensityOperator> states;
        for (const Json& s : j.at("states")) states.emplace_back(matrix_from_json(s));
        return Ensemble(std::move(probs), std::move(states));
    });
}

Json verdict_to_json(const VerdictReport& v) {
    Json j;
    j["name"] = v.name;
    j["lhs"] = v.lhs;
    j["rhs"] = v.rhs;
    j["gap"] = v.gap;
    j["holds"] = v.holds;
    j["tolerance"] = v.tolerance;
    j["residuals"] = named_map_to_json(v.residuals);
    Json meta = Json::object();
    meta["dims"] = v.dims;
    if (v.seed) meta["seed"] = *v.seed;
    if (v.equality) meta["equality"] = *v.equality;
    if (v.lhs_infinite) meta["lhs_infinite"] = true;
    if (v.rhs_infinite) meta["rhs_infinite"] = true;
    j["meta"] = meta;
    return j;
}

Json residual_to_json(const ResidualReport& r) {
    Json j;
    j["name"] = r.condition_name;
    j["residual"] = r.residual;
    j["satisfied"] = r.satisfied;
    j["eq_tol"] = r.eq_tol;
    j["components"] = named_map_to_json(r.components);
    return j;
}

Json info_to_json(const InfoReport& r) {
    Json j;
    j["accessible_info"] = r.accessible_info;
    j["chi"] = r.chi;
    j["hall_bound"] = r.hall_bound;
    j["gaps"] = named_map_to_json(r.gaps);
    j["equality_residuals"] = named_map_to_json(r.equality_residuals);
    return j;
}

std::string dump_json(const Json& j, int indent) {
    std::ostringstream out;
    dump_rec(j, out, indent, 0);
    out << "\n";
    return out.str();
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    out << dump_json(j);
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::exception& ex) {
        throw ParseError("failed to parse " + path.string() + ": " + ex.what());
    }
}

} // namespace qei
