#include "biphoton/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace biphoton {

namespace {

using nlohmann::json;

cxd complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::invalid_argument("expected a [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

ComplexMatrix2 matrix_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("expected a 2x2 matrix");
    ComplexMatrix2 m;
    for (int r = 0; r < 2; ++r) {
        if (!j[r].is_array() || j[r].size() != 2)
            throw std::invalid_argument("expected a 2x2 matrix");
        for (int c = 0; c < 2; ++c) m(r, c) = complex_from_json(j[r][c]);
    }
    return m;
}

const char* kind_name(OpticalElement::Kind k) {
    switch (k) {
        case OpticalElement::Kind::PhasePlate: return "phase_plate";
        case OpticalElement::Kind::Rotator: return "rotator";
        case OpticalElement::Kind::HalfWavePlate: return "half_wave_plate";
        case OpticalElement::Kind::QuarterWavePlate: return "quarter_wave_plate";
    }
    return "phase_plate";
}

OpticalElement::Kind kind_from_name(const std::string& name) {
    if (name == "phase_plate") return OpticalElement::Kind::PhasePlate;
    if (name == "rotator") return OpticalElement::Kind::Rotator;
    if (name == "half_wave_plate") return OpticalElement::Kind::HalfWavePlate;
    if (name == "quarter_wave_plate") return OpticalElement::Kind::QuarterWavePlate;
    throw std::invalid_argument("unknown element kind: " + name);
}

ElementSequence sequence_from_json(const json& j) {
    ElementSequence s;
    s.global_phase = j.at("global_phase").get<double>();
    for (const json& e : j.at("elements")) {
        s.elements.push_back(
            {kind_from_name(e.at("kind").get<std::string>()), e.at("angle").get<double>()});
    }
    return s;
}

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

// Writer side: decimal text with 17 significant digits so every double
// round-trips. Output stays plain JSON.

struct Writer {
    std::ostringstream os;

    Writer() { os << std::setprecision(17); }

    void complex_pair(cxd z) { os << '[' << z.real() << ", " << z.imag() << ']'; }

    void matrix(const ComplexMatrix2& m) {
        os << '[';
        for (int r = 0; r < 2; ++r) {
            os << '[';
            complex_pair(m(r, 0));
            os << ", ";
            complex_pair(m(r, 1));
            os << ']' << (r == 0 ? ", " : "");
        }
        os << ']';
    }

    void sequence(const ElementSequence& s) {
        os << "{\"global_phase\": " << s.global_phase << ", \"elements\": [";
        for (std::size_t i = 0; i < s.elements.size(); ++i) {
            if (i) os << ", ";
            os << "{\"kind\": \"" << kind_name(s.elements[i].kind)
               << "\", \"angle\": " << s.elements[i].angle << '}';
        }
        os << "]}";
    }
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace

StateFile load_state_file(const std::string& path) {
    const json j = parse_file(path);

    StateFile s;
    if (!j.contains("dimension") || !j["dimension"].is_number_integer())
        throw std::invalid_argument(path + ": missing integer \"dimension\"");
    s.dimension = j["dimension"].get<int>();
    if (s.dimension != 3 && s.dimension != 4)
        throw std::invalid_argument(path + ": dimension must be 3 or 4");

    if (!j.contains("amplitudes") || !j["amplitudes"].is_array())
        throw std::invalid_argument(path + ": missing \"amplitudes\" array");
    for (const json& a : j["amplitudes"]) s.amplitudes.push_back(complex_from_json(a));
    if (static_cast<int>(s.amplitudes.size()) != s.dimension)
        throw std::invalid_argument(path + ": amplitude count does not match dimension");

    double norm2 = 0.0;
    for (cxd a : s.amplitudes) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            throw std::invalid_argument(path + ": non-finite amplitude");
        norm2 += std::norm(a);
    }
    const double norm = std::sqrt(norm2);
    if (norm == 0.0) throw std::invalid_argument(path + ": zero state");
    s.norm_deviation = std::abs(norm - 1.0);
    for (cxd& a : s.amplitudes) a /= norm;
    // Files are expected within 1e-6 of unit norm; worse inputs are still
    // renormalized but flagged so the CLI can warn.
    s.renormalized = s.norm_deviation > 1e-6;
    return s;
}

void save_state_file(const std::string& path, const StateFile& s) {
    Writer w;
    w.os << "{\n  \"dimension\": " << s.dimension << ",\n  \"amplitudes\": [";
    for (std::size_t i = 0; i < s.amplitudes.size(); ++i) {
        if (i) w.os << ", ";
        w.complex_pair(s.amplitudes[i]);
    }
    w.os << "]\n}\n";
    write_file(path, w.os.str());
}

PlanFile load_plan_file(const std::string& path) {
    const json j = parse_file(path);

    PlanFile p;
    if (!j.contains("x") || !j["x"].is_number())
        throw std::invalid_argument(path + ": missing numeric \"x\"");
    p.x = j["x"].get<double>();
    if (!(p.x >= 0.0 && p.x <= 1.0))
        throw std::invalid_argument(path + ": seed x outside [0, 1]");

    p.u = matrix_from_json(j.at("u"));
    p.w = matrix_from_json(j.at("w"));
    if (!is_unitary(p.u, 1e-10))
        throw std::invalid_argument(path + ": u is not unitary within 1e-10");
    if (!is_unitary(p.w, 1e-10))
        throw std::invalid_argument(path + ": w is not unitary within 1e-10");

    p.provenance = j.value("provenance", "svd");
    if (p.provenance != "svd" && p.provenance != "closed-form")
        throw std::invalid_argument(path + ": unknown provenance \"" + p.provenance + "\"");

    if (j.contains("u_elements")) p.u_elements = sequence_from_json(j["u_elements"]);
    if (j.contains("w_elements")) p.w_elements = sequence_from_json(j["w_elements"]);
    return p;
}

void save_plan_file(const std::string& path, const PlanFile& p) {
    Writer w;
    w.os << "{\n  \"x\": " << p.x << ",\n  \"u\": ";
    w.matrix(p.u);
    w.os << ",\n  \"w\": ";
    w.matrix(p.w);
    w.os << ",\n  \"provenance\": \"" << p.provenance << '"';
    if (p.u_elements) {
        w.os << ",\n  \"u_elements\": ";
        w.sequence(*p.u_elements);
    }
    if (p.w_elements) {
        w.os << ",\n  \"w_elements\": ";
        w.sequence(*p.w_elements);
    }
    w.os << "\n}\n";
    write_file(path, w.os.str());
}

std::string state_block_json(int dimension, const std::vector<cxd>& amplitudes,
                             const std::string& basis_label, int index) {
    Writer w;
    w.os << "{\"dimension\": " << dimension << ", \"basis\": \"" << basis_label
         << "\", \"index\": " << index << ", \"amplitudes\": [";
    for (std::size_t i = 0; i < amplitudes.size(); ++i) {
        if (i) w.os << ", ";
        w.complex_pair(amplitudes[i]);
    }
    w.os << "]}";
    return w.os.str();
}

} // namespace biphoton
