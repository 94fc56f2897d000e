#include "pshf/jordan.hpp"

#include <cmath>
#include <fstream>

namespace pshf {

void JordanSpec::validate() const {
    if (n <= 0) throw SpecError("spec: n must be positive");
    int d = 0;
    for (const auto& b : blocks) {
        if (const auto* r = std::get_if<RealBlock>(&b)) {
            if (r->size <= 0) throw SpecError("spec: real block size must be positive");
        } else if (std::get<ComplexBlock>(b).pairs <= 0) {
            throw SpecError("spec: complex block pairs must be positive");
        }
        d += block_dim(b);
    }
    if (d != n) throw SpecError("spec: block dimensions sum to " + std::to_string(d) +
                                ", expected n = " + std::to_string(n));
}

bool JordanSpec::is_semisimple() const {
    for (const auto& b : blocks) {
        if (block_degenerate(b)) continue;
        const Rat d = std::holds_alternative<RealBlock>(b) ? std::get<RealBlock>(b).delta
                                                           : std::get<ComplexBlock>(b).delta;
        if (d != 0) return false;
    }
    return true;
}

bool JordanSpec::has_nondegenerate() const {
    for (const auto& b : blocks)
        if (!block_degenerate(b)) return true;
    return false;
}

JordanSpec JordanSpec::with_delta(const Rat& d) const {
    JordanSpec s = *this;
    for (auto& b : s.blocks) {
        if (block_degenerate(b)) continue;
        if (auto* r = std::get_if<RealBlock>(&b))
            r->delta = d;
        else
            std::get<ComplexBlock>(b).delta = d;
    }
    return s;
}

std::vector<Rat> JordanSpec::eigen_real_parts() const {
    std::vector<Rat> out;
    out.reserve(n);
    for (const auto& b : blocks) {
        if (const auto* r = std::get_if<RealBlock>(&b)) {
            for (int i = 0; i < r->size; ++i) out.push_back(r->a);
        } else {
            const auto& c = std::get<ComplexBlock>(b);
            for (int i = 0; i < 2 * c.pairs; ++i) out.push_back(c.c);
        }
    }
    return out;
}

std::string JordanSpec::case_tag() const {
    bool all_real_1x1 = true;
    for (const auto& b : blocks)
        if (!std::holds_alternative<RealBlock>(b) || std::get<RealBlock>(b).size != 1)
            all_real_1x1 = false;
    if (all_real_1x1) {
        const auto a = eigen_real_parts();
        bool uniform = true;
        for (const auto& x : a)
            if (x != a[0]) uniform = false;
        if (uniform) return "diag-uniform";
        if (n == 2) return "diag-pair";
        return "general";
    }
    if (blocks.size() == 1 && std::holds_alternative<ComplexBlock>(blocks[0]) &&
        std::get<ComplexBlock>(blocks[0]).pairs == 1)
        return "complex-2x2";
    return "general";
}

double JordanSpec::theta_r(int r) const {
    const auto a = eigen_real_parts();
    if (r < 1 || r > static_cast<int>(a.size())) throw SpecError("theta_r: r out of range");
    double t = 0.0;
    for (int j = 0; j < r; ++j) {
        const double aj = rat_to_double(a[j]);
        t = std::max(t, std::abs(aj) / std::sqrt(1.0 + aj * aj));
    }
    return t;
}

namespace {

Rat json_rat(const nlohmann::json& v, const char* what) {
    if (v.is_string()) return parse_rat(v.get<std::string>());
    if (v.is_number_integer()) return Rat(v.get<long>());
    throw SpecError(std::string("spec: ") + what + " must be a \"p/q\" string or integer");
}

}  // namespace

JordanSpec JordanSpec::from_json(const nlohmann::json& j) {
    JordanSpec s;
    if (!j.is_object() || !j.contains("n") || !j.contains("blocks"))
        throw SpecError("spec: expected {\"n\": int, \"blocks\": [...]}");
    s.n = j.at("n").get<int>();
    for (const auto& jb : j.at("blocks")) {
        const std::string type = jb.at("type").get<std::string>();
        if (type == "real") {
            RealBlock b;
            b.a = json_rat(jb.at("a"), "a");
            b.size = jb.value("size", 1);
            if (jb.contains("delta")) b.delta = json_rat(jb.at("delta"), "delta");
            s.blocks.emplace_back(b);
        } else if (type == "complex") {
            ComplexBlock b;
            b.b = json_rat(jb.at("b"), "b");
            b.c = json_rat(jb.at("c"), "c");
            b.pairs = jb.value("pairs", 1);
            if (jb.contains("delta")) b.delta = json_rat(jb.at("delta"), "delta");
            s.blocks.emplace_back(b);
        } else {
            throw SpecError("spec: unknown block type '" + type + "'");
        }
    }
    s.validate();
    return s;
}

JordanSpec JordanSpec::from_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw SpecError("cannot open spec file: " + path);
    nlohmann::json j;
    try {
        f >> j;
    } catch (const std::exception& e) {
        throw SpecError("bad JSON in " + path + ": " + e.what());
    }
    return from_json(j);
}

nlohmann::ordered_json JordanSpec::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["blocks"] = nlohmann::ordered_json::array();
    for (const auto& b : blocks) {
        nlohmann::ordered_json jb;
        if (const auto* r = std::get_if<RealBlock>(&b)) {
            jb["type"] = "real";
            jb["a"] = rat_str(r->a);
            jb["size"] = r->size;
            if (r->size > 1) jb["delta"] = rat_str(r->delta);
        } else {
            const auto& c = std::get<ComplexBlock>(b);
            jb["type"] = "complex";
            jb["b"] = rat_str(c.b);
            jb["c"] = rat_str(c.c);
            jb["pairs"] = c.pairs;
            if (c.pairs > 1) jb["delta"] = rat_str(c.delta);
        }
        j["blocks"].push_back(jb);
    }
    return j;
}

RatMatrix jordan_matrix(const JordanSpec& spec) {
    spec.validate();
    RatMatrix m(spec.n, spec.n);
    int off = 0;
    for (const auto& blk : spec.blocks) {
        if (const auto* r = std::get_if<RealBlock>(&blk)) {
            for (int i = 0; i < r->size; ++i) {
                m(off + i, off + i) = r->a;
                if (i + 1 < r->size) m(off + i, off + i + 1) = r->delta;
            }
            off += r->size;
        } else {
            const auto& c = std::get<ComplexBlock>(blk);
            for (int p = 0; p < c.pairs; ++p) {
                const int i = off + 2 * p;
                m(i, i) = c.c;
                m(i, i + 1) = -c.b;
                m(i + 1, i) = c.b;
                m(i + 1, i + 1) = c.c;
                if (p + 1 < c.pairs) {
                    m(i, i + 2) = c.delta;
                    m(i + 1, i + 3) = c.delta;
                }
            }
            off += 2 * c.pairs;
        }
    }
    return m;
}

}  // namespace pshf
