#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pshf/extension.hpp"
#include "pshf/levi.hpp"
#include "pshf/sampling.hpp"

#include <json.hpp>

namespace pshf {

// Serializes a double with 17 significant digits (stable report bytes).
std::string float17(double x);

struct SampleReport {
    std::string poly_id;
    long samples = 0;
    std::uint64_t seed = 0;
    double minimum = 0.0;
    std::vector<double> argmin;
    long argmin_index = -1;
    double elapsed_sec = 0.0;  // excluded from reports unless timings requested

    nlohmann::ordered_json to_json(bool with_timings = false) const;
};

// Seeded minimum of a homogeneous polynomial over the unit sphere.
SampleReport sphere_min(const CompiledPoly& poly, long samples, std::uint64_t seed,
                        const std::string& id);
SampleReport sphere_min(const RationalPoly& poly, long samples, std::uint64_t seed,
                        const std::string& id);

struct Certificate {
    std::string case_tag;
    nlohmann::ordered_json spec_json;
    std::string p_id;
    bool p_paper_backed = true;  // false marks "uncertified by paper" choices of P
    std::vector<SampleReport> per_r;
    std::vector<double> theta;   // theta_r for r = 1..n
    double tolerance = 0.0;
    bool pass = false;

    nlohmann::ordered_json to_json(bool with_timings = false) const;
};

// Sphere-samples every leading principal minor of the complex Hessian of
// rho = P(d_M, d_N); pass iff all sampled minima clear the tolerance
// 1e-14 * max |coefficient|. Also asserts rho and grad rho vanish on M u N.
Certificate certify_psh(const JordanSpec& spec, const BivariatePoly& P, const std::string& p_id,
                        long samples, std::uint64_t seed);

enum class Family { DiagUniform, DiagPair, ComplexEqual };
Family family_from_string(const std::string& s);
std::string family_name(Family f);
JordanSpec family_spec(Family f, int n, const Rat& t);

struct ProbeRecord {
    double scalar = 0.0;
    bool pass = false;
};

struct ThresholdReport {
    std::string family;
    int n = 0;
    std::string p_id;
    long samples = 0;
    std::uint64_t seed = 0;
    double tol = 0.0;
    double threshold = 0.0;  // midpoint of the final bracket; +inf when unbounded
    double last_pass = 0.0, first_fail = 0.0;
    bool unbounded = false;
    bool monotone = true;  // no passing probe above a failing probe
    std::vector<ProbeRecord> probes;

    nlohmann::ordered_json to_json() const;
};

// 1-D bisection on the family scalar between the last passing and first
// failing certification, to the requested width.
ThresholdReport empirical_threshold(Family family, int n, const BivariatePoly& P,
                                    const std::string& p_id, long samples, double tol,
                                    std::uint64_t seed);

// Sampled min of Q/|R| over sphere points with R != 0; Q must sample
// positive (certify it first).
double domination_constant(const RationalPoly& Q, const RationalPoly& R, long samples,
                           std::uint64_t seed);

struct CheckRecord {
    std::string name;
    bool pass = false;
    std::string detail;  // value, witness, or bound as text
};

struct CaseReport {
    std::string name;
    bool pass = true;
    std::vector<CheckRecord> checks;

    void add(const std::string& n, bool ok, const std::string& detail = "");
    nlohmann::ordered_json to_json() const;
};

// Exact proof-decomposition checks for the three certified families.
CaseReport verify_case1_identities(int r, std::uint64_t seed);
CaseReport verify_case2_identities();
CaseReport verify_case3_identities(std::uint64_t seed);

// Sampled slack of det H_r >= (dM^{2r} + dN^{2r}) / (5 * 2^{r+1}); returns
// the minimum slack over the sphere sample.
double case1_lower_bound_slack(const JordanSpec& spec, int r, long samples, std::uint64_t seed);

}  // namespace pshf
