#ifndef BIMTOEP_CROSSED_HPP
#define BIMTOEP_CROSSED_HPP

#include "bimtoep/l2window.hpp"

#include <map>

namespace bimtoep {

/// Finitely supported cross-section of the Fell bundle {X^{tensor k}}:
/// k -> element of level k.  These form a *-algebra under graded convolution
/// and the reverse-dual involution; the crossed product's dense subalgebra.
struct CrossSection {
    LadderPtr ladder;
    std::map<int, Vector> values;

    CrossSection() = default;
    explicit CrossSection(LadderPtr l) : ladder(std::move(l)) {}

    void set(int k, Vector v);
    Vector get(int k) const;  // zero when unsupported
    bool supported(int k) const;

    CrossSection operator+(const CrossSection& o) const;
    CrossSection operator-(const CrossSection& o) const;
    CrossSection scaled(Complex s) const;
    double norm() const;  // max over k of the level-k module norm

    /// the two-sided identity: 1_A at k = 0
    static CrossSection delta_unit(const LadderPtr& ladder);
};

/// (f * g)(l) = sum_k f(l-k) (x) g(k)
CrossSection convolve(const CrossSection& f, const CrossSection& g);

/// f*(k) = (f(-k))~ under the antilinear dual identification
CrossSection involute(const CrossSection& f);

/// [Lambda_f]_{ij} = T^j_{f(i-j)} over the window [-N, N]
OperatorMatrix lambda_rep(const CrossSection& f, int N);

struct SynthesisResult {
    CrossSection section;
    std::map<int, double> spread;       // per-diagonal max deviation across columns
    std::map<int, double> reconstruction;  // per-diagonal max symbol-extraction residual
    double max_spread = 0.0;
    bool consistent = false;  // all spreads below the tolerance
};

/// Reads one symbol u_k off every admissible column of each diagonal of M and
/// averages; the per-diagonal spread is the Toeplitz-consistency diagnostic.
SynthesisResult synthesize_section(const OperatorMatrix& M, int radius, double tol = 1e-8);

struct ConvergenceProbe {
    int j;
    Vector v;
};

/// seminorm table p_v(M - Lambda_f) for each probe
std::vector<double> convergence_report(const OperatorMatrix& M, const CrossSection& f,
                                       const std::vector<ConvergenceProbe>& probes);

}  // namespace bimtoep

#endif
