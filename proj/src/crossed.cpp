#include "bimtoep/crossed.hpp"

namespace bimtoep {

void CrossSection::set(int k, Vector v) {
    if (std::abs(k) > ladder->range()) throw StructuralError("section support outside ladder range");
    if (v.size() != ladder->level_dim(k)) throw StructuralError("section value has wrong dimension");
    if (v.isZero(0.0))
        values.erase(k);
    else
        values[k] = std::move(v);
}

Vector CrossSection::get(int k) const {
    auto it = values.find(k);
    if (it != values.end()) return it->second;
    return Vector::Zero(ladder->level_dim(k));
}

bool CrossSection::supported(int k) const { return values.count(k) != 0; }

static void check_same_ladder(const CrossSection& a, const CrossSection& b) {
    if (a.ladder != b.ladder) throw StructuralError("sections over different ladders");
}

CrossSection CrossSection::operator+(const CrossSection& o) const {
    check_same_ladder(*this, o);
    CrossSection out = *this;
    for (const auto& [k, v] : o.values) out.set(k, out.get(k) + v);
    return out;
}
CrossSection CrossSection::operator-(const CrossSection& o) const {
    check_same_ladder(*this, o);
    CrossSection out = *this;
    for (const auto& [k, v] : o.values) out.set(k, out.get(k) - v);
    return out;
}
CrossSection CrossSection::scaled(Complex s) const {
    CrossSection out(ladder);
    for (const auto& [k, v] : values) out.set(k, s * v);
    return out;
}

double CrossSection::norm() const {
    double n = 0;
    for (const auto& [k, v] : values) n = std::max(n, ladder->level(k)->module_norm(v));
    return n;
}

CrossSection CrossSection::delta_unit(const LadderPtr& ladder) {
    CrossSection f(ladder);
    f.set(0, ladder->algebra()->unit());
    return f;
}

CrossSection convolve(const CrossSection& f, const CrossSection& g) {
    check_same_ladder(f, g);
    const auto& ladder = f.ladder;
    CrossSection out(ladder);
    for (const auto& [m, fv] : f.values)
        for (const auto& [k, gv] : g.values) {
            int l = m + k;
            if (std::abs(l) > ladder->range())
                throw StructuralError("convolution support escapes ladder range");
            out.set(l, out.get(l) + ladder->contract(m, k, fv, gv));
        }
    return out;
}

CrossSection involute(const CrossSection& f) {
    CrossSection out(f.ladder);
    for (const auto& [k, v] : f.values) out.set(-k, f.ladder->dualize(k, v));
    return out;
}

OperatorMatrix lambda_rep(const CrossSection& f, int N) {
    OperatorMatrix M(f.ladder, N);
    for (const auto& [k, v] : f.values)
        for (int j = -N; j <= N; ++j) {
            int i = j + k;
            if (i < -N || i > N) continue;
            M.set_block(i, j, creation_left(f.ladder, k, v, j).mat);
        }
    return M;
}

SynthesisResult synthesize_section(const OperatorMatrix& M, int radius, double tol) {
    const auto& ladder = M.ladder;
    const int N = M.N;
    if (radius > ladder->range()) throw StructuralError("synthesis radius exceeds ladder range");
    SynthesisResult out;
    out.section = CrossSection(ladder);
    for (int k = -radius; k <= radius; ++k) {
        std::vector<Vector> symbols;
        double rec = 0;
        for (int j = -N; j <= N; ++j) {
            int i = j + k;
            if (i < -N || i > N) continue;
            SymbolExtraction se = extract_symbol_checked(M.block_map(i, j));
            rec = std::max(rec, se.residual);
            symbols.push_back(std::move(se.symbol));
        }
        if (symbols.empty()) continue;
        Vector mean = Vector::Zero(ladder->level_dim(k));
        for (const auto& s : symbols) mean += s;
        mean /= static_cast<double>(symbols.size());
        double spread = 0;
        for (const auto& s : symbols)
            spread = std::max(spread, ladder->level(k)->module_norm(s - mean));
        out.spread[k] = spread;
        out.reconstruction[k] = rec;
        out.max_spread = std::max(out.max_spread, spread);
        out.section.set(k, std::move(mean));
    }
    double rec_worst = 0;
    for (const auto& [k, r] : out.reconstruction) rec_worst = std::max(rec_worst, r);
    out.consistent = out.max_spread <= tol && rec_worst <= tol;
    return out;
}

std::vector<double> convergence_report(const OperatorMatrix& M, const CrossSection& f,
                                       const std::vector<ConvergenceProbe>& probes) {
    OperatorMatrix diff = M - lambda_rep(f, M.N);
    std::vector<double> out;
    out.reserve(probes.size());
    for (const auto& p : probes) out.push_back(sigma_seminorm(diff, p.v, p.j));
    return out;
}

}  // namespace bimtoep
