#include "qconc/bounds.hpp"

#include <cmath>
#include <string>

namespace qconc {

CMatrix phi_map(const CMatrix& a, std::size_t n) {
    if (a.rows() != n || a.cols() != n)
        throw ShapeMismatch("phi_map: expected " + std::to_string(n) + "x" + std::to_string(n) +
                            ", got " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    CMatrix out(n, n);
    const double diag_factor = static_cast<double>(n) - 2.0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t wrap = (i + 1) % n;
        for (std::size_t j = 0; j < n; ++j) out(i, j) = -a(i, j);
        out(i, i) = diag_factor * a(i, i) + a(wrap, wrap);
    }
    return out;
}

CMatrix apply_id_phi(const DensityMatrix& rho) {
    const std::size_t n = rho.dim();
    const CMatrix& m = rho.matrix();
    CMatrix out(n * n, n * n);
    CMatrix block(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t a2 = 0; a2 < n; ++a2) {
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t b2 = 0; b2 < n; ++b2) block(b, b2) = m(a * n + b, a2 * n + b2);
            const CMatrix mapped = phi_map(block, n);
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t b2 = 0; b2 < n; ++b2) out(a * n + b, a2 * n + b2) = mapped(b, b2);
        }
    return out;
}

double bound_from_functional(double f_value, std::size_t n) {
    if (n < 2) throw BadDimension("bound_from_functional: N = " + std::to_string(n));
    const double nd = static_cast<double>(n);
    return std::sqrt(2.0 / (nd * (nd - 1.0))) * f_value;
}

double phi_bound(const DensityMatrix& rho) {
    const double nd = static_cast<double>(rho.dim());
    return bound_from_functional(trace_norm(apply_id_phi(rho)) - (nd - 1.0), rho.dim());
}

double ppt_bound(const DensityMatrix& rho) {
    return bound_from_functional(trace_norm(partial_transpose_first(rho)) - 1.0, rho.dim());
}

double realign_bound(const DensityMatrix& rho) {
    return bound_from_functional(trace_norm(realign(rho)) - 1.0, rho.dim());
}

BoundReport evaluate_bounds(const DensityMatrix& rho, double detection_tol) {
    const std::size_t n = rho.dim();
    const double nd = static_cast<double>(n);

    BoundReport report;
    report.n = n;
    report.phi_trace_norm = trace_norm(apply_id_phi(rho));
    report.ppt_trace_norm = trace_norm(partial_transpose_first(rho));
    report.realign_trace_norm = trace_norm(realign(rho));
    report.phi_bound = bound_from_functional(report.phi_trace_norm - (nd - 1.0), n);
    report.ppt_bound = bound_from_functional(report.ppt_trace_norm - 1.0, n);
    report.realign_bound = bound_from_functional(report.realign_trace_norm - 1.0, n);

    if (report.phi_bound > detection_tol) report.detected_by.push_back("phi");
    if (report.ppt_bound > detection_tol) report.detected_by.push_back("ppt");
    if (report.realign_bound > detection_tol) report.detected_by.push_back("realign");
    return report;
}

} // namespace qconc
