// Copyright 2026 the coharvest developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coharvest/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace coharvest::quad {

void QuadratureSpec::validate() const {
    if (abs_tol < 0 || rel_tol < 0)
        throw std::invalid_argument("QuadratureSpec: tolerances must be >= 0");
    if (abs_tol == 0 && rel_tol == 0)
        throw std::invalid_argument(
            "QuadratureSpec: at least one of abs_tol, rel_tol must be > 0");
    if (max_subdivisions < 8)
        throw std::invalid_argument("QuadratureSpec: max_subdivisions must be >= 8");
    if (tail_cutoff_threshold < 0)
        throw std::invalid_argument("QuadratureSpec: tail_cutoff_threshold must be >= 0");
}

IntegrandError::IntegrandError(double x)
    : std::runtime_error([x] {
          std::ostringstream os;
          os << "integrand evaluated to a non-finite value at x = " << x;
          return os.str();
      }()),
      abscissa(x) {}

namespace {

// Gauss-Kronrod 7-15 pair (QUADPACK dqk15 abscissae/weights, positive half).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    double value;
    double error;
};

// One Gauss-Kronrod 15-point evaluation over [a, b] with the QUADPACK
// error heuristic.
Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    auto eval = [&](double x) {
        const double y = f(x);
        if (!std::isfinite(y)) throw IntegrandError(x);
        return y;
    };

    const double fc = eval(center);
    double result_kronrod = fc * kWgk[7];
    double result_gauss = fc * kWg[3];
    double resabs = std::abs(result_kronrod);

    std::array<double, 7> flow{}, fhigh{};
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        flow[j] = eval(center - dx);
        fhigh[j] = eval(center + dx);
        const double fsum = flow[j] + fhigh[j];
        result_kronrod += kWgk[j] * fsum;
        resabs += kWgk[j] * (std::abs(flow[j]) + std::abs(fhigh[j]));
        if (j % 2 == 1) result_gauss += kWg[j / 2] * fsum;
    }

    const double mean = result_kronrod * 0.5;
    double resasc = kWgk[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(flow[j] - mean) + std::abs(fhigh[j] - mean));

    result_kronrod *= half;
    result_gauss *= half;
    resabs *= std::abs(half);
    resasc *= std::abs(half);

    double err = std::abs(result_kronrod - result_gauss);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    const double underflow = std::numeric_limits<double>::min();
    if (resabs > underflow / (50.0 * eps))
        err = std::max(err, 50.0 * eps * resabs);

    return Panel{a, b, result_kronrod, err};
}

IntegralResult refine(const std::function<double(double)>& f,
                      std::vector<Panel>& panels, const QuadratureSpec& spec) {
    int splits = 0;
    double total_value = 0.0, total_error = 0.0;

    auto totals = [&] {
        total_value = 0.0;
        total_error = 0.0;
        for (const Panel& p : panels) {
            total_value += p.value;
            total_error += p.error;
        }
    };

    totals();
    while (true) {
        const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(total_value));
        if (total_error <= tol) break;
        if (splits >= spec.max_subdivisions) break;

        std::size_t worst = 0;
        for (std::size_t i = 1; i < panels.size(); ++i)
            if (panels[i].error > panels[worst].error) worst = i;
        const Panel p = panels[worst];
        if (p.b - p.a <= std::abs(p.a) * std::numeric_limits<double>::epsilon() * 4)
            break; // panel no longer splittable in double precision

        const double mid = 0.5 * (p.a + p.b);
        panels[worst] = gk15(f, p.a, mid);
        panels.push_back(gk15(f, mid, p.b));
        ++splits;
        totals();
    }

    IntegralResult r;
    r.value = total_value;
    r.error_estimate = total_error;
    r.subdivisions_used = splits;
    r.converged =
        total_error <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total_value));
    return r;
}

} // namespace

IntegralResult integrate_interval(const std::function<double(double)>& f,
                                  double a, double b, const QuadratureSpec& spec) {
    spec.validate();
    if (!(a < b)) throw std::invalid_argument("integrate_interval: requires a < b");
    std::vector<Panel> panels{gk15(f, a, b)};
    return refine(f, panels, spec);
}

IntegralResult integrate_semi_infinite(const std::function<double(double)>& f,
                                       const QuadratureSpec& spec,
                                       double scale_hint) {
    spec.validate();
    if (!(scale_hint > 0) || !std::isfinite(scale_hint))
        throw std::invalid_argument("integrate_semi_infinite: scale_hint must be > 0");

    // Geometric panel ladder 0, h, 2h, 4h, ... until a panel's contribution
    // drops below the tail cutoff.
    std::vector<Panel> panels;
    double lo = 0.0, hi = scale_hint;
    bool tail_reached = false;
    constexpr int kMaxDoublings = 64;
    for (int i = 0; i < kMaxDoublings; ++i) {
        panels.push_back(gk15(f, lo, hi));
        // Two consecutive sub-threshold panels guard against hitting a node
        // of an integrand whose envelope has not decayed yet.
        const std::size_t m = panels.size();
        if (m >= 2 && std::abs(panels[m - 1].value) < spec.tail_cutoff_threshold &&
            std::abs(panels[m - 2].value) < spec.tail_cutoff_threshold) {
            tail_reached = true;
            break;
        }
        lo = hi;
        hi *= 2.0;
    }

    IntegralResult r = refine(f, panels, spec);
    if (!tail_reached) r.converged = false;
    return r;
}

IntegralResult integrate_polar(const std::function<double(double)>& f,
                               const QuadratureSpec& spec) {
    return integrate_interval(f, -1.0, 1.0, spec);
}

} // namespace coharvest::quad
