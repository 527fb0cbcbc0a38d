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

#include "coharvest/model.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "coharvest/specfun.hpp"

namespace coharvest::model {

void Dimension::require_closed_form() const {
    if (!closed_form_supported())
        throw std::domain_error(
            "closed-form evaluation supports spatial dimension 1 or 3 only");
}

void DetectorConfig::validate() const {
    if (!(omega > 0)) throw std::invalid_argument("DetectorConfig: omega must be > 0");
    if (mean_radius < 0)
        throw std::invalid_argument("DetectorConfig: mean_radius must be >= 0");
    if (velocity < 0 || velocity >= 1)
        throw std::invalid_argument("DetectorConfig: velocity must be in [0, 1)");
    if (!(coupling > 0))
        throw std::invalid_argument("DetectorConfig: coupling must be > 0");
}

void FieldConfig::validate() const {
    if (mean_energy < 0)
        throw std::invalid_argument("FieldConfig: mean_energy must be >= 0");
    if (phase_r != 0 && phase_r != 1)
        throw std::invalid_argument("FieldConfig: phase_r must be 0 or 1");
}

SwitchingProfile SwitchingProfile::gaussian(double mean_duration) {
    if (!(mean_duration > 0))
        throw std::invalid_argument(
            "SwitchingProfile: Gaussian switching requires mean_duration > 0");
    return {SwitchingKind::Gaussian, mean_duration};
}

SwitchingProfile SwitchingProfile::delta() { return {SwitchingKind::Delta, 0.0}; }

SwitchingProfile SwitchingProfile::from_duration(double mean_duration) {
    if (mean_duration < 0)
        throw std::invalid_argument("SwitchingProfile: mean_duration must be >= 0");
    return mean_duration == 0.0 ? delta() : gaussian(mean_duration);
}

double effective_scale(Dimension dim, double x) {
    if (x < 0) throw std::invalid_argument("effective_scale: x must be >= 0");
    const int n = dim.n();
    return specfun::unit_sphere_area(n + 1) / (M_PI * specfun::unit_sphere_area(n)) * x;
}

double switching_fourier(const SwitchingProfile& profile, double argument) {
    if (profile.is_delta()) return 1.0;
    const double T = profile.mean_duration;
    return std::exp(-M_PI * argument * argument * T * T / 4.0);
}

double smearing_fourier(Dimension dim, double mean_radius, double k) {
    if (k < 0) throw std::invalid_argument("smearing_fourier: k must be >= 0");
    const double Rn = effective_scale(dim, mean_radius);
    return std::exp(-M_PI * k * k * Rn * Rn / 4.0);
}

double coherent_amplitude_modulus(Dimension dim, const FieldConfig& field, double k) {
    field.validate();
    if (field.mean_energy == 0)
        throw std::domain_error(
            "coherent_amplitude: undefined for mean_energy == 0 (degenerate field)");
    const double En = effective_scale(dim, field.mean_energy);
    const double n = static_cast<double>(dim.n());
    return std::exp(-k * k / (2.0 * M_PI * En * En)) / std::pow(M_PI * En, 0.5 * n);
}

std::complex<double> coherent_amplitude(Dimension dim, const FieldConfig& field,
                                        double k) {
    const double mod = coherent_amplitude_modulus(dim, field, k);
    // e^{i pi r / 2} is exactly 1 or i for r in {0, 1}.
    return field.phase_r == 0 ? std::complex<double>(mod, 0.0)
                              : std::complex<double>(0.0, mod);
}

ConfigError::ConfigError(const std::string& message, const std::string& key_,
                         int line_)
    : std::runtime_error(message), key(key_), line(line_) {}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value, int line) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        std::ostringstream os;
        os << "config line " << line << ": invalid numeric value '" << value
           << "' for key '" << key << "'";
        throw ConfigError(os.str(), key, line);
    }
}

} // namespace

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool have_duration = false, want_delta = false;
    double duration = 1.0;

    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            std::ostringstream os;
            os << "config line " << lineno << ": expected key=value, got '" << line
               << "'";
            throw ConfigError(os.str(), "", lineno);
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "dimension") {
            const double v = parse_double(key, value, lineno);
            if (v != 1 && v != 3)
                throw ConfigError("config line " + std::to_string(lineno) +
                                      ": key 'dimension' must be 1 or 3",
                                  key, lineno);
            cfg.dimension = static_cast<int>(v);
        } else if (key == "energy") {
            cfg.field.mean_energy = parse_double(key, value, lineno);
        } else if (key == "duration") {
            duration = parse_double(key, value, lineno);
            have_duration = true;
        } else if (key == "radius") {
            cfg.detector.mean_radius = parse_double(key, value, lineno);
        } else if (key == "velocity") {
            cfg.detector.velocity = parse_double(key, value, lineno);
        } else if (key == "phase_r") {
            const double v = parse_double(key, value, lineno);
            if (v != 0 && v != 1)
                throw ConfigError("config line " + std::to_string(lineno) +
                                      ": key 'phase_r' must be 0 or 1",
                                  key, lineno);
            cfg.field.phase_r = static_cast<int>(v);
        } else if (key == "coupling") {
            cfg.detector.coupling = parse_double(key, value, lineno);
        } else if (key == "switching_kind") {
            if (value == "gaussian") {
                want_delta = false;
            } else if (value == "delta") {
                want_delta = true;
            } else {
                throw ConfigError("config line " + std::to_string(lineno) +
                                      ": key 'switching_kind' must be 'gaussian' or "
                                      "'delta', got '" +
                                      value + "'",
                                  key, lineno);
            }
        } else {
            throw ConfigError("config line " + std::to_string(lineno) +
                                  ": unknown key '" + key + "'",
                              key, lineno);
        }
    }

    try {
        cfg.switching = want_delta ? SwitchingProfile::delta()
                                   : SwitchingProfile::from_duration(duration);
        cfg.field.validate();
        cfg.detector.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what(),
                          have_duration ? "duration" : "", 0);
    }
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config: cannot open file '" + path + "'", "", 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

} // namespace coharvest::model
