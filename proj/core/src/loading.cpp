#include "tlsim/loading.hpp"

#include <cmath>
#include <complex>
#include <fstream>
#include <numbers>
#include <sstream>
#include <vector>

namespace tlsim::loading {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& field, const std::filesystem::path& path, std::size_t line_no,
                    const char* column) {
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(field, &consumed);
    } catch (const std::exception&) {
        consumed = 0;
    }
    if (consumed != field.size() || field.empty()) {
        throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": cannot parse " + column +
                          " value '" + field + "'");
    }
    return value;
}

}  // namespace

FourierModel dft_coefficients(std::span<const double, k_months> samples) {
    constexpr auto n = static_cast<double>(k_months);
    for (std::size_t i = 0; i < k_months; ++i) {
        if (!std::isfinite(samples[i])) {
            throw ConfigError("non-finite sample at index " + std::to_string(i));
        }
    }

    FourierModel model;
    for (std::size_t k = 0; k <= k_harmonics; ++k) {
        std::complex<double> xk(0.0, 0.0);
        for (std::size_t j = 0; j < k_months; ++j) {
            const double angle = -2.0 * std::numbers::pi * static_cast<double>(k * j) / n;
            xk += samples[j] * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        if (k == 0) {
            model.mean = xk.real() / n;
        } else if (k == k_harmonics) {
            // Nyquist term: half weight keeps the real reconstruction exact.
            model.cos_coeff[k - 1] = xk.real() / n;
            model.sin_coeff[k - 1] = 0.0;
        } else {
            model.cos_coeff[k - 1] = 2.0 * xk.real() / n;
            model.sin_coeff[k - 1] = -2.0 * xk.imag() / n;
        }
    }
    return model;
}

double synthesize(const FourierModel& model, double t_years) {
    double value = model.mean;
    const double base = 2.0 * std::numbers::pi * t_years / model.period_years;
    for (std::size_t n = 1; n <= k_harmonics; ++n) {
        const double angle = base * static_cast<double>(n);
        value += model.cos_coeff[n - 1] * std::cos(angle) + model.sin_coeff[n - 1] * std::sin(angle);
    }
    return value;
}

double current_at(const CurrentLoad& load, double t_years) {
    return std::abs(-load.base_a - load.amplitude_a * std::sin(4.0 * std::numbers::pi * t_years));
}

WeatherSeries ingest_weather_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open weather CSV '" + path.string() + "'");

    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) throw ConfigError(path.string() + ": empty file");
    ++line_no;
    {
        std::string header = trim(line);
        if (header != "month,wind_ft_s,temp_K") {
            throw ConfigError(path.string() + ":1: expected header 'month,wind_ft_s,temp_K', got '" +
                              header + "'");
        }
    }

    WeatherSeries series;
    series.state_name = path.stem().string();
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        if (rows == k_months) {
            throw ConfigError(path.string() + ":" + std::to_string(line_no) +
                              ": expected 12 rows, found more");
        }
        std::istringstream row(line);
        std::string month, wind, temp;
        if (!std::getline(row, month, ',') || !std::getline(row, wind, ',') || !std::getline(row, temp)) {
            throw ConfigError(path.string() + ":" + std::to_string(line_no) +
                              ": expected 3 comma-separated columns");
        }
        const double w = parse_number(trim(wind), path, line_no, "wind_ft_s");
        const double t = parse_number(trim(temp), path, line_no, "temp_K");
        if (w < 0.0) {
            throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": negative wind speed " +
                              std::to_string(w));
        }
        if (!(t > 0.0)) {
            throw ConfigError(path.string() + ":" + std::to_string(line_no) +
                              ": temperature must be positive kelvin, got " + std::to_string(t));
        }
        series.wind_ft_s[rows] = w;
        series.ambient_temp_k[rows] = t;
        ++rows;
    }
    if (rows != k_months) {
        throw ConfigError(path.string() + ": expected 12 rows, found " + std::to_string(rows));
    }
    return series;
}

}  // namespace tlsim::loading
