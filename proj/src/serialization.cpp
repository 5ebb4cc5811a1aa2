#include "fracseries/serialization.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

namespace fracseries::io {

using nlohmann::json;

nlohmann::json series_to_json(const series::AlphaSeries& s) {
    json coeffs = json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back({c.real(), c.imag()});
    return json{{"schema", kSchemaTag},
                {"alpha", s.alpha().value()},
                {"offset", s.offset()},
                {"coeffs", std::move(coeffs)}};
}

series::AlphaSeries series_from_json(const json& j) {
    const Alpha alpha(j.at("alpha").get<double>());
    const double offset = j.at("offset").get<double>();
    std::vector<series::Complex> coeffs;
    for (const auto& c : j.at("coeffs")) {
        if (!c.is_array() || c.size() != 2)
            throw PreconditionError("series_from_json: coeffs entries must be [re, im]");
        coeffs.emplace_back(c[0].get<double>(), c[1].get<double>());
    }
    return series::AlphaSeries(alpha, offset, std::move(coeffs));
}

void write_series_csv(std::ostream& os, const series::AlphaSeries& s) {
    os << "n,re,im\n";
    for (int n = 0; n <= s.truncation(); ++n) {
        const auto c = s.coeff(n);
        os << n << ',' << format_double(c.real()) << ',' << format_double(c.imag()) << '\n';
    }
}

regular::MatrixCoefficientSeries system_from_json(const json& j, cauchy::Kind* kind) {
    if (kind) {
        *kind = cauchy::Kind::RL;
        if (j.contains("kind")) {
            const std::string k = j.at("kind").get<std::string>();
            if (k == "caputo")
                *kind = cauchy::Kind::Caputo;
            else if (k != "rl")
                throw PreconditionError("system_from_json: kind must be \"rl\" or \"caputo\"");
        }
    }
    const Alpha alpha(j.at("alpha").get<double>());
    std::vector<regular::Matrix> mats;
    for (const auto& jm : j.at("A_mats")) {
        const int n = static_cast<int>(jm.size());
        regular::Matrix m(n, n);
        for (int r = 0; r < n; ++r) {
            const auto& row = jm.at(static_cast<size_t>(r));
            if (static_cast<int>(row.size()) != n)
                throw PreconditionError("system_from_json: matrices must be square");
            for (int c = 0; c < n; ++c) {
                const auto& e = row.at(static_cast<size_t>(c));
                if (!e.is_array() || e.size() != 2)
                    throw PreconditionError("system_from_json: entries must be [re, im]");
                m(r, c) = series::Complex(e[0].get<double>(), e[1].get<double>());
            }
        }
        mats.push_back(std::move(m));
    }
    return regular::MatrixCoefficientSeries(alpha, std::move(mats));
}

nlohmann::json spectrum_to_json(const regular::SpectrumReport& rep) {
    json viol = json::array();
    for (const auto& v : rep.violations)
        viol.push_back({{"i", v.i}, {"j", v.j}, {"k", v.k}, {"mismatch", v.mismatch}});
    json warn = json::array();
    for (const auto& v : rep.warnings)
        warn.push_back({{"i", v.i}, {"j", v.j}, {"k", v.k}, {"mismatch", v.mismatch}});
    return json{{"eigenvalues", rep.eigenvalues}, {"gammas", rep.gammas},
                {"good", rep.good()},             {"violations", std::move(viol)},
                {"warnings", std::move(warn)},    {"tol", rep.tol},
                {"warn_tol", rep.warn_tol}};
}

nlohmann::json frobenius_to_json(const regular::FrobeniusSolution& sol, double residual) {
    json sigmas = json::array();
    for (const auto& m : sol.sigma_mats) {
        json jm = json::array();
        for (int r = 0; r < m.rows(); ++r) {
            json row = json::array();
            for (int c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
            jm.push_back(std::move(row));
        }
        sigmas.push_back(std::move(jm));
    }
    return json{{"schema", kSchemaTag},
                {"alpha", sol.alpha.value()},
                {"exponents", sol.exponents},
                {"sigma_mats", std::move(sigmas)},
                {"radius_estimate", sol.radius_estimate},
                {"repeated_exponents", sol.repeated_exponents},
                {"substitution_residual", residual},
                {"spectrum", spectrum_to_json(sol.spectrum)}};
}

const char* verdict_name(irregular::DiophantineVerdict v) {
    switch (v) {
        case irregular::DiophantineVerdict::BadlyApproximable: return "badly-approximable";
        case irregular::DiophantineVerdict::Suspect: return "suspect";
        case irregular::DiophantineVerdict::WellApproximable: return "well-approximable";
        case irregular::DiophantineVerdict::Rational: return "rational";
    }
    return "unknown";
}

nlohmann::json diophantine_to_json(const irregular::DiophantineReport& rep) {
    json terms = json::array();
    for (const auto& t : rep.cf_terms) terms.push_back(t.get_str());
    json convs = json::array();
    for (const auto& c : rep.convergents)
        convs.push_back({{"p", c.p.get_str()},
                         {"q", c.q.get_str()},
                         {"exponent_estimate", c.exponent_estimate}});
    return json{{"cf_terms", std::move(terms)},
                {"convergents", std::move(convs)},
                {"exponent_estimate", rep.exponent_estimate},
                {"verdict", verdict_name(rep.verdict)},
                {"usable_terms", rep.usable_terms},
                {"digits", rep.digits}};
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void atomic_write(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw PreconditionError("atomic_write: cannot open " + tmp);
        os << content;
        if (!os.good()) throw NumericError("atomic_write: short write to " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw NumericError("atomic_write: rename to " + path + " failed");
}

}  // namespace fracseries::io
