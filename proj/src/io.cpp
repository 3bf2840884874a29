#include "pairorbits/io.hpp"

#include <fstream>
#include <iostream>
#include <limits>

#include "pairorbits/errors.hpp"

namespace pairorbits {

namespace {

Rational parse_rational(const std::string& text) {
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0) throw ParseError("bad rational \"" + text + "\"");
    if (r.get_den() == 0) throw ParseError("zero denominator in \"" + text + "\"");
    r.canonicalize();
    return r;
}

}  // namespace

Json to_json(const QPolynomial& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) {
        const Integer& num = c.get_num();
        if (c.get_den() == 1 && num.fits_slong_p()) {
            coeffs.push_back(num.get_si());
        } else {
            coeffs.push_back(c.get_str());
        }
    }
    return Json{{"coeffs", coeffs}};
}

QPolynomial polynomial_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
        throw ParseError("polynomial JSON needs a \"coeffs\" array");
    }
    std::vector<Rational> coeffs;
    for (const auto& c : j["coeffs"]) {
        if (c.is_number_integer()) {
            coeffs.emplace_back(Integer(std::to_string(c.get<long long>())));
        } else if (c.is_string()) {
            coeffs.push_back(parse_rational(c.get<std::string>()));
        } else {
            throw ParseError("coefficient " + c.dump() + " is neither an integer nor a string");
        }
    }
    return QPolynomial(std::move(coeffs));
}

Json to_json(const Partition& lambda) { return Json{{"partition", to_string(lambda)}}; }

Partition partition_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("partition") || !j["partition"].is_string()) {
        throw ParseError("partition JSON needs a \"partition\" string");
    }
    return parse_partition(j["partition"].get<std::string>());
}

Json to_json(const OrderIdeal& ideal) { return Json{{"max_points", to_string(ideal)}}; }

OrderIdeal ideal_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("max_points") || !j["max_points"].is_string()) {
        throw ParseError("ideal JSON needs a \"max_points\" string");
    }
    return parse_ideal(j["max_points"].get<std::string>());
}

Json to_json(const oracle::VerifyReport& report) {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    }
    return Json{{"partition", to_string(report.lambda)},
                {"p", report.p},
                {"mode", report.mode == oracle::OrbitMode::quick ? "quick" : "full-endos"},
                {"checks", checks}};
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string latex_table(const std::vector<std::pair<Partition, QPolynomial>>& rows) {
    std::string out = "\\begin{tabular}{ll}\n$\\lambda$ & $n_\\lambda(q)$ \\\\\n\\hline\n";
    for (const auto& [lambda, poly] : rows) {
        std::string parts;
        for (long part : lambda.parts()) parts += (parts.empty() ? "" : ", ") + std::to_string(part);
        out += "$(" + parts + ")$ & $" + to_latex(poly) + "$ \\\\\n";
    }
    return out + "\\end{tabular}\n";
}

ResultStore::ResultStore(std::filesystem::path path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;
    std::vector<std::pair<Partition, QPolynomial>> entries;
    try {
        const Json doc = Json::parse(in);
        if (!doc.is_object()) throw ParseError("top level is not an object");
        for (const auto& [key, value] : doc.items()) {
            Partition lambda = parse_partition(key);
            QPolynomial poly = polynomial_from_json(value);
            if (poly.degree() != (lambda.empty() ? 0 : lambda.largest()) || !poly.is_monic()) {
                throw ParseError("entry " + key + " is not monic of degree lambda_1");
            }
            entries.emplace_back(std::move(lambda), std::move(poly));
        }
    } catch (const std::exception& e) {
        std::cerr << "warning: ignoring cache " << path_.string() << ": " << e.what() << "\n";
        return;
    }
    for (auto& [lambda, poly] : entries) table_.insert(cap_multiplicities(lambda, 2), std::move(poly));
    loaded_ = entries.size();
}

void ResultStore::save() const {
    Json doc = Json::object();
    for (const auto& [lambda, poly] : table_.snapshot()) doc[to_string(lambda)] = to_json(poly);
    const auto tmp = path_.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw InputError("cannot write cache " + tmp);
        out << doc.dump(1) << "\n";
    }
    std::filesystem::rename(tmp, path_);
}

}  // namespace pairorbits
