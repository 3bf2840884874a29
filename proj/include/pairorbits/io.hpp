#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "pairorbits/oracle.hpp"
#include "pairorbits/orbitcount.hpp"

namespace pairorbits {

using Json = nlohmann::json;

// {"coeffs": [a0, a1, ...]}, ascending powers. Entries fitting in int64 are
// JSON numbers; anything else is an "n" or "num/den" string.
Json to_json(const QPolynomial& p);
QPolynomial polynomial_from_json(const Json& j);

// {"partition": "5,4^2,2,1"}
Json to_json(const Partition& lambda);
Partition partition_from_json(const Json& j);

// {"max_points": "1:4,0:1"}
Json to_json(const OrderIdeal& ideal);
OrderIdeal ideal_from_json(const Json& j);

Json to_json(const oracle::VerifyReport& report);

std::string csv_escape(const std::string& field);

// One "partition & polynomial \\" row per line.
std::string latex_table(const std::vector<std::pair<Partition, QPolynomial>>& rows);

// n_lambda values persisted as JSON keyed by canonical partition string.
class ResultStore {
public:
    explicit ResultStore(std::filesystem::path path);

    NLambdaTable& table() { return table_; }
    const std::filesystem::path& path() const { return path_; }
    // Entries that came from disk.
    std::size_t loaded() const { return loaded_; }
    void save() const;

private:
    std::filesystem::path path_;
    NLambdaTable table_;
    std::size_t loaded_ = 0;
};

}  // namespace pairorbits
