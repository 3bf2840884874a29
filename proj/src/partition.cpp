#include "pairorbits/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <sstream>

#include "pairorbits/errors.hpp"

namespace pairorbits {

Partition::Partition(std::vector<PartPair> pairs) : pairs_(std::move(pairs)) {
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (pairs_[i].part <= 0 || pairs_[i].mult <= 0) throw InputError("partition parts and multiplicities must be positive");
        if (i > 0 && pairs_[i - 1].part <= pairs_[i].part) throw InputError("partition parts must be strictly decreasing");
    }
}

Partition Partition::from_parts(const std::vector<long>& parts) {
    std::map<long, long, std::greater<>> counts;
    for (long p : parts) {
        if (p <= 0) throw InputError("partition parts must be positive");
        ++counts[p];
    }
    std::vector<PartPair> pairs;
    for (auto [p, m] : counts) pairs.push_back({p, m});
    return Partition(std::move(pairs));
}

long Partition::weight() const {
    long w = 0;
    for (auto [p, m] : pairs_) w += p * m;
    return w;
}

long Partition::multiplicity(long part) const {
    for (auto [p, m] : pairs_) {
        if (p == part) return m;
    }
    return 0;
}

std::vector<long> Partition::distinct_parts() const {
    std::vector<long> out;
    for (auto [p, m] : pairs_) out.push_back(p);
    return out;
}

std::vector<long> Partition::parts() const {
    std::vector<long> out;
    for (auto [p, m] : pairs_) out.insert(out.end(), static_cast<std::size_t>(m), p);
    return out;
}

Partition cap_multiplicities(const Partition& lambda, long cap) {
    std::vector<PartPair> pairs = lambda.pairs();
    for (auto& pp : pairs) pp.mult = std::min(pp.mult, cap);
    return Partition(std::move(pairs));
}

Partition remove_parts(const Partition& lambda, const std::vector<long>& parts) {
    std::vector<PartPair> pairs = lambda.pairs();
    for (long k : parts) {
        auto it = std::find_if(pairs.begin(), pairs.end(), [k](const PartPair& pp) { return pp.part == k; });
        if (it == pairs.end() || it->mult == 0) throw InputError("part " + std::to_string(k) + " not present");
        --it->mult;
    }
    std::erase_if(pairs, [](const PartPair& pp) { return pp.mult == 0; });
    return Partition(std::move(pairs));
}

std::vector<Partition> partitions_of(long n) {
    std::vector<Partition> out;
    std::vector<long> current;
    std::function<void(long, long)> rec = [&](long remaining, long max_part) {
        if (remaining == 0) {
            out.push_back(Partition::from_parts(current));
            return;
        }
        for (long p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    if (n < 0) return out;
    rec(n, n);
    return out;
}

std::string to_string(const Partition& lambda) {
    std::ostringstream os;
    bool first = true;
    for (auto [p, m] : lambda.pairs()) {
        if (!first) os << ",";
        first = false;
        os << p;
        if (m > 1) os << "^" << m;
    }
    return os.str();
}

std::string to_display_string(const Partition& lambda) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (long p : lambda.parts()) {
        if (!first) os << ", ";
        first = false;
        os << p;
    }
    os << ")";
    return os.str();
}

namespace {

long parse_positive(std::string_view tok, std::string_view whole) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || v <= 0) {
        throw ParseError("bad partition \"" + std::string(whole) + "\": expected a positive integer, got \"" +
                         std::string(tok) + "\"");
    }
    return v;
}

}  // namespace

Partition parse_partition(std::string_view text) {
    std::string cleaned;
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '(' || c == ')') continue;
        cleaned.push_back(c);
    }
    std::vector<long> parts;
    if (cleaned.empty()) return {};
    std::string_view rest = cleaned;
    for (;;) {
        auto comma = rest.find(',');
        std::string_view tok = rest.substr(0, comma);
        auto caret = tok.find('^');
        long part = parse_positive(tok.substr(0, caret), text);
        long mult = caret == std::string_view::npos ? 1 : parse_positive(tok.substr(caret + 1), text);
        parts.insert(parts.end(), static_cast<std::size_t>(mult), part);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return Partition::from_parts(parts);
}

}  // namespace pairorbits
