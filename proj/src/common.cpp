// common.cpp

#include "berge/common.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

namespace berge {

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = g ? num / g : 0;
    den_ = g ? den / g : 1;
}

std::string Rational::str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string ToughnessValue::str() const {
    return infinite ? std::string("inf") : value.str();
}

std::string format_set(const VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

namespace {

int parse_limit(const std::string& value) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(value, &used);
    } catch (const std::exception&) {
        throw FormatError("bad budget value '" + value + "'");
    }
    if (used != value.size() || v < 0) throw FormatError("bad budget value '" + value + "'");
    return v;
}

}  // namespace

Budget Budget::parse(const std::string& text) {
    Budget b;
    if (text.find('=') == std::string::npos) {
        const int v = parse_limit(text);
        b.toughness_vertices = b.y_toughness_vertices = b.criterion_vertices = v;
        b.structure_subset = v;
        return b;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw FormatError("bad budget entry '" + item + "'");
        const std::string key = item.substr(0, eq);
        const int v = parse_limit(item.substr(eq + 1));
        if (key == "toughness") b.toughness_vertices = v;
        else if (key == "y-toughness") b.y_toughness_vertices = v;
        else if (key == "criterion") b.criterion_vertices = v;
        else if (key == "structure") b.structure_subset = v;
        else throw FormatError("unknown budget key '" + key + "'");
    }
    return b;
}

Budget Budget::from_environment() {
    const char* env = std::getenv("BF_BUDGET");
    if (!env || !*env) return {};
    return parse(env);
}

}  // namespace berge
