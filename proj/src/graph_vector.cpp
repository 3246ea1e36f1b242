#include "rwgraph/graph_vector.hpp"

#include <sstream>
#include <stdexcept>

namespace rwg {

void GraphVector::add_class(const std::string& key, const Rat& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

void GraphVector::add_graph(const OrientedGraph& g, const Rat& coeff) {
    if (g.n != 2 * degree_)
        throw std::invalid_argument("graph degree mismatch in GraphVector");
    SignedCanonical sc = canonicalize(g);
    if (sc.sign == 0) return;
    add_class(sc.key, coeff * sc.sign);
}

GraphVector& GraphVector::operator+=(const GraphVector& o) {
    if (o.degree_ != degree_ && !o.empty())
        throw std::invalid_argument("degree mismatch in GraphVector sum");
    for (const auto& [k, c] : o.terms_) add_class(k, c);
    return *this;
}

GraphVector& GraphVector::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

Rat GraphVector::coeff(const std::string& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rat(0) : it->second;
}

std::string GraphVector::to_text() const {
    std::ostringstream os;
    for (const auto& [k, c] : terms_) os << rat_to_string(c) << " * " << k << "\n";
    return os.str();
}

GraphVector GraphVector::from_text(const std::string& text) {
    GraphVector v;
    std::istringstream is(text);
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto sep = line.find(" * ");
        if (sep == std::string::npos)
            throw std::invalid_argument("expected '<rational> * <graph key>': " + line);
        std::string coeff = line.substr(0, sep);
        coeff.erase(0, coeff.find_first_not_of(" \t"));
        Rat c = rat_from_string(coeff);
        OrientedGraph g = parse_graph(line.substr(sep + 3));
        if (first) {
            v = GraphVector(g.n / 2);
            first = false;
        }
        v.add_graph(g, c);
    }
    return v;
}

}  // namespace rwg
