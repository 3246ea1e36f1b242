#include "rwgraph/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rwg {

namespace {
void rec(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    Partition cur;
    rec(n, n, cur, out);
    // generated in descending lex order; presentation order is the reverse
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<Partition> even_partitions_of(int n) {
    std::vector<Partition> out;
    if (n % 2 != 0) return out;
    for (const auto& p : partitions_of(n / 2)) {
        Partition q = p;
        for (int& x : q) x *= 2;
        out.push_back(q);
    }
    return out;
}

Partition sorted_partition(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return parts;
}

std::string partition_to_string(const Partition& p) {
    std::ostringstream os;
    for (size_t i = p.size(); i-- > 0;) {
        os << p[i];
        if (i > 0) os << ",";
    }
    return os.str();
}

Partition partition_from_string(const std::string& s) {
    Partition p;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("bad partition: " + s);
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size() || v <= 0)
            throw std::invalid_argument("bad partition part: " + tok);
        p.push_back(v);
    }
    if (p.empty()) throw std::invalid_argument("empty partition");
    return sorted_partition(p);
}

int partition_weight(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0);
}

}  // namespace rwg
