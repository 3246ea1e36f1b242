#include "rwgraph/spoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace rwg {

Rat SPolynomial::coeff(const Partition& p) const {
    auto it = terms.find(p);
    return it == terms.end() ? Rat(0) : it->second;
}

void SPolynomial::add(const Partition& p, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms.emplace(p, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

SPolynomial& SPolynomial::operator+=(const SPolynomial& o) {
    for (const auto& [p, c] : o.terms) add(p, c);
    return *this;
}

SPolynomial& SPolynomial::operator-=(const SPolynomial& o) {
    for (const auto& [p, c] : o.terms) add(p, -c);
    return *this;
}

SPolynomial& SPolynomial::operator*=(const Rat& c) {
    if (c == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [p, v] : terms) v *= c;
    return *this;
}

SPolynomial operator*(const SPolynomial& a, const SPolynomial& b) {
    SPolynomial r(a.weight + b.weight);
    for (const auto& [pa, ca] : a.terms)
        for (const auto& [pb, cb] : b.terms) {
            Partition merged = pa;
            merged.insert(merged.end(), pb.begin(), pb.end());
            std::sort(merged.begin(), merged.end(), std::greater<int>());
            r.add(merged, ca * cb);
        }
    return r;
}

std::string monomial_name(const std::string& prefix, const Partition& p) {
    Partition asc = p;
    std::sort(asc.begin(), asc.end());
    std::string out;
    for (size_t i = 0; i < asc.size();) {
        size_t j = i;
        while (j < asc.size() && asc[j] == asc[i]) ++j;
        if (!out.empty()) out += '*';
        out += prefix + std::to_string(asc[i]);
        if (j - i > 1) out += '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::string polywheel_name(const Partition& doubled_parts) {
    return '<' + monomial_name("w", doubled_parts) + '>';
}

std::string spoly_to_string(const SPolynomial& p, const std::string& prefix) {
    if (p.terms.empty()) return "0";
    std::string out;
    for (const auto& [part, c] : p.terms) {
        Rat a = c;
        if (out.empty()) {
            if (a < 0) {
                out += '-';
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (a != 1) out += rat_to_string(a) + '*';
        out += monomial_name(prefix, part);
    }
    return out;
}

SPolynomial mult_sequence_term(const TruncSeries& f_log, int k) {
    if (f_log[0] != 0) throw std::invalid_argument("log-series must have zero constant term");
    for (int i = 1; i <= f_log.order(); i += 2)
        if (f_log[i] != 0) throw std::invalid_argument("log-series must be even");
    if (f_log.order() < 2 * k) throw std::invalid_argument("log-series truncated below weight");
    SPolynomial out(2 * k);
    for (const Partition& lambda : even_partitions_of(2 * k)) {
        Rat c = 1;
        for (int part : lambda) c *= f_log[part];
        for (size_t i = 0; i < lambda.size();) {
            size_t j = i;
            while (j < lambda.size() && lambda[j] == lambda[i]) ++j;
            c /= factorial(static_cast<long>(j - i));
            i = j;
        }
        out.add(lambda, c);
    }
    return out;
}

namespace {

SPolynomial scaled_sequence_term(const TruncSeries& f_log, int k) {
    SPolynomial p = mult_sequence_term(f_log, k);
    p *= rat_pow(Rat(48), k) * factorial(k);
    return p;
}

}  // namespace

std::map<Partition, Rat> theta_power_in_polywheels(int k) {
    SPolynomial p = scaled_sequence_term(td_neg_half_log(2 * k + 2), k);
    std::map<Partition, Rat> out;
    for (const auto& [lambda, c] : p.terms) {
        Partition halved = lambda;
        for (int& part : halved) part /= 2;
        out[halved] = c;
    }
    return out;
}

SPolynomial b_theta_power_polynomial(int k) {
    return scaled_sequence_term(td_half_log(2 * k + 2), k);
}

}  // namespace rwg
