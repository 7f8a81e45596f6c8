#include "wiener/degree_sequence.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>

namespace wiener {

namespace {

int parse_positive_int(const std::string& tok, const std::string& full) {
    if (tok.empty()) throw std::invalid_argument("empty token in degree sequence '" + full + "'");
    for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("bad token '" + tok + "' in degree sequence '" + full + "'");
    }
    long v = 0;
    try {
        v = std::stol(tok);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad token '" + tok + "' in degree sequence '" + full + "'");
    }
    if (v <= 0 || v > 1'000'000)
        throw std::invalid_argument("degree out of range in token '" + tok + "'");
    return static_cast<int>(v);
}

}  // namespace

Degrees parse_degree_sequence(const std::string& text) {
    Degrees out;
    std::string tok;
    auto flush = [&] {
        if (tok.empty()) return;
        auto caret = tok.find('^');
        if (caret == std::string::npos) {
            out.push_back(parse_positive_int(tok, text));
        } else {
            if (tok.find('^', caret + 1) != std::string::npos)
                throw std::invalid_argument("bad token '" + tok + "': repeated '^'");
            int base = parse_positive_int(tok.substr(0, caret), text);
            int rep = parse_positive_int(tok.substr(caret + 1), text);
            if (rep > 1'000'000) throw std::invalid_argument("repeat count too large in '" + tok + "'");
            out.insert(out.end(), rep, base);
        }
        tok.clear();
    };
    for (char c : text) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            flush();
        } else {
            tok.push_back(c);
        }
    }
    flush();
    if (out.empty()) throw std::invalid_argument("empty degree sequence");
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::string render_degree_sequence(const Degrees& degs) {
    std::string out;
    std::size_t i = 0;
    while (i < degs.size()) {
        std::size_t j = i;
        while (j < degs.size() && degs[j] == degs[i]) ++j;
        if (!out.empty()) out += ',';
        out += std::to_string(degs[i]);
        if (j - i > 1) out += '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

Degrees fill_leaves_auto(Degrees degs) {
    std::sort(degs.begin(), degs.end(), std::greater<>());
    long long need = sum_of(degs) - 2LL * static_cast<long long>(degs.size());
    if (need < 0)
        throw std::invalid_argument("cannot auto-fill leaves: degree sum already below 2n");
    degs.insert(degs.end(), static_cast<std::size_t>(need), 1);
    return degs;
}

ValidationReport validate_unicyclic(const Degrees& degs, int girth) {
    ValidationReport r;
    auto fail = [&](std::string msg) {
        r.ok = false;
        r.failures.push_back(std::move(msg));
    };
    if (girth < 3) fail("girth must be at least 3, got " + std::to_string(girth));
    long long n = static_cast<long long>(degs.size());
    long long s = sum_of(degs);
    if (s != 2 * n)
        fail("degree sum " + std::to_string(s) + " differs from 2n = " + std::to_string(2 * n));
    if (n < girth)
        fail("only " + std::to_string(n) + " vertices for girth " + std::to_string(girth));
    int internals = internal_count(degs);
    if (internals < girth)
        fail("only " + std::to_string(internals) + " entries >= 2 but the cycle needs " +
             std::to_string(girth));
    return r;
}

bool majorizes(const Degrees& a, const Degrees& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("majorizes needs equal lengths, got " +
                                    std::to_string(a.size()) + " and " + std::to_string(b.size()));
    Degrees sa = a, sb = b;
    std::sort(sa.begin(), sa.end(), std::greater<>());
    std::sort(sb.begin(), sb.end(), std::greater<>());
    long long pa = 0, pb = 0;
    for (std::size_t k = 0; k < sa.size(); ++k) {
        pa += sa[k];
        pb += sb[k];
        if (pa > pb) return false;
    }
    return true;
}

long long sum_of(const Degrees& degs) {
    return std::accumulate(degs.begin(), degs.end(), 0LL);
}

int internal_count(const Degrees& degs) {
    return static_cast<int>(std::count_if(degs.begin(), degs.end(), [](int d) { return d >= 2; }));
}

}  // namespace wiener
