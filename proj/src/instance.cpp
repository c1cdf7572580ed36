#include "ttp/instance.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

namespace ttp {

std::string format_weight(Weight value, int scale_pow) {
    if (scale_pow == 0) return std::to_string(value);
    Weight scale = 1;
    for (int i = 0; i < scale_pow; ++i) scale *= 10;
    Weight ip = value / scale, fp = value % scale;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%lld.%0*lld", ip, scale_pow, fp);
    return buf;
}

namespace {

struct RawNumber {
    Weight digits = 0;  // all digits, fraction included
    int frac = 0;       // number of fractional digits
};

// Accepts plain decimal numbers: digits with an optional fractional part.
bool parse_number(const std::string& tok, RawNumber& out) {
    size_t i = 0;
    bool any = false, dot = false;
    out = RawNumber{};
    for (; i < tok.size(); ++i) {
        char c = tok[i];
        if (c == '.') {
            if (dot) return false;
            dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            any = true;
            if (out.digits > (1'000'000'000'000'000'000LL - 9) / 10) return false;
            out.digits = out.digits * 10 + (c - '0');
            if (dot) ++out.frac;
        } else {
            return false;
        }
    }
    if (!any || out.frac > 9) return false;
    return true;
}

}  // namespace

Instance parse_instance(const std::string& text) {
    std::vector<std::string> lines;
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) lines.push_back(line);
    }
    size_t li = 0;
    auto next_line = [&]() -> const std::string* {
        while (li < lines.size()) {
            const std::string& l = lines[li];
            if (l.find_first_not_of(" \t\r") != std::string::npos) return &lines[li++];
            ++li;
        }
        return nullptr;
    };

    const std::string* header = next_line();
    if (!header) throw ParseError("empty instance file");
    int n = 0;
    {
        std::istringstream hs(*header);
        if (!(hs >> n)) throw ParseError("invalid team count line");
        std::string rest;
        if (hs >> rest) throw ParseError("trailing tokens after team count");
    }
    if (n < 4) throw ParseError("team count must be at least 4, got " + std::to_string(n));
    if (n % 2 != 0) throw ParseError("team count must be even, got " + std::to_string(n));

    std::vector<std::vector<RawNumber>> raw(n);
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) {
        const std::string* lp = next_line();
        if (!lp) throw ParseError("missing matrix row " + std::to_string(i + 1));
        std::string row = *lp;
        std::string name;
        size_t hash = row.find('#');
        if (hash != std::string::npos) {
            name = row.substr(hash + 1);
            size_t b = name.find_first_not_of(" \t\r");
            size_t e = name.find_last_not_of(" \t\r");
            name = b == std::string::npos ? "" : name.substr(b, e - b + 1);
            row = row.substr(0, hash);
        }
        std::istringstream rs(row);
        std::string tok;
        while (rs >> tok) {
            RawNumber num;
            if (!parse_number(tok, num))
                throw ParseError("malformed numeric token '" + tok + "' in row " + std::to_string(i + 1));
            raw[i].push_back(num);
        }
        if (static_cast<int>(raw[i].size()) != n)
            throw ParseError("row " + std::to_string(i + 1) + " has " + std::to_string(raw[i].size()) +
                             " entries, expected " + std::to_string(n));
        names[i] = name.empty() ? "T" + std::to_string(i + 1) : name;
    }
    if (next_line()) throw ParseError("unexpected extra rows after matrix");

    int scale_pow = 0;
    for (auto& r : raw)
        for (auto& num : r) scale_pow = std::max(scale_pow, num.frac);

    Instance inst;
    inst.n = n;
    inst.scale_pow = scale_pow;
    inst.names = std::move(names);
    inst.d.assign(n, std::vector<Weight>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Weight v = raw[i][j].digits;
            for (int k = raw[i][j].frac; k < scale_pow; ++k) v *= 10;
            inst.d[i][j] = v;
        }

    for (int i = 0; i < n; ++i)
        if (inst.d[i][i] != 0)
            throw ParseError("nonzero diagonal entry at row " + std::to_string(i + 1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (inst.d[i][j] != inst.d[j][i])
                throw ParseError("asymmetric distances between teams " + std::to_string(i + 1) + " and " +
                                 std::to_string(j + 1));

    inst.triangle_ok = triangle_holds(inst);
    return inst;
}

bool triangle_holds(const Instance& inst) {
    for (int i = 0; i < inst.n; ++i)
        for (int j = 0; j < inst.n; ++j)
            for (int k = 0; k < inst.n; ++k)
                if (inst.d[i][j] + inst.d[j][k] < inst.d[i][k]) return false;
    return true;
}

std::string render_instance(const Instance& inst) {
    std::ostringstream out;
    out << inst.n << "\n";
    for (int i = 0; i < inst.n; ++i) {
        for (int j = 0; j < inst.n; ++j) {
            if (j) out << ' ';
            out << format_weight(inst.d[i][j], inst.scale_pow);
        }
        out << " # " << inst.names[i] << "\n";
    }
    return out.str();
}

InstanceStats stats(const Instance& inst) {
    InstanceStats st;
    st.s.assign(inst.n, 0);
    for (int i = 0; i < inst.n; ++i)
        for (int j = 0; j < inst.n; ++j)
            if (i != j) st.s[i] += inst.d[i][j];
    st.delta = 0;
    for (Weight v : st.s) st.delta += v;
    return st;
}

}  // namespace ttp
