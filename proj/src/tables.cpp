#include "brouwer/tables.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace brouwer {

namespace {

#include "tables_text.inc"

const TablePoly kZero{};

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

double parse_rational(const std::string& tok) {
    const auto slash = tok.find('/');
    if (slash == std::string::npos) return std::stod(tok);
    const double n = std::stod(tok.substr(0, slash));
    const double d = std::stod(tok.substr(slash + 1));
    return n / d;
}

}  // namespace

bool TablePoly::zero() const {
    for (int i = 0; i < num_len; ++i)
        if (num[i] != 0.0) return false;
    return true;
}

namespace {
void horner2(const double* c, int n, double x, double& v, double& d1, double& d2) {
    v = d1 = d2 = 0.0;
    for (int i = n - 1; i >= 0; --i) {
        d2 = d2 * x + d1;
        d1 = d1 * x + v;
        v = v * x + c[i];
    }
    d2 *= 2.0;
}
}  // namespace

void TablePoly::eval_num2(double x, double& v, double& d1, double& d2) const {
    horner2(num.data(), num_len, x, v, d1, d2);
}

void TablePoly::eval_den2(double x, double& v, double& d1, double& d2) const {
    horner2(den.data(), den_len, x, v, d1, d2);
}

TablePoly* CoefficientTables::lookup(int table, const std::string& name,
                                     int i, int j, int k) {
    switch (table) {
        case 1: return name == "B" ? b1_.at(i, j, k) : nullptr;
        case 2:
            if (name == "b") return b2b_.at(i, j, k);
            if (name == "q") return b2q_.at(i, j, 0);
            return nullptr;
        case 3: return name == "beta" ? b3_.at(i, j, k) : nullptr;
        case 4: return name == "beta" ? b4_.at(i, 0, j) : nullptr;  // (i,k) entry
        case 5: return name == "A" ? b5_.at(i, j, k) : nullptr;
        default: return nullptr;
    }
}

CoefficientTables CoefficientTables::parse(std::istream& in) {
    CoefficientTables t;
    std::string line;
    std::string body;
    bool checksum_seen = false;
    while (std::getline(in, line)) {
        if (line.rfind("# fnv1a64 ", 0) == 0) {
            const std::uint64_t want = std::stoull(line.substr(10), nullptr, 16);
            const std::uint64_t got = fnv1a64(body);
            if (want != got)
                throw std::runtime_error("coefficient tables: checksum mismatch");
            checksum_seen = true;
            continue;
        }
        if (line.empty() || line[0] == '#') continue;
        body += line;
        body += '\n';

        std::istringstream ls(line);
        int table = 0;
        std::string name;
        ls >> table >> name;
        std::vector<int> idx;
        std::vector<std::string> toks;
        std::string tok;
        bool after_colon = false;
        while (ls >> tok) {
            if (tok == ":") {
                after_colon = true;
                continue;
            }
            if (!after_colon) idx.push_back(std::stoi(tok));
            else toks.push_back(tok);
        }
        const std::size_t nidx = (table == 2 && name == "q") || table == 4 ? 2 : 3;
        if (idx.size() != nidx || toks.empty())
            throw std::runtime_error("coefficient tables: malformed line: " + line);
        const int i = idx[0], j = idx[1], k = nidx == 3 ? idx[2] : 0;

        TablePoly p{};
        bool in_den = false;
        for (const auto& s : toks) {
            if (s == "/") {
                in_den = true;
                continue;
            }
            const double v = parse_rational(s);
            if (!in_den) {
                if (p.num_len >= int(p.num.size()))
                    throw std::runtime_error("coefficient tables: polynomial too long");
                p.num[p.num_len++] = v;
            } else {
                if (p.den_len >= int(p.den.size()))
                    throw std::runtime_error("coefficient tables: polynomial too long");
                p.den[p.den_len++] = v;
            }
        }
        TablePoly* slot = t.lookup(table, name, i, j, k);
        if (!slot)
            throw std::runtime_error("coefficient tables: index out of range: " + line);
        *slot = p;
        ++t.n_entries_;
    }
    if (!checksum_seen)
        throw std::runtime_error("coefficient tables: missing checksum line");
    return t;
}

CoefficientTables CoefficientTables::parse_text(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

const CoefficientTables& CoefficientTables::builtin() {
    static const CoefficientTables t = parse_text(kBuiltinTableText);
    return t;
}

std::string CoefficientTables::builtin_text() { return kBuiltinTableText; }

const TablePoly& CoefficientTables::t1_B(int i, int j, int k) const {
    const TablePoly* p = b1_.at(i, j, k);
    return p ? *p : kZero;
}
const TablePoly& CoefficientTables::t2_b(int i, int j, int k) const {
    const TablePoly* p = b2b_.at(i, j, k);
    return p ? *p : kZero;
}
const TablePoly& CoefficientTables::t2_q(int i, int j) const {
    const TablePoly* p = b2q_.at(i, j, 0);
    return p ? *p : kZero;
}
const TablePoly& CoefficientTables::t3_beta(int i, int j, int k) const {
    const TablePoly* p = b3_.at(i, j, k);
    return p ? *p : kZero;
}
const TablePoly& CoefficientTables::t4_beta(int i, int k) const {
    const TablePoly* p = b4_.at(i, 0, k);
    return p ? *p : kZero;
}
const TablePoly& CoefficientTables::t5_A(int i, int j, int k) const {
    const TablePoly* p = b5_.at(i, j, k);
    return p ? *p : kZero;
}

bool CoefficientTables::perturb(int table, const std::string& name,
                                int i, int j, int k, double delta) {
    TablePoly* slot = lookup(table, name, i, j, k);
    if (!slot || slot->num_len == 0) return false;
    slot->num[0] += delta;
    return true;
}

}  // namespace brouwer
