#include "ringline/codes.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "ringline/errors.hpp"
#include "ringline/hash.hpp"

namespace ringline {

CodeLabelling canonical_labelling(const Design& design) {
    CodeLabelling psi;
    psi.class_order.resize(design.classes.size());
    for (size_t c = 0; c < design.classes.size(); ++c) psi.class_order[c] = static_cast<int>(c);
    psi.point_symbols.resize(design.classes.size());
    for (size_t c = 0; c < design.classes.size(); ++c) {
        psi.point_symbols[c].resize(design.classes[c].size());
        for (size_t j = 0; j < design.classes[c].size(); ++j)
            psi.point_symbols[c][j] = static_cast<int>(j) + 1;
    }
    return psi;
}

ConstantWeightCode code_from_design(const Design& design) {
    return code_from_design(design, canonical_labelling(design));
}

ConstantWeightCode code_from_design(const Design& design, const CodeLabelling& psi) {
    const size_t n = design.classes.size();
    if (n == 0) throw std::invalid_argument("design has no classes");
    const size_t s = design.classes[0].size();
    for (const auto& cls : design.classes)
        if (cls.size() != s) throw std::invalid_argument("code needs equal class sizes");
    if (design.blocks.empty()) throw std::invalid_argument("design has no blocks");
    const size_t k = design.blocks[0].size();
    for (const auto& blk : design.blocks)
        if (blk.size() != k) throw std::invalid_argument("code needs equal block sizes");

    if (psi.class_order.size() != n || psi.point_symbols.size() != n)
        throw std::invalid_argument("labelling has wrong shape");
    {
        std::vector<char> seen(n, 0);
        for (int c : psi.class_order) {
            if (c < 0 || c >= static_cast<int>(n) || seen[c])
                throw std::invalid_argument("labelling class order is not a permutation");
            seen[c] = 1;
        }
    }
    for (const auto& syms : psi.point_symbols) {
        if (syms.size() != s) throw std::invalid_argument("labelling symbol row has wrong size");
        std::vector<char> seen(s + 1, 0);
        for (int sym : syms) {
            if (sym < 1 || sym > static_cast<int>(s) || seen[sym])
                throw std::invalid_argument("labelling symbols are not a permutation of 1..s");
            seen[sym] = 1;
        }
    }

    // point -> (class, position within class)
    std::vector<int> cls_of(design.v, -1), pos_of(design.v, -1);
    for (size_t c = 0; c < n; ++c) {
        for (size_t j = 0; j < design.classes[c].size(); ++j) {
            int p = design.classes[c][j];
            if (p < 0 || p >= design.v || cls_of[p] >= 0)
                throw std::invalid_argument("classes do not partition the points");
            cls_of[p] = static_cast<int>(c);
            pos_of[p] = static_cast<int>(j);
        }
    }
    std::vector<int> coord_of_class(n);
    for (size_t c = 0; c < n; ++c) coord_of_class[psi.class_order[c]] = static_cast<int>(c);

    ConstantWeightCode code;
    code.n = static_cast<int>(n);
    code.m = static_cast<int>(s) + 1;
    code.k = static_cast<long long>(k);
    for (const auto& blk : design.blocks) {
        std::vector<int> word(n, 0);
        for (int p : blk) {
            if (p < 0 || p >= design.v || cls_of[p] < 0)
                throw std::invalid_argument("block point outside the classes");
            int coord = coord_of_class[cls_of[p]];
            if (word[coord] != 0)
                throw std::invalid_argument("block meets a class twice; no code word exists");
            word[coord] = psi.point_symbols[cls_of[p]][pos_of[p]];
        }
        code.words.push_back(std::move(word));
    }
    std::sort(code.words.begin(), code.words.end());
    for (size_t i = 1; i < code.words.size(); ++i)
        if (code.words[i] == code.words[i - 1])
            throw std::logic_error("distinct blocks produced equal words");
    return code;
}

int hamming_weight(const std::vector<int>& word) {
    int w = 0;
    for (int x : word) w += (x != 0);
    return w;
}

int hamming_distance(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("words have different lengths");
    int d = 0;
    for (size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
    return d;
}

bool verify_constant_weight(const ConstantWeightCode& code) {
    for (const auto& w : code.words)
        if (static_cast<int>(w.size()) != code.n || hamming_weight(w) != code.k) return false;
    return true;
}

ConstantWeightCode apply_code_isomorphism(const ConstantWeightCode& code,
                                          const CodeIsomorphism& iso) {
    if (static_cast<int>(iso.coordinate_perm.size()) != code.n ||
        static_cast<int>(iso.symbol_perms.size()) != code.n)
        throw std::invalid_argument("isomorphism has wrong shape");
    ConstantWeightCode out;
    out.n = code.n;
    out.m = code.m;
    out.k = code.k;
    for (const auto& w : code.words) {
        std::vector<int> nw(code.n);
        for (int c = 0; c < code.n; ++c) {
            int src = iso.coordinate_perm[c];
            nw[c] = iso.symbol_perms[c].at(static_cast<size_t>(w.at(src)));
        }
        out.words.push_back(std::move(nw));
    }
    std::sort(out.words.begin(), out.words.end());
    return out;
}

std::optional<CodeIsomorphism> find_code_isomorphism(const ConstantWeightCode& a,
                                                     const ConstantWeightCode& b) {
    if (a.n > 6 || b.n > 6) throw std::invalid_argument("isomorphism search is limited to n <= 6");
    if (a.n != b.n || a.m != b.m || a.words.size() != b.words.size()) return std::nullopt;
    const int n = a.n, m = a.m;

    // Multiset of c-symbol prefixes of b's words, for pruning at depth c.
    std::vector<std::unordered_map<std::vector<int>, int, VecHash>> b_prefixes(n + 1);
    for (const auto& w : b.words)
        for (int c = 0; c <= n; ++c) ++b_prefixes[c][std::vector<int>(w.begin(), w.begin() + c)];

    std::vector<int> symbols(m);
    for (int i = 0; i < m; ++i) symbols[i] = i;
    std::vector<std::vector<int>> symbol_perms_pool;
    std::vector<int> perm = symbols;
    do symbol_perms_pool.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    CodeIsomorphism iso;
    iso.coordinate_perm.assign(n, 0);
    iso.symbol_perms.assign(n, {});
    // partial transformed words, built one target coordinate at a time
    std::vector<std::vector<int>> partial(a.words.size());

    std::function<bool(int, unsigned)> extend = [&](int c, unsigned used_sources) -> bool {
        if (c == n) {
            std::vector<std::vector<int>> image = partial;
            std::sort(image.begin(), image.end());
            return image == b.words;
        }
        for (int src = 0; src < n; ++src) {
            if (used_sources & (1u << src)) continue;
            for (const auto& sigma : symbol_perms_pool) {
                for (size_t w = 0; w < a.words.size(); ++w)
                    partial[w].push_back(sigma[static_cast<size_t>(a.words[w][src])]);
                std::unordered_map<std::vector<int>, int, VecHash> counts;
                for (const auto& pw : partial) ++counts[pw];
                bool feasible = counts.size() <= b_prefixes[c + 1].size();
                if (feasible) {
                    for (const auto& [key, cnt] : counts) {
                        auto it = b_prefixes[c + 1].find(key);
                        if (it == b_prefixes[c + 1].end() || it->second != cnt) {
                            feasible = false;
                            break;
                        }
                    }
                }
                if (feasible) {
                    iso.coordinate_perm[c] = src;
                    iso.symbol_perms[c] = sigma;
                    if (extend(c + 1, used_sources | (1u << src))) return true;
                }
                for (auto& pw : partial) pw.pop_back();
            }
        }
        return false;
    };

    if (!extend(0, 0)) return std::nullopt;
    return iso;
}

namespace {

std::vector<std::string> code_data_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        size_t end = line.find_last_not_of(" \t\r");
        if (end == std::string::npos) continue;
        lines.push_back(line.substr(0, end + 1));
    }
    return lines;
}

}  // namespace

ConstantWeightCode read_code(std::istream& in) {
    auto lines = code_data_lines(in);
    if (lines.empty()) throw ParseError("empty code file", 1, 1);
    std::istringstream hs(lines[0]);
    std::string tag, nf, mf, kf, rest;
    hs >> tag >> nf >> mf >> kf;
    if (tag != "cwc" || nf.rfind("n=", 0) != 0 || mf.rfind("m=", 0) != 0 ||
        kf.rfind("k=", 0) != 0 || (hs >> rest))
        throw ParseError("expected header 'cwc n=<n> m=<m> k=<k>'", 1, 1);
    ConstantWeightCode code;
    try {
        code.n = std::stoi(nf.substr(2));
        code.m = std::stoi(mf.substr(2));
        code.k = std::stoll(kf.substr(2));
    } catch (...) {
        throw ParseError("bad numbers in code header", 1, 1);
    }
    if (code.n < 1 || code.n > 100000 || code.m < 1 || code.k < 0 || code.k > code.n)
        throw ParseError("code header values out of range", 1, 1);

    std::unordered_set<std::vector<int>, VecHash> seen;
    for (size_t row = 1; row < lines.size(); ++row) {
        std::istringstream ls(lines[row]);
        std::vector<int> word;
        long long sym;
        while (ls >> sym) {
            if (sym < 0 || sym >= code.m)
                throw ParseError("symbol out of range", static_cast<int>(row) + 1, 1);
            word.push_back(static_cast<int>(sym));
        }
        if (!ls.eof())
            throw ParseError("expected whitespace-separated symbols", static_cast<int>(row) + 1, 1);
        if (static_cast<int>(word.size()) != code.n)
            throw ParseError("word has wrong length", static_cast<int>(row) + 1, 1);
        if (!seen.insert(word).second)
            throw ParseError("duplicate word", static_cast<int>(row) + 1, 1);
        code.words.push_back(std::move(word));
    }
    if (code.words.empty()) throw ParseError("code has no words", 2, 1);
    std::sort(code.words.begin(), code.words.end());
    return code;
}

ConstantWeightCode read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open code file '" + path + "'", 1, 1);
    return read_code(in);
}

void write_code(std::ostream& out, const ConstantWeightCode& code) {
    out << "cwc n=" << code.n << " m=" << code.m << " k=" << code.k << "\n";
    for (const auto& w : code.words) {
        for (size_t i = 0; i < w.size(); ++i) out << (i ? " " : "") << w[i];
        out << "\n";
    }
}

void write_code_file(const std::string& path, const ConstantWeightCode& code) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write code file '" + path + "'");
    write_code(out, code);
}

}  // namespace ringline
