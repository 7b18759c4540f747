#include "ringline/ringspec.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "ringline/errors.hpp"

namespace ringline {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    RingSpecPtr parse() {
        RingSpecPtr s = spec();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input after ring spec");
        return s;
    }

private:
    const std::string& text_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }

    [[noreturn]] void fail_at(const std::string& msg, size_t at) const {
        int line = 1, col = 1;
        for (size_t i = 0; i < at && i < text_.size(); ++i) {
            if (text_[i] == '\n') { ++line; col = 1; } else ++col;
        }
        throw ParseError(msg, line, col);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    std::string ident() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a ring constructor");
        return text_.substr(start, pos_ - start);
    }

    long long integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        const std::string digits = text_.substr(start, pos_ - start);
        if (digits.size() > 18) fail_at("integer too large", start);
        return std::stoll(digits);
    }

    void expect_key(const std::string& key) {
        skip_ws();
        size_t start = pos_;
        std::string id = ident();
        if (id != key) fail_at("expected '" + key + "='", start);
        expect('=');
    }

    RingSpecPtr spec() {
        skip_ws();
        size_t start = pos_;
        std::string head = ident();
        auto node = std::make_shared<RingSpec>();

        if (head == "Z") {
            expect('/');
            size_t mpos = pos_;
            node->kind = RingSpec::Kind::Zmod;
            node->n = integer();
            if (node->n < 2) fail_at("modulus must be at least 2", mpos);
            return node;
        }
        if (head == "GF") {
            expect('(');
            size_t qpos = pos_;
            node->kind = RingSpec::Kind::GaloisField;
            node->n = integer();
            long long p;
            int e;
            if (!prime_power(node->n, p, e)) fail_at("GF order must be a prime power", qpos);
            expect(')');
            return node;
        }
        if (head == "dual") {
            expect('(');
            RingSpecPtr base = spec();
            expect(',');
            expect_key("h");
            size_t hpos = pos_;
            long long h = integer();
            if (h < 2) fail_at("dual numbers need h >= 2 (h=1 is the base ring)", hpos);
            int frob = 0;
            size_t fpos = pos_;
            if (eat(',')) {
                expect_key("frob");
                fpos = pos_;
                long long f = integer();
                if (f < 0 || f > 1000000) fail_at("bad frob exponent", fpos);
                frob = static_cast<int>(f);
            }
            expect(')');
            if (frob == 0) {
                node->kind = RingSpec::Kind::DualNumbers;
                node->n = h;
                node->args.push_back(base);
                return node;
            }
            if (base->kind != RingSpec::Kind::GaloisField)
                fail_at("a twist needs a Galois field base", start);
            if (h != 2) fail_at("twisted dual numbers are only defined for h=2", hpos);
            long long p = 0;
            int d = 1;
            prime_power(base->n, p, d);
            if (frob % d == 0) {
                std::string hint = d == 1 ? "GF(" + std::to_string(base->n) +
                                                ") has no nontrivial automorphism"
                                          : "use a frob power not divisible by " + std::to_string(d);
                fail_at("frob=" + std::to_string(frob) + " is the identity on GF(" +
                            std::to_string(base->n) + "); " + hint,
                        fpos);
            }
            node->kind = RingSpec::Kind::TwistedDual;
            node->n = 2;
            node->frob = frob;
            node->args.push_back(base);
            return node;
        }
        if (head == "mat") {
            expect('(');
            size_t mpos = pos_;
            node->kind = RingSpec::Kind::MatrixRing;
            node->n = integer();
            if (node->n < 1) fail_at("matrix size must be at least 1", mpos);
            if (node->n > 64) fail_at("matrix size too large", mpos);
            expect(',');
            node->args.push_back(spec());
            expect(')');
            return node;
        }
        if (head == "ext") {
            expect('(');
            node->kind = RingSpec::Kind::ExteriorAlgebra;
            node->args.push_back(spec());
            expect(',');
            expect_key("n");
            size_t npos = pos_;
            node->n = integer();
            if (node->n < 1 || node->n > 62) fail_at("generator count out of range", npos);
            expect(')');
            return node;
        }
        if (head == "prod") {
            expect('(');
            node->kind = RingSpec::Kind::Product;
            node->args.push_back(spec());
            while (eat(',')) node->args.push_back(spec());
            expect(')');
            return node;
        }
        if (head == "table") {
            expect('(');
            size_t close = text_.find(')', pos_);
            if (close == std::string::npos) fail("unterminated table path");
            std::string path = text_.substr(pos_, close - pos_);
            size_t b = path.find_first_not_of(" \t");
            size_t e = path.find_last_not_of(" \t");
            if (b == std::string::npos) fail("empty table path");
            node->kind = RingSpec::Kind::TableRing;
            node->path = path.substr(b, e - b + 1);
            pos_ = close + 1;
            return node;
        }
        fail_at("unknown ring constructor '" + head + "'", start);
    }
};

}  // namespace

RingSpecPtr parse_ring_spec(const std::string& text) { return Parser(text).parse(); }

std::string print_ring_spec(const RingSpec& spec) {
    std::ostringstream out;
    switch (spec.kind) {
        case RingSpec::Kind::Zmod:
            out << "Z/" << spec.n;
            break;
        case RingSpec::Kind::GaloisField:
            out << "GF(" << spec.n << ")";
            break;
        case RingSpec::Kind::DualNumbers:
            out << "dual(" << print_ring_spec(*spec.args[0]) << ",h=" << spec.n << ")";
            break;
        case RingSpec::Kind::TwistedDual:
            out << "dual(" << print_ring_spec(*spec.args[0]) << ",h=2,frob=" << spec.frob << ")";
            break;
        case RingSpec::Kind::MatrixRing:
            out << "mat(" << spec.n << "," << print_ring_spec(*spec.args[0]) << ")";
            break;
        case RingSpec::Kind::Product: {
            out << "prod(";
            for (size_t i = 0; i < spec.args.size(); ++i) {
                if (i) out << ",";
                out << print_ring_spec(*spec.args[i]);
            }
            out << ")";
            break;
        }
        case RingSpec::Kind::ExteriorAlgebra:
            out << "ext(" << print_ring_spec(*spec.args[0]) << ",n=" << spec.n << ")";
            break;
        case RingSpec::Kind::TableRing:
            out << "table(" << spec.path << ")";
            break;
    }
    return out.str();
}

Int spec_order(const RingSpec& spec) {
    switch (spec.kind) {
        case RingSpec::Kind::Zmod:
        case RingSpec::Kind::GaloisField:
            return spec.n;
        case RingSpec::Kind::DualNumbers:
            return int_pow(spec_order(*spec.args[0]), static_cast<unsigned>(spec.n));
        case RingSpec::Kind::TwistedDual:
            return int_pow(spec_order(*spec.args[0]), 2);
        case RingSpec::Kind::MatrixRing:
            return int_pow(spec_order(*spec.args[0]), static_cast<unsigned>(spec.n * spec.n));
        case RingSpec::Kind::Product: {
            Int r = 1;
            for (const auto& a : spec.args) r *= spec_order(*a);
            return r;
        }
        case RingSpec::Kind::ExteriorAlgebra: {
            if (spec.n > 20) return Int(1) << 62;  // certainly over any sane cap
            return int_pow(spec_order(*spec.args[0]), 1u << static_cast<unsigned>(spec.n));
        }
        case RingSpec::Kind::TableRing: {
            std::ifstream in(spec.path);
            if (!in) throw ParseError("cannot open table file '" + spec.path + "'", 1, 1);
            // first two tokens outside comments must be `ring <order>`
            std::vector<std::string> head;
            std::string line;
            while (std::getline(in, line) && head.size() < 2) {
                size_t hash = line.find('#');
                if (hash != std::string::npos) line.resize(hash);
                std::istringstream ls(line);
                std::string tok;
                while (ls >> tok && head.size() < 2) head.push_back(tok);
            }
            long long order = 0;
            try {
                if (head.size() == 2 && head[0] == "ring") order = std::stoll(head[1]);
            } catch (...) {
                order = 0;
            }
            if (order < 2) throw ParseError("table file must start with 'ring <order>'", 1, 1);
            return order;
        }
    }
    throw std::logic_error("unreachable spec kind");
}

}  // namespace ringline
