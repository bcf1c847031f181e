#include "zdga/ringspec.hpp"

#include <cctype>

#include "zdga/errors.hpp"

namespace zdga {

namespace {

struct PrimePower {
    int p;
    int k;
};

bool decompose_prime_power(long q, PrimePower& out) {
    if (q < 2) return false;
    int p = 2;
    while (q % p != 0) {
        ++p;
        if (static_cast<long>(p) * p > q) {
            p = static_cast<int>(q);
            break;
        }
    }
    long rest = q;
    int k = 0;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    out = {p, k};
    return rest == 1;
}

std::string poly_to_string(const std::vector<int>& coeffs) {
    std::string out;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
        int c = coeffs[i];
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c);
            out += 'x';
            if (i > 1) out += '^' + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    RingSpec run() {
        RingSpec spec = parse_spec();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return spec;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ == text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool try_consume(std::string_view literal, bool ci = false) {
        skip_ws();
        if (text_.size() - pos_ < literal.size()) return false;
        for (std::size_t i = 0; i < literal.size(); ++i) {
            char a = text_[pos_ + i];
            char b = literal[i];
            if (ci) {
                a = static_cast<char>(std::tolower(static_cast<unsigned char>(a)));
                b = static_cast<char>(std::tolower(static_cast<unsigned char>(b)));
            }
            if (a != b) return false;
        }
        pos_ += literal.size();
        return true;
    }

    void expect(std::string_view literal, bool ci = false) {
        if (!try_consume(literal, ci))
            throw ParseError("expected '" + std::string(literal) + "'", pos_);
    }

    long parse_int() {
        skip_ws();
        if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("expected an integer", pos_);
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1000000) throw ParseError("integer too large", pos_);
            ++pos_;
        }
        return value;
    }

    // The product separator: "x", "X" or the UTF-8 multiplication sign.
    bool try_product_sep() {
        skip_ws();
        if (pos_ < text_.size() && (text_[pos_] == 'x' || text_[pos_] == 'X')) {
            ++pos_;
            return true;
        }
        if (text_.size() - pos_ >= 2 && static_cast<unsigned char>(text_[pos_]) == 0xC3 &&
            static_cast<unsigned char>(text_[pos_ + 1]) == 0x97) {
            pos_ += 2;
            return true;
        }
        return false;
    }

    RingSpec parse_spec() {
        std::size_t begin = pos_;
        RingSpec first = parse_term();
        std::vector<RingSpec> factors;
        factors.push_back(std::move(first));
        while (try_product_sep()) factors.push_back(parse_term());
        if (factors.size() == 1) return std::move(factors.front());

        RingSpec spec;
        spec.kind = RingSpec::Kind::Product;
        spec.span_begin = begin;
        spec.span_end = pos_;
        // Flatten left-associatively parsed nested products.
        for (auto& f : factors) {
            if (f.kind == RingSpec::Kind::Product)
                for (auto& c : f.children) spec.children.push_back(std::move(c));
            else
                spec.children.push_back(std::move(f));
        }
        return spec;
    }

    RingSpec parse_term() {
        std::size_t begin = pos_;
        RingSpec base = parse_atom();
        if (!try_consume("(+)")) return base;

        std::size_t module_pos = pos_;
        RingSpec module = parse_atom();
        if (!module.equals(base))
            throw ParseError("idealization module must match the base ring", module_pos);
        long rank = 1;
        if (try_consume("^")) {
            std::size_t rank_pos = pos_;
            rank = parse_int();
            if (rank < 1) throw ParseError("idealization rank must be >= 1", rank_pos);
        }
        RingSpec spec;
        spec.kind = RingSpec::Kind::Idealization;
        spec.rank = static_cast<int>(rank);
        spec.children.push_back(std::move(base));
        spec.span_begin = begin;
        spec.span_end = pos_;
        return spec;
    }

    RingSpec parse_atom() {
        skip_ws();
        std::size_t begin = pos_;
        if (try_consume("(")) {
            RingSpec inner = parse_spec();
            expect(")");
            inner.span_begin = begin;
            inner.span_end = pos_;
            return inner;
        }
        if (try_consume("GF(", true)) {
            std::size_t arg_pos = pos_;
            long q = parse_int();
            expect(")");
            PrimePower pp{};
            if (!decompose_prime_power(q, pp))
                throw ParseError(std::to_string(q) + " is not a prime power", arg_pos);
            RingSpec spec;
            spec.kind = RingSpec::Kind::GF;
            spec.n = q;
            spec.span_begin = begin;
            spec.span_end = pos_;
            return spec;
        }
        if (try_consume("Z", true)) {
            std::size_t arg_pos = pos_;
            long n = parse_int();
            if (n < 2) throw ParseError("Zn requires n >= 2", arg_pos);
            if (try_consume("[")) {
                if (!try_consume("x", true)) throw ParseError("expected 'x'", pos_);
                expect("]");
                expect("/");
                expect("(");
                if (!is_prime(static_cast<int>(n)))
                    throw ParseError("quotient base Z" + std::to_string(n) +
                                         " must have prime modulus",
                                     arg_pos);
                std::vector<int> poly = parse_poly(static_cast<int>(n));
                expect(")");
                RingSpec spec;
                spec.kind = RingSpec::Kind::Quotient;
                spec.n = n;
                spec.poly = std::move(poly);
                spec.span_begin = begin;
                spec.span_end = pos_;
                return spec;
            }
            RingSpec spec;
            spec.kind = RingSpec::Kind::Zn;
            spec.n = n;
            spec.span_begin = begin;
            spec.span_end = pos_;
            return spec;
        }
        throw ParseError("expected a ring atom (Zn, GF(q), Zp[x]/(f) or parentheses)", pos_);
    }

    // Sum of monomials with nonnegative integer coefficients; reduced
    // modulo p and validated monic of degree >= 2.
    std::vector<int> parse_poly(int p) {
        std::size_t begin = pos_;
        std::vector<int> coeffs;
        while (true) {
            long coeff = 1;
            long exponent = 0;
            bool saw_coeff = false;
            skip_ws();
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                coeff = parse_int();
                saw_coeff = true;
                try_consume("*");
            }
            skip_ws();
            if (pos_ < text_.size() && (text_[pos_] == 'x' || text_[pos_] == 'X')) {
                ++pos_;
                exponent = 1;
                if (try_consume("^")) exponent = parse_int();
            } else if (!saw_coeff) {
                throw ParseError("expected a polynomial term", pos_);
            }
            if (exponent > 64) throw ParseError("polynomial degree too large", pos_);
            if (coeffs.size() <= static_cast<std::size_t>(exponent))
                coeffs.resize(exponent + 1, 0);
            coeffs[exponent] = static_cast<int>((coeffs[exponent] + coeff) % p);
            if (!try_consume("+")) break;
        }
        int deg = -1;
        for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
            if (coeffs[i] != 0) {
                deg = i;
                break;
            }
        if (deg < 2) throw ParseError("quotient modulus must have degree >= 2", begin);
        if (coeffs[deg] != 1) throw ParseError("quotient modulus must be monic", begin);
        coeffs.resize(deg + 1);
        return coeffs;
    }
};

} // namespace

std::string RingSpec::normalized() const {
    switch (kind) {
    case Kind::Zn:
        return "Z" + std::to_string(n);
    case Kind::GF:
        return "GF(" + std::to_string(n) + ")";
    case Kind::Quotient:
        return "Z" + std::to_string(n) + "[x]/(" + poly_to_string(poly) + ")";
    case Kind::Product: {
        std::string out;
        for (std::size_t i = 0; i < children.size(); ++i) {
            if (i) out += 'x';
            out += children[i].normalized();
        }
        return out;
    }
    case Kind::Idealization: {
        const RingSpec& base = children.front();
        std::string b = base.normalized();
        // "(+)" binds tighter than product, so composite bases need parens.
        if (base.kind == Kind::Product || base.kind == Kind::Idealization) b = "(" + b + ")";
        return b + "(+)" + b + "^" + std::to_string(rank);
    }
    }
    return {};
}

bool RingSpec::equals(const RingSpec& other) const {
    if (kind != other.kind || n != other.n || rank != other.rank || poly != other.poly ||
        children.size() != other.children.size())
        return false;
    for (std::size_t i = 0; i < children.size(); ++i)
        if (!children[i].equals(other.children[i])) return false;
    return true;
}

RingSpec parse(std::string_view text) {
    return Parser(text).run();
}

FiniteRing elaborate(const RingSpec& spec, const ElaborateOptions& options) {
    FiniteRing ring;
    switch (spec.kind) {
    case RingSpec::Kind::Zn:
        ring = build_zn(static_cast<int>(spec.n), options.max_order);
        break;
    case RingSpec::Kind::GF: {
        int p = 2;
        long rest = spec.n;
        while (rest % p != 0) ++p;
        int k = 0;
        while (rest % p == 0) {
            rest /= p;
            ++k;
        }
        ring = build_gf(p, k, options.max_order);
        break;
    }
    case RingSpec::Kind::Quotient:
        ring = build_quotient(static_cast<int>(spec.n), spec.poly, options.max_order);
        break;
    case RingSpec::Kind::Product: {
        std::vector<FiniteRing> factors;
        factors.reserve(spec.children.size());
        for (const auto& c : spec.children) factors.push_back(elaborate(c, options));
        ring = build_product(factors, options.max_order);
        break;
    }
    case RingSpec::Kind::Idealization:
        ring = build_idealization(elaborate(spec.children.front(), options), spec.rank,
                                  options.max_order);
        break;
    }
    ring.spec_text = spec.normalized();
    return ring;
}

FiniteRing build_ring(std::string_view text, const ElaborateOptions& options) {
    return elaborate(parse(text), options);
}

} // namespace zdga
